#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "staghunt/graph.hpp"

namespace staghunt {

namespace {

// State for one alternating-tree search of the blossom algorithm.
struct BlossomSearch {
    const Graph& g;
    std::vector<int>& match;
    std::vector<int> parent, base;
    std::vector<char> used, in_blossom;

    explicit BlossomSearch(const Graph& graph, std::vector<int>& m)
        : g(graph), match(m), parent(graph.vertex_count(), -1),
          base(graph.vertex_count(), 0), used(graph.vertex_count(), 0),
          in_blossom(graph.vertex_count(), 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> on_path(g.vertex_count(), 0);
        int v = a;
        for (;;) {
            v = base[v];
            on_path[v] = 1;
            if (match[v] == -1) break;
            v = parent[match[v]];
        }
        v = b;
        for (;;) {
            v = base[v];
            if (on_path[v]) return v;
            v = parent[match[v]];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base[v] != stem) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    // Grows an alternating tree from root; returns the free vertex ending
    // an augmenting path, or -1 if none exists.
    int find_augmenting_path(int root) {
        used[root] = 1;
        std::iota(base.begin(), base.end(), 0);
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // Odd cycle: contract the blossom.
                    const int stem = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int u = 0; u < g.vertex_count(); ++u) {
                        if (!in_blossom[base[u]]) continue;
                        base[u] = stem;
                        if (!used[u]) {
                            used[u] = 1;
                            queue.push(u);
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    queue.push(match[to]);
                }
            }
        }
        return -1;
    }
};

void flip_along_path(std::vector<int>& match, const std::vector<int>& parent, int leaf) {
    int v = leaf;
    while (v != -1) {
        const int pv = parent[v];
        const int next = match[pv];
        match[v] = pv;
        match[pv] = v;
        v = next;
    }
}

}  // namespace

std::vector<int> max_matching(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> match(n, -1);

    // Greedy seed matching cuts down the number of augmenting searches.
    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        for (int u : g.neighbors(v)) {
            if (match[u] == -1) {
                match[v] = u;
                match[u] = v;
                break;
            }
        }
    }

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        BlossomSearch search(g, match);
        const int leaf = search.find_augmenting_path(v);
        if (leaf != -1) flip_along_path(match, search.parent, leaf);
    }
    return match;
}

Matching max_matching_pairs(const Graph& g) {
    const std::vector<int> match = max_matching(g);
    Matching result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (match[v] > v) result.pairs.emplace_back(v, match[v]);
    return result;
}

}  // namespace staghunt
