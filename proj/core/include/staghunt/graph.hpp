#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "staghunt/rng.hpp"

namespace staghunt {

// Undirected simple graph on n agents, immutable after construction.
// Vertices are 0-based. Edges are stored as (u, v) with u < v; neighbor
// lists are sorted. No self-loops, adjacency is symmetric and unweighted.
class Graph {
public:
    using Edge = std::pair<int, int>;

    // Builds a graph from an edge list. Duplicate edges (in either
    // orientation) are silently deduplicated; self-loops and out-of-range
    // indices throw std::invalid_argument.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const { return degrees_[v]; }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    // True iff a traversal from vertex 0 reaches all n vertices.
    bool is_connected() const;

    // Uniform degree if the graph is regular, -1 otherwise.
    int regular_degree() const;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> degrees_;
};

// Integer degree vector; input/output of the design optimizer.
struct DegreeSequence {
    std::vector<int> degrees;

    int size() const { return static_cast<int>(degrees.size()); }
    long long sum() const;
    long long sum_of_squares() const;
    // Erdos-Gallai test: true iff some simple graph realizes these degrees.
    bool is_graphical() const;
};

// Set of disjoint unordered vertex pairs.
struct Matching {
    std::vector<std::pair<int, int>> pairs;

    bool is_perfect(int n) const { return 2 * static_cast<int>(pairs.size()) == n; }
};

// Maximum cardinality matching in a general graph (blossom contraction).
// Returns match[v] = partner of v, or -1 if v is unmatched.
std::vector<int> max_matching(const Graph& g);

// Same matching as a pair set.
Matching max_matching_pairs(const Graph& g);

// Connected k-regular graph on n vertices: circulant base (offsets
// 1..k/2, plus the antipodal offset n/2 when k is odd), optionally
// relabelled by a seeded shuffle. Requires n*k even, 0 <= k <= n-1, and
// a connected outcome (k >= 2, or k = 1 with n = 2, or the trivial n = 1).
Graph build_k_regular(int n, int k);
Graph build_k_regular(int n, int k, std::uint64_t shuffle_seed);

// Degree-lifted regular graph: adds a perfect matching of the complement
// (n even, result (k+1)-regular) or a 2-factor of the complement (n odd,
// result (k+2)-regular). Throws std::runtime_error if the complement has
// no such structure, which can happen for particular inputs even under
// the stated preconditions (e.g. K_{3,3}).
Graph augment_regular(const Graph& g, Rng& rng);

// Same graph plus the single new edge (i, j); throws if present or i == j.
Graph add_edge_successor(const Graph& g, int i, int j);

// Connected graph with exactly m edges: uniform labelled spanning tree
// (Pruefer decode) plus m-n+1 distinct random non-edges. The distribution
// is not uniform over connected graphs.
Graph random_connected_graph(int n, int m, Rng& rng);

// G(n, p): each pair included independently with probability p.
// Connectivity is not guaranteed.
Graph erdos_renyi(int n, double p, Rng& rng);

// Largest adjacency eigenvalue via power iteration on A + I (per
// component for disconnected graphs). Throws std::runtime_error if the
// iteration does not reach tol within the iteration cap.
double spectral_radius(const Graph& g, double tol = 1e-10);

// Edge-list text format: first line "n m", then m lines "i j" (0-based).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace staghunt
