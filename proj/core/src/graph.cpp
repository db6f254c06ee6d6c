#include "staghunt/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace staghunt {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex index " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n));
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adj_.assign(n, {});
    g.degrees_.assign(n, 0);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    for (int v = 0; v < n; ++v) g.degrees_[v] = static_cast<int>(g.adj_[v].size());
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

int Graph::regular_degree() const {
    const int k = degrees_.empty() ? 0 : degrees_[0];
    for (int d : degrees_)
        if (d != k) return -1;
    return k;
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0LL);
}

long long DegreeSequence::sum_of_squares() const {
    long long s = 0;
    for (int d : degrees) s += static_cast<long long>(d) * d;
    return s;
}

bool DegreeSequence::is_graphical() const {
    const int n = size();
    std::vector<int> d = degrees;
    for (int v : d)
        if (v < 0 || v > n - 1) return false;
    if (sum() % 2 != 0) return false;
    std::sort(d.begin(), d.end(), std::greater<int>());
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
        if (prefix > rhs) return false;
    }
    return true;
}

Graph build_k_regular(int n, int k) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("degree k=" + std::to_string(k) + " out of range [0, n-1]");
    if ((static_cast<long long>(n) * k) % 2 != 0)
        throw std::invalid_argument("no k-regular graph: n*k is odd");
    if (n > 1 && (k == 0 || (k == 1 && n > 2)))
        throw std::invalid_argument("requested regular graph would be disconnected");

    std::vector<Graph::Edge> edges;
    for (int off = 1; off <= k / 2; ++off)
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + off) % n);
    if (k % 2 == 1)  // n is even here by the parity check
        for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
    return Graph::from_edges(n, edges);
}

Graph build_k_regular(int n, int k, std::uint64_t shuffle_seed) {
    const Graph base = build_k_regular(n, k);
    Rng rng(shuffle_seed);
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(label[i], label[rng.next_int(0, i)]);
    std::vector<Graph::Edge> edges;
    edges.reserve(base.edge_count());
    for (auto [u, v] : base.edges()) edges.emplace_back(label[u], label[v]);
    return Graph::from_edges(n, edges);
}

namespace {

Graph complement_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// 2-factor of a graph whose degrees are all even and positive: Eulerian
// orientation per component, then a perfect matching in the tails-vs-heads
// bipartite graph (regularity of that graph guarantees one exists when the
// input is regular; Petersen's 2-factor theorem). Returns the edge set, or
// empty on failure.
std::vector<Graph::Edge> two_factor(const Graph& h) {
    const int n = h.vertex_count();
    for (int v = 0; v < n; ++v)
        if (h.degree(v) == 0 || h.degree(v) % 2 != 0) return {};

    // Eulerian circuits via Hierholzer, orienting each edge once.
    std::vector<std::vector<std::pair<int, int>>> inc(n);  // (neighbor, edge id)
    for (int id = 0; id < static_cast<int>(h.edge_count()); ++id) {
        auto [u, v] = h.edges()[id];
        inc[u].emplace_back(v, id);
        inc[v].emplace_back(u, id);
    }
    std::vector<char> used_edge(h.edge_count(), 0);
    std::vector<std::size_t> next_arc(n, 0);
    std::vector<std::vector<int>> out(n);  // directed arcs u -> v
    for (int start = 0; start < n; ++start) {
        std::vector<int> stack{start};
        std::vector<int> circuit;
        while (!stack.empty()) {
            const int v = stack.back();
            while (next_arc[v] < inc[v].size() && used_edge[inc[v][next_arc[v]].second])
                ++next_arc[v];
            if (next_arc[v] == inc[v].size()) {
                circuit.push_back(v);
                stack.pop_back();
            } else {
                auto [u, id] = inc[v][next_arc[v]];
                used_edge[id] = 1;
                stack.push_back(u);
            }
        }
        for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
            out[circuit[i + 1]].push_back(circuit[i]);
    }

    // Perfect matching of tails to heads (Kuhn's augmenting paths).
    std::vector<int> head_of(n, -1), tail_of(n, -1);
    std::vector<char> visited(n, 0);
    auto try_kuhn = [&](auto&& self, int u) -> bool {
        for (int v : out[u]) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (tail_of[v] == -1 || self(self, tail_of[v])) {
                head_of[u] = v;
                tail_of[v] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!try_kuhn(try_kuhn, u)) return {};
    }

    std::vector<Graph::Edge> factor;
    factor.reserve(n);
    for (int u = 0; u < n; ++u) {
        int v = head_of[u];
        if (u < v) factor.emplace_back(u, v);
        else factor.emplace_back(v, u);
    }
    return factor;
}

}  // namespace

Graph augment_regular(const Graph& g, Rng& rng) {
    const int n = g.vertex_count();
    const int k = g.regular_degree();
    if (k < 0) throw std::invalid_argument("augment_regular: graph is not regular");
    if (!g.is_connected()) throw std::invalid_argument("augment_regular: graph is not connected");

    // The rng only varies which matching/2-factor of the complement is
    // found; the output is always a supergraph of g. Search on a randomly
    // relabelled copy of the complement and map the edges back.
    std::vector<int> label(n), inverse(n);
    std::iota(label.begin(), label.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(label[i], label[rng.next_int(0, i)]);
    for (int v = 0; v < n; ++v) inverse[label[v]] = v;

    const Graph comp = complement_graph(g);
    std::vector<Graph::Edge> shuffled;
    shuffled.reserve(comp.edge_count());
    for (auto [u, v] : comp.edges()) shuffled.emplace_back(label[u], label[v]);
    const Graph comp_shuffled = Graph::from_edges(n, shuffled);

    std::vector<Graph::Edge> edges = g.edges();
    if (n % 2 == 0) {
        if (k >= n - 1) throw std::invalid_argument("augment_regular: k must be < n-1 for even n");
        const std::vector<int> match = max_matching(comp_shuffled);
        for (int v = 0; v < n; ++v)
            if (match[v] == -1)
                throw std::runtime_error(
                    "augment_regular: complement has no perfect matching");
        for (int v = 0; v < n; ++v)
            if (v < match[v]) edges.emplace_back(inverse[v], inverse[match[v]]);
    } else {
        if (k % 2 != 0) throw std::invalid_argument("augment_regular: k must be even for odd n");
        if (k >= n - 2) throw std::invalid_argument("augment_regular: k must be < n-2 for odd n");
        const std::vector<Graph::Edge> factor = two_factor(comp_shuffled);
        if (factor.empty())
            throw std::runtime_error("augment_regular: complement has no 2-factor");
        for (auto [u, v] : factor) edges.emplace_back(inverse[u], inverse[v]);
    }

    const Graph result = Graph::from_edges(n, edges);
    const int expect = k + (n % 2 == 0 ? 1 : 2);
    if (result.regular_degree() != expect)
        throw std::runtime_error("augment_regular: augmentation is not regular");
    return result;
}

Graph add_edge_successor(const Graph& g, int i, int j) {
    check_vertex(i, g.vertex_count());
    check_vertex(j, g.vertex_count());
    if (i == j) throw std::invalid_argument("add_edge_successor: self-loop");
    if (g.has_edge(i, j)) throw std::invalid_argument("add_edge_successor: edge already present");
    std::vector<Graph::Edge> edges = g.edges();
    edges.emplace_back(std::min(i, j), std::max(i, j));
    return Graph::from_edges(g.vertex_count(), edges);
}

Graph random_connected_graph(int n, int m, Rng& rng) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges)
        throw std::invalid_argument("edge count m=" + std::to_string(m) +
                                    " outside [n-1, n(n-1)/2]");

    std::vector<Graph::Edge> edges;
    if (n == 1) return Graph::from_edges(1, edges);

    // Uniform random labelled tree via Pruefer decoding.
    if (n == 2) {
        edges.emplace_back(0, 1);
    } else {
        std::vector<int> prufer(n - 2);
        for (int& p : prufer) p = rng.next_int(0, n - 1);
        std::vector<int> remaining(n, 0);
        for (int p : prufer) ++remaining[p];
        std::vector<char> leafed(n, 0);
        for (int p : prufer) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (!leafed[v] && remaining[v] == 0) { leaf = v; break; }
            leafed[leaf] = 1;
            edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
            --remaining[p];
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (!leafed[v]) (a == -1 ? a : b) = v;
        edges.emplace_back(a, b);
    }

    Graph g = Graph::from_edges(n, edges);
    int to_add = m - (n - 1);
    while (to_add > 0) {
        const int u = rng.next_int(0, n - 1);
        const int v = rng.next_int(0, n - 1);
        if (u == v || g.has_edge(u, v)) continue;
        g = add_edge_successor(g, u, v);
        --to_add;
    }
    return g;
}

Graph erdos_renyi(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(p)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {

// Power iteration on (A + I) restricted to one component; A + I is
// primitive on a connected component, so the iteration cannot oscillate
// on bipartite graphs.
double component_spectral_radius(const Graph& g, const std::vector<int>& comp, double tol,
                                 int max_iters) {
    if (comp.size() == 1) return 0.0;
    std::vector<double> x(g.vertex_count(), 0.0), y(g.vertex_count(), 0.0);
    const double init = 1.0 / std::sqrt(static_cast<double>(comp.size()));
    for (int v : comp) x[v] = init;

    double lambda = 0.0;
    for (int iter = 0; iter < max_iters; ++iter) {
        for (int v : comp) {
            double acc = x[v];  // the +I shift
            for (int u : g.neighbors(v)) acc += x[u];
            y[v] = acc;
        }
        double rayleigh = 0.0, norm2 = 0.0;
        for (int v : comp) {
            rayleigh += x[v] * y[v];
            norm2 += y[v] * y[v];
        }
        const double next = rayleigh - 1.0;  // undo the shift
        const double inv_norm = 1.0 / std::sqrt(norm2);
        for (int v : comp) x[v] = y[v] * inv_norm;
        if (iter > 0 && std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next))) {
            // One residual check: ||Ax - lambda x|| on the normalized vector.
            double res = 0.0;
            for (int v : comp) {
                double av = 0.0;
                for (int u : g.neighbors(v)) av += x[u];
                res += (av - next * x[v]) * (av - next * x[v]);
            }
            if (std::sqrt(res) <= 10 * tol * std::max(1.0, std::abs(next))) return next;
        }
        lambda = next;
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge");
}

}  // namespace

double spectral_radius(const Graph& g, double tol) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("spectral_radius: empty graph");

    std::vector<int> comp_id(n, -1);
    double best = 0.0;
    for (int root = 0; root < n; ++root) {
        if (comp_id[root] != -1) continue;
        std::vector<int> comp{root};
        comp_id[root] = root;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : g.neighbors(comp[i]))
                if (comp_id[u] == -1) {
                    comp_id[u] = root;
                    comp.push_back(u);
                }
        best = std::max(best, component_spectral_radius(g, comp, tol, 200000));
    }
    return best;
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
    if (n < 1) throw std::runtime_error("edge list: n must be positive");
    if (m < 0) throw std::runtime_error("edge list: negative edge count");
    std::vector<Graph::Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated after header");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);  // validates loops and ranges
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace staghunt
