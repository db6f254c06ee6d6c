#include "staghunt/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "staghunt/game.hpp"
#include "staghunt/gibbs.hpp"

namespace staghunt {

PotentialVariance potential_variance(const Graph& g, double theta) {
    PotentialVariance v;
    v.c = spin_coupling(theta);
    v.edge_term = static_cast<double>(g.edge_count()) / 16.0;
    long long sum_sq = 0;
    for (int d : g.degrees()) sum_sq += static_cast<long long>(d) * d;
    v.degree_term = v.c * v.c * static_cast<double>(sum_sq);
    v.sigma2 = v.edge_term + v.degree_term;
    return v;
}

DegreeSequence optimal_degree_sequence(int n, long long m) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges)
        throw std::invalid_argument("edge count m=" + std::to_string(m) +
                                    " outside [n-1, n(n-1)/2]");
    const long long degree_sum = 2 * m;
    const int base = static_cast<int>(degree_sum / n);
    const int remainder = static_cast<int>(degree_sum % n);
    DegreeSequence seq;
    seq.degrees.assign(n - remainder, base);
    seq.degrees.insert(seq.degrees.end(), remainder, base + 1);
    return seq;
}

namespace {

struct ComponentLabels {
    std::vector<int> label;
    int count = 0;
};

ComponentLabels components(int n, const std::vector<std::vector<int>>& adj) {
    ComponentLabels c;
    c.label.assign(n, -1);
    for (int root = 0; root < n; ++root) {
        if (c.label[root] != -1) continue;
        std::vector<int> stack{root};
        c.label[root] = c.count;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : adj[v])
                if (c.label[u] == -1) {
                    c.label[u] = c.count;
                    stack.push_back(u);
                }
        }
        ++c.count;
    }
    return c;
}

}  // namespace

Graph realize_degree_sequence(const DegreeSequence& seq, Rng& rng) {
    const int n = seq.size();
    if (n < 1) throw std::invalid_argument("degree sequence must be nonempty");
    if (!seq.is_graphical())
        throw std::invalid_argument("degree sequence is not graphical");
    if (n > 1) {
        for (int d : seq.degrees)
            if (d == 0)
                throw std::invalid_argument("degree-0 vertex cannot join a connected graph");
        if (seq.sum() / 2 < n - 1)
            throw std::invalid_argument("too few edges for any connected realization");
    }

    // Havel-Hakimi: satisfy the largest remaining degree against the next
    // largest ones; the processed vertex never receives further edges.
    std::vector<std::pair<int, int>> remaining(n);  // (residual degree, vertex)
    for (int v = 0; v < n; ++v) remaining[v] = {seq.degrees[v], v};
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(seq.sum() / 2));
    for (int round = 0; round < n; ++round) {
        std::sort(remaining.begin(), remaining.end(), std::greater<>());
        auto [d, v] = remaining.front();
        if (d == 0) break;
        if (d > static_cast<int>(remaining.size()) - 1)
            throw std::runtime_error("realize_degree_sequence: Havel-Hakimi step failed");
        remaining.front().first = 0;
        for (int i = 1; i <= d; ++i) {
            auto& [du, u] = remaining[i];
            if (du == 0)
                throw std::runtime_error("realize_degree_sequence: Havel-Hakimi step failed");
            --du;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }

    // Random degree-preserving 2-swaps between components until connected.
    constexpr int kSwapBudget = 10000;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto has_edge = [&](int u, int v) {
        return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    };
    int swaps = 0;
    for (;;) {
        const ComponentLabels comp = components(n, adj);
        if (comp.count == 1) break;
        bool swapped = false;
        while (!swapped) {
            if (++swaps > kSwapBudget)
                throw std::runtime_error(
                    "realize_degree_sequence: connectivity repair exceeded swap budget");
            const Graph::Edge e1 = edges[rng.next_below(edges.size())];
            const Graph::Edge e2 = edges[rng.next_below(edges.size())];
            const auto [a, b] = e1;
            const auto [c, d] = e2;
            if (comp.label[a] == comp.label[c]) continue;  // cross components only
            if (has_edge(a, c) || has_edge(b, d)) continue;
            auto erase_edge = [&](Graph::Edge e) {
                edges.erase(std::find(edges.begin(), edges.end(), e));
                auto& na = adj[e.first];
                auto& nb = adj[e.second];
                na.erase(std::find(na.begin(), na.end(), e.second));
                nb.erase(std::find(nb.begin(), nb.end(), e.first));
            };
            auto insert_edge = [&](int u, int v) {
                edges.emplace_back(std::min(u, v), std::max(u, v));
                adj[u].push_back(v);
                adj[v].push_back(u);
            };
            erase_edge(e1);
            erase_edge(e2);
            insert_edge(a, c);
            insert_edge(b, d);
            swapped = true;
        }
    }

    Graph g = Graph::from_edges(n, edges);
    if (g.degrees() != seq.degrees)
        throw std::runtime_error("realize_degree_sequence: realized degrees do not match");
    return g;
}

double gaussian_log_partition(double sigma2, double beta, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return n * std::log(2.0) + 0.5 * beta * beta * sigma2;
}

double taylor_mgf_small_beta(double sigma2, double beta) {
    return 1.0 + 0.5 * beta * beta * sigma2;
}

PoIResult price_of_irregularity(const Graph& g_regular, const Graph& g_irregular, double theta,
                                double beta) {
    if (g_regular.vertex_count() != g_irregular.vertex_count())
        throw std::invalid_argument("price_of_irregularity: vertex counts differ");
    if (g_regular.edge_count() != g_irregular.edge_count())
        throw std::invalid_argument("price_of_irregularity: edge counts differ");
    if (!g_regular.is_connected() || !g_irregular.is_connected())
        throw std::invalid_argument("price_of_irregularity: graphs must be connected");
    const int n = g_regular.vertex_count();
    if (n > kGibbsStoredCap)
        throw std::invalid_argument("price_of_irregularity: n exceeds the exact cap of 26");

    PoIResult result;
    result.exact_poi = log_partition_ising(g_irregular, theta, beta) -
                       log_partition_ising(g_regular, theta, beta);

    long long sum_sq = 0;
    for (int d : g_irregular.degrees()) sum_sq += static_cast<long long>(d) * d;
    const double mean_degree =
        2.0 * static_cast<double>(g_irregular.edge_count()) / static_cast<double>(n);
    result.degree_variance =
        static_cast<double>(sum_sq) / static_cast<double>(n) - mean_degree * mean_degree;

    const double c = spin_coupling(theta);
    result.approx_poi = 0.5 * beta * beta * c * c * n * result.degree_variance;
    return result;
}

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

CltReport clt_sample(const Graph& g, double theta, Rng& rng, long long samples,
                     std::vector<double>* normalized_out) {
    if (samples < 1000)
        throw std::invalid_argument("clt_sample: need at least 10^3 samples");
    const PotentialVariance var = potential_variance(g, theta);
    if (var.sigma2 <= 0.0)
        throw std::invalid_argument("clt_sample: sigma is zero (graph has no edges)");
    const double sigma = std::sqrt(var.sigma2);
    const int n = g.vertex_count();
    const double c = var.c;

    std::vector<int> spins(n);
    std::vector<double> z(samples);
    for (long long s = 0; s < samples; ++s) {
        std::uint64_t block = 0;
        for (int i = 0; i < n; ++i) {
            if (i % 64 == 0) block = rng.next_u64();
            spins[i] = ((block >> (i % 64)) & 1ull) ? 1 : -1;
        }
        long long q = 0, l = 0;
        for (auto [u, v] : g.edges()) q += spins[u] * spins[v];
        for (int i = 0; i < n; ++i) l += static_cast<long long>(g.degree(i)) * spins[i];
        z[s] = (0.25 * static_cast<double>(q) + c * static_cast<double>(l)) / sigma;
    }
    std::sort(z.begin(), z.end());

    double ks = 0.0;
    const double inv = 1.0 / static_cast<double>(samples);
    for (long long i = 0; i < samples; ++i) {
        const double cdf = standard_normal_cdf(z[i]);
        ks = std::max(ks, std::abs(cdf - static_cast<double>(i) * inv));
        ks = std::max(ks, std::abs(static_cast<double>(i + 1) * inv - cdf));
    }

    long long sum_sq = 0;
    for (int d : g.degrees()) sum_sq += static_cast<long long>(d) * d;

    CltReport report;
    report.max_degree_ratio = static_cast<double>(g.max_degree()) / sigma;
    report.degree_sum_ratio = static_cast<double>(sum_sq) / var.sigma2;
    report.ks_statistic = ks;
    report.sample_count = samples;
    if (normalized_out) *normalized_out = std::move(z);
    return report;
}

}  // namespace staghunt
