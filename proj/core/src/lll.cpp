#include "staghunt/lll.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace staghunt {

std::uint64_t default_burn_in(int n, double beta) {
    return static_cast<std::uint64_t>(100.0 * n * std::max(1.0, beta));
}

EmpiricalDistribution::EmpiricalDistribution(int n) : n_(n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("empirical distribution supports 1..64 agents");
    if (n <= 20) dense_.assign(1ull << n, 0);
}

std::uint64_t EmpiricalDistribution::count(std::uint64_t mask) const {
    if (!dense_.empty()) return dense_[mask];
    const auto it = sparse_.find(mask);
    return it == sparse_.end() ? 0 : it->second;
}

double EmpiricalDistribution::probability(std::uint64_t mask) const {
    if (total_ == 0) return 0.0;
    return static_cast<double>(count(mask)) / static_cast<double>(total_);
}

void EmpiricalDistribution::record(std::uint64_t mask) {
    if (!dense_.empty())
        ++dense_[mask];
    else
        ++sparse_[mask];
    ++total_;
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
    if (other.n_ != n_) throw std::invalid_argument("merge: mismatched agent counts");
    if (!dense_.empty()) {
        for (std::size_t m = 0; m < dense_.size(); ++m) dense_[m] += other.dense_[m];
    } else {
        for (const auto& [mask, c] : other.sparse_) sparse_[mask] += c;
    }
    total_ += other.total_;
}

std::vector<double> EmpiricalDistribution::probabilities() const {
    if (dense_.empty())
        throw std::invalid_argument("dense probabilities require n <= 20");
    std::vector<double> p(dense_.size(), 0.0);
    if (total_ == 0) return p;
    for (std::size_t m = 0; m < dense_.size(); ++m)
        p[m] = static_cast<double>(dense_[m]) / static_cast<double>(total_);
    return p;
}

namespace {

double stable_sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

// P(agent i plays 1) from the incremental utility of switching on.
double choice_prob_one(const Graph& g, const std::vector<std::uint8_t>& bits, int i,
                       double theta, double beta) {
    long long neighbor_sum = 0;
    for (int j : g.neighbors(i)) neighbor_sum += bits[j];
    const double gain = static_cast<double>(neighbor_sum) - theta * g.degree(i);
    return stable_sigmoid(beta * gain);
}

}  // namespace

double logit_choice_prob(const Graph& g, const ActionProfile& a, int i, double theta,
                         double beta) {
    if (i < 0 || i >= g.vertex_count()) throw std::out_of_range("agent index out of range");
    if (a.size() != g.vertex_count())
        throw std::invalid_argument("profile size does not match graph");
    return choice_prob_one(g, a.bits(), i, theta, beta);
}

ActionProfile step(const Graph& g, const ActionProfile& a, double theta, double beta,
                   Rng& rng) {
    ActionProfile next = a;
    const int i = static_cast<int>(rng.next_below(g.vertex_count()));
    const double p_one = choice_prob_one(g, a.bits(), i, theta, beta);
    next.set(i, rng.next_double() < p_one ? 1 : 0);
    return next;
}

EmpiricalDistribution simulate(const Graph& g, double theta, double beta,
                               const ChainConfig& config) {
    const int n = g.vertex_count();
    if (config.steps == 0) throw std::invalid_argument("simulate: steps must be positive");
    if (config.burn_in >= config.steps)
        throw std::invalid_argument("simulate: burn_in must be smaller than steps");
    if (config.initial && config.initial->size() != n)
        throw std::invalid_argument("simulate: initial profile size does not match graph");

    Rng rng(config.seed);
    std::vector<std::uint8_t> bits;
    if (config.initial) {
        bits = config.initial->bits();
    } else {
        bits.resize(n);
        for (int i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>(rng.next_u64() & 1ull);
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
        if (bits[i]) mask |= 1ull << i;

    EmpiricalDistribution hist(n);
    for (std::uint64_t t = 0; t < config.steps; ++t) {
        const int i = static_cast<int>(rng.next_below(n));
        const double p_one = choice_prob_one(g, bits, i, theta, beta);
        const std::uint8_t value = rng.next_double() < p_one ? 1 : 0;
        bits[i] = value;
        if (value)
            mask |= 1ull << i;
        else
            mask &= ~(1ull << i);
        if (t >= config.burn_in) hist.record(mask);
    }
    return hist;
}

std::vector<double> transition_matrix(const Graph& g, double theta, double beta) {
    const int n = g.vertex_count();
    if (n > 12)
        throw std::invalid_argument("transition_matrix: n=" + std::to_string(n) +
                                    " exceeds the dense cap of 12");
    const std::uint64_t size = 1ull << n;
    std::vector<double> kernel(size * size, 0.0);
    const double inv_n = 1.0 / n;
    std::vector<std::uint8_t> bits(n, 0);
    for (std::uint64_t mask = 0; mask < size; ++mask) {
        for (int i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1ull);
        double* row = kernel.data() + mask * size;
        for (int i = 0; i < n; ++i) {
            const double p_one = choice_prob_one(g, bits, i, theta, beta);
            row[mask | (1ull << i)] += inv_n * p_one;
            row[mask & ~(1ull << i)] += inv_n * (1.0 - p_one);
        }
    }
    return kernel;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("tv_distance: mismatched support sizes");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
    return 0.5 * acc;
}

}  // namespace staghunt
