#pragma once

// Internal Gray-code profile enumerators. Successive profiles differ in
// one coordinate (flip bit = count of trailing zeros of the step index),
// so the integer potential terms update in O(1) via precomputed neighbor
// bitmasks. Visitors receive every mask exactly once, starting from 0.

#include <bit>
#include <cstdint>
#include <vector>

#include "staghunt/graph.hpp"

namespace staghunt::detail {

inline std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint64_t> nbr(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1ull << v;
        nbr[v] |= 1ull << u;
    }
    return nbr;
}

// visit(mask, inside_edges, degree_mass): binary-action terms, where
// inside_edges counts edges with both endpoints active and degree_mass is
// the degree sum over active vertices.
template <class Visit>
void for_each_profile_reduced(const Graph& g, Visit&& visit) {
    const int n = g.vertex_count();
    const auto nbr = neighbor_masks(g);
    std::uint64_t mask = 0;
    long long inside = 0, mass = 0;
    visit(mask, inside, mass);
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int i = std::countr_zero(t);
        const long long cnt = std::popcount(mask & nbr[i]);
        const long long di = g.degree(i);
        if ((mask >> i) & 1ull) {
            inside -= cnt;
            mass -= di;
        } else {
            inside += cnt;
            mass += di;
        }
        mask ^= 1ull << i;
        visit(mask, inside, mass);
    }
}

// visit(mask, q, l) over spin profiles (mask bit set <=> spin +1), where
// q = sum of s_i s_j over edges and l = sum of d_i s_i.
template <class Visit>
void for_each_profile_ising(const Graph& g, Visit&& visit) {
    const int n = g.vertex_count();
    const auto nbr = neighbor_masks(g);
    std::uint64_t mask = 0;  // all spins -1
    long long q = static_cast<long long>(g.edge_count());
    long long l = -2 * static_cast<long long>(g.edge_count());
    visit(mask, q, l);
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int i = std::countr_zero(t);
        const long long cnt = std::popcount(mask & nbr[i]);  // neighbors at +1
        const long long di = g.degree(i);
        const long long nbr_spin_sum = 2 * cnt - di;
        if ((mask >> i) & 1ull) {  // +1 -> -1
            q -= 2 * nbr_spin_sum;
            l -= 2 * di;
        } else {  // -1 -> +1
            q += 2 * nbr_spin_sum;
            l += 2 * di;
        }
        mask ^= 1ull << i;
        visit(mask, q, l);
    }
}

// Streaming log-sum-exp with Neumaier-compensated accumulation.
class LogSumExp {
public:
    void add(double x) {
        if (count_ == 0 || x > max_) {
            if (count_ != 0) {
                const double scale = std::exp(max_ - x);
                sum_ *= scale;
                comp_ *= scale;
            }
            max_ = x;
            accumulate(1.0);
        } else {
            accumulate(std::exp(x - max_));
        }
        ++count_;
    }

    double value() const { return max_ + std::log(sum_ + comp_); }
    std::uint64_t count() const { return count_; }

private:
    void accumulate(double term) {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
    }

    double max_ = 0.0;
    double sum_ = 0.0;
    double comp_ = 0.0;
    std::uint64_t count_ = 0;
};

}  // namespace staghunt::detail
