#include "staghunt/game.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace staghunt {

ActionProfile ActionProfile::ones(int n) {
    ActionProfile a(n);
    a.bits_.assign(n, 1);
    a.hamming_ = n;
    return a;
}

ActionProfile ActionProfile::from_mask(std::uint64_t mask, int n) {
    if (n > 64) throw std::invalid_argument("mask profiles support at most 64 agents");
    ActionProfile a(n);
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1ull) a.set(i, 1);
    return a;
}

ActionProfile ActionProfile::from_bits(std::vector<std::uint8_t> bits) {
    ActionProfile a(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw std::invalid_argument("action bits must be 0 or 1");
        if (bits[i]) a.set(static_cast<int>(i), 1);
    }
    return a;
}

void ActionProfile::set(int i, int value) {
    if (i < 0 || i >= size()) throw std::out_of_range("agent index out of range");
    hamming_ += value - bits_[i];
    bits_[i] = static_cast<std::uint8_t>(value);
}

std::uint64_t ActionProfile::to_mask() const {
    if (size() > 64) throw std::invalid_argument("mask profiles support at most 64 agents");
    std::uint64_t mask = 0;
    for (int i = 0; i < size(); ++i)
        if (bits_[i]) mask |= 1ull << i;
    return mask;
}

SpinProfile SpinProfile::from_actions(const ActionProfile& a) {
    SpinProfile s;
    s.spins_.resize(a.size());
    for (int i = 0; i < a.size(); ++i) s.spins_[i] = 2 * a.bit(i) - 1;
    return s;
}

SpinProfile SpinProfile::from_spins(std::vector<int> spins) {
    for (int v : spins)
        if (v != 1 && v != -1) throw std::invalid_argument("spins must be +1 or -1");
    SpinProfile s;
    s.spins_ = std::move(spins);
    return s;
}

SpinProfile SpinProfile::minus_ones(int n) { return from_spins(std::vector<int>(n, -1)); }
SpinProfile SpinProfile::plus_ones(int n) { return from_spins(std::vector<int>(n, 1)); }

ActionProfile SpinProfile::to_actions() const {
    ActionProfile a(size());
    for (int i = 0; i < size(); ++i)
        if (spins_[i] == 1) a.set(i, 1);
    return a;
}

double pairwise_payoff(int a_i, int a_j, double theta) {
    if ((a_i != 0 && a_i != 1) || (a_j != 0 && a_j != 1))
        throw std::invalid_argument("actions must be 0 or 1");
    return a_i * (a_j - theta);
}

double utility(const Graph& g, const ActionProfile& a, int i, double theta) {
    if (i < 0 || i >= g.vertex_count()) throw std::out_of_range("agent index out of range");
    if (a.size() != g.vertex_count())
        throw std::invalid_argument("profile size does not match graph");
    if (a.bit(i) == 0) return 0.0;
    long long neighbor_sum = 0;
    for (int j : g.neighbors(i)) neighbor_sum += a.bit(j);
    return static_cast<double>(neighbor_sum) - theta * g.degree(i);
}

PotentialTerms reduced_potential_terms(const Graph& g, const ActionProfile& a) {
    if (a.size() != g.vertex_count())
        throw std::invalid_argument("profile size does not match graph");
    PotentialTerms t{0, 0};
    for (auto [u, v] : g.edges())
        if (a.bit(u) && a.bit(v)) ++t.inside_edges;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (a.bit(i)) t.degree_mass += g.degree(i);
    return t;
}

PotentialTerms ising_potential_terms(const Graph& g, const SpinProfile& s) {
    if (s.size() != g.vertex_count())
        throw std::invalid_argument("profile size does not match graph");
    PotentialTerms t{0, 0};
    for (auto [u, v] : g.edges()) t.inside_edges += s.spin(u) * s.spin(v);
    for (int i = 0; i < g.vertex_count(); ++i)
        t.degree_mass += static_cast<long long>(g.degree(i)) * s.spin(i);
    return t;
}

double potential_reduced(const Graph& g, const ActionProfile& a, double theta) {
    return reduced_potential_value(reduced_potential_terms(g, a), theta);
}

double potential_full(const Graph& g, const ActionProfile& a, double theta) {
    return potential_reduced(g, a, theta) + theta * static_cast<double>(g.edge_count());
}

double ising_potential(const Graph& g, const SpinProfile& s, double theta) {
    return ising_potential_value(ising_potential_terms(g, s), theta);
}

NashSet pairwise_nash_set(double theta) {
    NashSet s;
    if (theta >= 0.0) s.all_zeros = true;
    if (theta <= 1.0) s.all_ones = true;
    return s;
}

NashSet potential_maximizers(const Graph& g, double theta) {
    if (!g.is_connected())
        throw std::invalid_argument("potential_maximizers requires a connected graph");
    NashSet s;
    if (theta >= 0.5) s.all_zeros = true;
    if (theta <= 0.5) s.all_ones = true;
    return s;
}

namespace {

constexpr double kPotentialIdentityTol = 1e-9;

bool verify_with(const Graph& g, double theta, const PotentialFn& phi) {
    const int n = g.vertex_count();
    if (n > 20)
        throw std::invalid_argument("verify_exact_potential: n=" + std::to_string(n) +
                                    " exceeds the exhaustive cap of 20");
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ActionProfile a = ActionProfile::from_mask(mask, n);
        const double phi_a = phi(g, a, theta);
        for (int i = 0; i < n; ++i) {
            const double u_a = utility(g, a, i, theta);
            ActionProfile flipped = a;
            flipped.flip(i);
            const double u_flipped = utility(g, flipped, i, theta);
            const double phi_flipped = phi(g, flipped, theta);
            if (std::abs((u_flipped - u_a) - (phi_flipped - phi_a)) > kPotentialIdentityTol)
                return false;
        }
    }
    return true;
}

}  // namespace

bool verify_exact_potential(const Graph& g, double theta, PotentialForm form) {
    if (form == PotentialForm::Reduced)
        return verify_with(g, theta, [](const Graph& gr, const ActionProfile& a, double th) {
            return potential_reduced(gr, a, th);
        });
    return verify_with(g, theta, [](const Graph& gr, const ActionProfile& a, double th) {
        return potential_full(gr, a, th);
    });
}

bool verify_exact_potential(const Graph& g, double theta, const PotentialFn& phi) {
    return verify_with(g, theta, phi);
}

}  // namespace staghunt
