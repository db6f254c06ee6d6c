#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "staghunt/graph.hpp"

namespace staghunt {

// Spin-coupling constant c = 1/4 - theta/2 of the Ising form.
inline double spin_coupling(double theta) { return 0.25 - 0.5 * theta; }

// Task difficulty and rationality of the stag hunt game.
struct GameParams {
    double theta = 0.0;  // task difficulty
    double beta = 0.0;   // rationality (logit inverse temperature), >= 0

    double spin_coupling() const { return staghunt::spin_coupling(theta); }
};

// Joint action a in {0,1}^n with a cached Hamming weight.
class ActionProfile {
public:
    explicit ActionProfile(int n) : bits_(n, 0), hamming_(0) {}

    static ActionProfile zeros(int n) { return ActionProfile(n); }
    static ActionProfile ones(int n);
    static ActionProfile from_mask(std::uint64_t mask, int n);  // bit i = action of agent i
    static ActionProfile from_bits(std::vector<std::uint8_t> bits);

    int size() const { return static_cast<int>(bits_.size()); }
    int bit(int i) const { return bits_[i]; }
    int hamming() const { return hamming_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    void set(int i, int value);
    void flip(int i) { set(i, 1 - bits_[i]); }

    std::uint64_t to_mask() const;  // requires size() <= 64

    bool operator==(const ActionProfile&) const = default;

private:
    std::vector<std::uint8_t> bits_;
    int hamming_;
};

// +-1 reparameterization s_i = 2 a_i - 1.
class SpinProfile {
public:
    static SpinProfile from_actions(const ActionProfile& a);
    static SpinProfile from_spins(std::vector<int> spins);  // validates entries
    static SpinProfile minus_ones(int n);
    static SpinProfile plus_ones(int n);

    ActionProfile to_actions() const;
    int size() const { return static_cast<int>(spins_.size()); }
    int spin(int i) const { return spins_[i]; }
    void flip(int i) { spins_[i] = -spins_[i]; }
    const std::vector<int>& spins() const { return spins_; }

private:
    SpinProfile() = default;
    std::vector<int> spins_;
};

// Pure-strategy equilibrium / potential-maximizer set: for the pairwise
// game all_zeros stands for (0,0) and all_ones for (1,1); for the network
// game they stand for the constant profiles.
struct NashSet {
    bool all_zeros = false;
    bool all_ones = false;
};

// Pairwise stag hunt payoff a_i * (a_j - theta).
double pairwise_payoff(int a_i, int a_j, double theta);

// Network payoff of agent i: a_i * (sum of neighbor actions - theta * d_i).
double utility(const Graph& g, const ActionProfile& a, int i, double theta);

// Integer decomposition of the potentials. The exact enumerators track
// these incrementally and combine them with the same expressions below,
// which makes streamed and direct evaluations bit-identical.
struct PotentialTerms {
    long long inside_edges;  // edges with both endpoints active / q = sum of s_i s_j over edges
    long long degree_mass;   // sum of d_i over active vertices / l = sum of d_i s_i
};

PotentialTerms reduced_potential_terms(const Graph& g, const ActionProfile& a);
PotentialTerms ising_potential_terms(const Graph& g, const SpinProfile& s);

inline double reduced_potential_value(PotentialTerms t, double theta) {
    return static_cast<double>(t.inside_edges) - theta * static_cast<double>(t.degree_mass);
}

inline double ising_potential_value(PotentialTerms t, double theta) {
    return 0.25 * static_cast<double>(t.inside_edges) +
           spin_coupling(theta) * static_cast<double>(t.degree_mass);
}

// Potential without its constant term: (edges inside the active set)
// - theta * (degree mass of the active set).
double potential_reduced(const Graph& g, const ActionProfile& a, double theta);

// Potential including the constant term theta * |E|.
double potential_full(const Graph& g, const ActionProfile& a, double theta);

// Spin-parameterized potential (constant term dropped):
// (1/4) sum_{(i,j) in E} s_i s_j + (1/4 - theta/2) sum_i d_i s_i.
double ising_potential(const Graph& g, const SpinProfile& s, double theta);

// Pure Nash equilibria of the two-player game as a function of theta.
NashSet pairwise_nash_set(double theta);

// Maximizers of the potential over a connected graph: all-ones below
// theta = 1/2, all-zeros above, both at the tie.
NashSet potential_maximizers(const Graph& g, double theta);

enum class PotentialForm { Reduced, Full };

// Exhaustively checks the exact-potential identity
// U_i(flip) - U_i(a) = Phi(flip) - Phi(a) over all profiles and agents.
// Requires n <= 20; tolerance 1e-9.
bool verify_exact_potential(const Graph& g, double theta, PotentialForm form);

// Same check against an arbitrary candidate potential (used for negative
// controls in tests).
using PotentialFn = std::function<double(const Graph&, const ActionProfile&, double)>;
bool verify_exact_potential(const Graph& g, double theta, const PotentialFn& phi);

}  // namespace staghunt
