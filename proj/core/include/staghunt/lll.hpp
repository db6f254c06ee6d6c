#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "staghunt/game.hpp"
#include "staghunt/graph.hpp"
#include "staghunt/rng.hpp"

namespace staghunt {

// Run parameters for one asynchronous LLL chain. Agents are selected
// uniformly i.i.d. per step; the selected agent resamples its action from
// the logit kernel given its neighbors' current actions.
struct ChainConfig {
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;  // discarded prefix, must be < steps
    std::uint64_t seed = 0;
    std::optional<ActionProfile> initial;  // nullopt: uniform-random profile
};

// Heuristic default burn-in: 100 * n * max(1, beta) steps.
std::uint64_t default_burn_in(int n, double beta);

// Visit-count histogram over profile masks; dense storage for n <= 20,
// hashed sparse above (profiles are masks, so n <= 64).
class EmpiricalDistribution {
public:
    explicit EmpiricalDistribution(int n);

    int agent_count() const { return n_; }
    std::uint64_t total() const { return total_; }
    std::uint64_t count(std::uint64_t mask) const;
    double probability(std::uint64_t mask) const;

    void record(std::uint64_t mask);
    void merge(const EmpiricalDistribution& other);

    // Dense probability vector indexed by mask; requires n <= 20.
    std::vector<double> probabilities() const;

private:
    int n_;
    std::uint64_t total_ = 0;
    std::vector<std::uint64_t> dense_;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

// Probability that agent i selects action 1 given the others' actions:
// a numerically stable sigmoid of beta * (U_i(1, .) - U_i(0, .)), with
// U_i(0, .) = 0.
double logit_choice_prob(const Graph& g, const ActionProfile& a, int i, double theta,
                         double beta);

// One asynchronous update: a uniformly chosen agent resamples its action;
// all other coordinates are unchanged.
ActionProfile step(const Graph& g, const ActionProfile& a, double theta, double beta, Rng& rng);

// Runs the chain and returns the post-burn-in histogram.
EmpiricalDistribution simulate(const Graph& g, double theta, double beta,
                               const ChainConfig& config);

// Row-major 2^n x 2^n single-step kernel; rows sum to 1. Requires n <= 12.
std::vector<double> transition_matrix(const Graph& g, double theta, double beta);

// Total variation distance (1/2) sum |p - q| between equal-length
// probability vectors.
double tv_distance(std::span<const double> p, std::span<const double> q);

}  // namespace staghunt
