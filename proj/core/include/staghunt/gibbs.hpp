#pragma once

#include <cstdint>
#include <vector>

#include "staghunt/game.hpp"
#include "staghunt/graph.hpp"

namespace staghunt {

// Enumeration budgets: distributions stored per profile are capped at
// 2^26 entries; streamed reductions (only mu(a*) and Z retained) go to 30.
inline constexpr int kGibbsStoredCap = 26;
inline constexpr int kGibbsStreamCap = 30;

// Exact stationary law of LLL over all 2^n profiles, in log space.
// Index convention: bit i of the profile index is agent i's action.
class GibbsDistribution {
public:
    int agent_count() const { return n_; }
    double log_partition() const { return log_partition_; }
    const std::vector<double>& log_weights() const { return log_weights_; }

    double log_probability(std::uint64_t mask) const {
        return log_weights_[mask] - log_partition_;
    }
    double probability(std::uint64_t mask) const;
    double probability(const ActionProfile& a) const { return probability(a.to_mask()); }

    // Dense probability vector, indexed by profile mask.
    std::vector<double> probabilities() const;

private:
    friend GibbsDistribution exact_gibbs(const Graph&, double, double, PotentialForm);
    GibbsDistribution() = default;

    int n_ = 0;
    std::vector<double> log_weights_;  // beta * Phi(a)
    double log_partition_ = 0.0;
};

// Exact Gibbs distribution with log-weights beta * Phi(a). The reduced and
// full potential forms give identical probabilities (constants cancel).
GibbsDistribution exact_gibbs(const Graph& g, double theta, double beta,
                              PotentialForm form = PotentialForm::Reduced);

// mu(a* | beta) for the potential maximizer a*, streamed (n <= 30).
// At theta = 1/2 both constant profiles maximize; this reports mu(ones).
double stationary_prob_star(const Graph& g, double theta, double beta);

// mu(zeros) + mu(ones); the natural coordination mass at theta = 1/2.
double stationary_prob_consensus(const Graph& g, double theta, double beta);

// log Z over spin profiles with the Ising potential (streamed, n <= 30).
double log_partition_ising(const Graph& g, double theta, double beta);

struct BetaMinResult {
    double beta_min = 0.0;
    double delta = 0.0;
    double achieved_mu = 0.0;  // mu(a*) at beta_min, >= 1 - delta
    int iterations = 0;        // bisection steps
};

// Smallest beta with mu(a* | beta) >= 1 - delta, found by bracketing
// (doubling from 1) and bisection to absolute tolerance tol; valid
// because mu(a*) is strictly increasing in beta. Requires theta != 1/2.
BetaMinResult beta_min(const Graph& g, double theta, double delta, double tol = 1e-6);

// Closed-form upper bound on beta_min for connected K-regular graphs:
// |(1/2 - theta) K|^{-1} (log(1-delta)/N - log(1 - e^{log(1-delta)/N})).
double beta_min_upper_bound(int k, int n, double theta, double delta);

// Sigmoid-power lower bound for K-regular graphs:
// mu(a*) >= (1 + e^{-beta K |1/2 - theta|})^{-N}. Exact at beta = 0.
double sigmoid_lower_bound_regular(int k, int n, double theta, double beta);

// Spectral lower bound mu(a*) >= (1 + e^{-beta lambda_1 |1-2 theta| / 2})^{-N};
// coincides with the sigmoid bound on regular graphs where lambda_1 = K.
double spectral_lower_bound(const Graph& g, double theta, double beta);

}  // namespace staghunt
