#include "staghunt/gibbs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "enumerate.hpp"

namespace staghunt {

namespace {

void check_beta(double beta) {
    if (beta < 0.0 || !std::isfinite(beta))
        throw std::invalid_argument("beta must be a finite nonnegative real");
}

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) +
                                    " exceeds the enumeration cap of " + std::to_string(cap));
}

// Maximizer used for reporting: ones below and at theta = 1/2, zeros above.
bool star_is_ones(double theta) { return theta <= 0.5; }

}  // namespace

double GibbsDistribution::probability(std::uint64_t mask) const {
    return std::exp(log_probability(mask));
}

std::vector<double> GibbsDistribution::probabilities() const {
    std::vector<double> p(log_weights_.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = std::exp(log_weights_[i] - log_partition_);
    return p;
}

GibbsDistribution exact_gibbs(const Graph& g, double theta, double beta, PotentialForm form) {
    check_beta(beta);
    const int n = g.vertex_count();
    check_cap(n, kGibbsStoredCap, "exact_gibbs");

    const double constant =
        form == PotentialForm::Full ? theta * static_cast<double>(g.edge_count()) : 0.0;

    GibbsDistribution dist;
    dist.n_ = n;
    dist.log_weights_.resize(1ull << n);
    detail::for_each_profile_reduced(
        g, [&](std::uint64_t mask, long long inside, long long mass) {
            const double phi = reduced_potential_value({inside, mass}, theta) + constant;
            dist.log_weights_[mask] = beta * phi;
        });

    detail::LogSumExp lse;
    for (double lw : dist.log_weights_) lse.add(lw);
    dist.log_partition_ = lse.value();
    return dist;
}

double stationary_prob_star(const Graph& g, double theta, double beta) {
    check_beta(beta);
    const int n = g.vertex_count();
    check_cap(n, kGibbsStreamCap, "stationary_prob_star");
    if (!g.is_connected())
        throw std::invalid_argument("stationary_prob_star requires a connected graph");

    detail::LogSumExp lse;
    detail::for_each_profile_reduced(g, [&](std::uint64_t, long long inside, long long mass) {
        lse.add(beta * reduced_potential_value({inside, mass}, theta));
    });

    double phi_star = 0.0;  // reduced potential of the all-zeros profile
    if (star_is_ones(theta)) {
        const long long edges = static_cast<long long>(g.edge_count());
        phi_star = reduced_potential_value({edges, 2 * edges}, theta);
    }
    return std::exp(beta * phi_star - lse.value());
}

double stationary_prob_consensus(const Graph& g, double theta, double beta) {
    check_beta(beta);
    const int n = g.vertex_count();
    check_cap(n, kGibbsStreamCap, "stationary_prob_consensus");
    if (!g.is_connected())
        throw std::invalid_argument("stationary_prob_consensus requires a connected graph");

    detail::LogSumExp lse;
    detail::for_each_profile_reduced(g, [&](std::uint64_t, long long inside, long long mass) {
        lse.add(beta * reduced_potential_value({inside, mass}, theta));
    });
    const long long edges = static_cast<long long>(g.edge_count());
    const double phi_ones = reduced_potential_value({edges, 2 * edges}, theta);
    const double log_z = lse.value();
    return std::exp(beta * phi_ones - log_z) + std::exp(-log_z);
}

double log_partition_ising(const Graph& g, double theta, double beta) {
    check_beta(beta);
    check_cap(g.vertex_count(), kGibbsStreamCap, "log_partition_ising");
    detail::LogSumExp lse;
    detail::for_each_profile_ising(g, [&](std::uint64_t, long long q, long long l) {
        lse.add(beta * ising_potential_value({q, l}, theta));
    });
    return lse.value();
}

BetaMinResult beta_min(const Graph& g, double theta, double delta, double tol) {
    if (theta == 0.5)
        throw std::invalid_argument("beta_min is undefined at theta = 1/2 (tied maximizers)");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0, 1)");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    check_cap(g.vertex_count(), kGibbsStoredCap, "beta_min");
    if (!g.is_connected()) throw std::invalid_argument("beta_min requires a connected graph");

    const double target = 1.0 - delta;
    auto mu = [&](double beta) { return stationary_prob_star(g, theta, beta); };

    BetaMinResult result;
    result.delta = delta;

    const double mu0 = mu(0.0);
    if (mu0 >= target) {  // uniform already coordinates enough
        result.achieved_mu = mu0;
        return result;
    }

    // Bracket: mu is strictly increasing in beta and tends to 1.
    double lo = 0.0, hi = 1.0;
    int doublings = 0;
    while (mu(hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 60)
            throw std::runtime_error("beta_min: bracket growth exceeded 60 doublings");
    }

    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mu(mid) >= target)
            hi = mid;
        else
            lo = mid;
        ++iterations;
    }

    result.beta_min = hi;
    result.achieved_mu = mu(hi);
    result.iterations = iterations;
    return result;
}

double beta_min_upper_bound(int k, int n, double theta, double delta) {
    if (theta == 0.5) throw std::invalid_argument("bound is undefined at theta = 1/2");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0, 1)");
    if (k < 1) throw std::invalid_argument("degree k must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be positive");
    const double log_target = std::log1p(-delta) / n;  // log(1-delta)/N, negative
    const double numerator = log_target - std::log(-std::expm1(log_target));
    return numerator / std::abs((0.5 - theta) * k);
}

namespace {

double sigmoid_power(double exponent_scale, double beta, int n) {
    // (1 / (1 + e^{-beta * scale}))^n computed in log space.
    const double x = beta * exponent_scale;
    return std::exp(-n * std::log1p(std::exp(-x)));
}

}  // namespace

double sigmoid_lower_bound_regular(int k, int n, double theta, double beta) {
    if (k < 0) throw std::invalid_argument("degree k must be nonnegative");
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_beta(beta);
    return sigmoid_power(k * std::abs(0.5 - theta), beta, n);
}

double spectral_lower_bound(const Graph& g, double theta, double beta) {
    check_beta(beta);
    if (!g.is_connected())
        throw std::invalid_argument("spectral_lower_bound requires a connected graph");
    const double lambda1 = spectral_radius(g);
    return sigmoid_power(lambda1 * std::abs(1.0 - 2.0 * theta) / 2.0, beta, g.vertex_count());
}

}  // namespace staghunt
