#pragma once

#include <cstdint>

#include "staghunt/graph.hpp"
#include "staghunt/rng.hpp"

namespace staghunt {

// Variance of the Ising potential under uniform random spins:
// sigma^2 = |E|/16 + c^2 sum_i d_i^2 with c = 1/4 - theta/2.
struct PotentialVariance {
    double sigma2 = 0.0;
    double edge_term = 0.0;    // |E|/16
    double degree_term = 0.0;  // c^2 sum d_i^2
    double c = 0.0;
};

PotentialVariance potential_variance(const Graph& g, double theta);

// Degree sequence minimizing sum d_i^2 subject to sum d_i = 2m and
// entries in [0, n-1]: constant K = 2m/n when integral, otherwise the
// floor/ceil mix (the least majorized sequence). Entries ascending.
DegreeSequence optimal_degree_sequence(int n, long long m);

// Connected simple graph with exactly these degrees: Havel-Hakimi
// construction followed by random degree-preserving 2-edge swaps until
// connected. Throws std::invalid_argument for non-graphical or
// never-connectable sequences and std::runtime_error if the repair
// exceeds its swap budget (10^4).
Graph realize_degree_sequence(const DegreeSequence& seq, Rng& rng);

// Gaussian approximation of the log partition: n log 2 + beta^2 sigma^2 / 2.
double gaussian_log_partition(double sigma2, double beta, int n);

// Second-order Taylor value of the potential MGF: 1 + beta^2 sigma^2 / 2.
double taylor_mgf_small_beta(double sigma2, double beta);

// Price of Irregularity between equal-size, equal-edge-count graphs.
// Sign convention: exact_poi = log Z_irregular - log Z_regular, which is
// log(mu_regular / mu_irregular) because the coordinated-profile
// numerators coincide; positive when the regular graph coordinates better.
struct PoIResult {
    double exact_poi = 0.0;
    double approx_poi = 0.0;       // beta^2 c^2 n Var(d_irregular) / 2
    double degree_variance = 0.0;  // population variance of irregular degrees
};

PoIResult price_of_irregularity(const Graph& g_regular, const Graph& g_irregular, double theta,
                                double beta);

// Empirical check of the normalized potential against N(0,1): draws
// uniform spin profiles, evaluates Phi~/sigma, and reports the
// Kolmogorov-Smirnov sup distance plus the two MCLT condition ratios.
struct CltReport {
    double max_degree_ratio = 0.0;  // Delta / sigma
    double degree_sum_ratio = 0.0;  // sum d_i^2 / sigma^2
    double ks_statistic = 0.0;
    long long sample_count = 0;
};

// If normalized_out is non-null it receives the sorted normalized samples.
CltReport clt_sample(const Graph& g, double theta, Rng& rng, long long samples,
                     std::vector<double>* normalized_out = nullptr);

double standard_normal_cdf(double x);

}  // namespace staghunt
