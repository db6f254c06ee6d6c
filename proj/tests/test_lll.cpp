#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "oracles.hpp"
#include "staghunt/gibbs.hpp"
#include "staghunt/graph.hpp"
#include "staghunt/lll.hpp"

using namespace staghunt;

namespace {

const Graph kTriangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});

}  // namespace

TEST_CASE("logit choice probability") {
    CHECK(logit_choice_prob(kTriangle, ActionProfile::zeros(3), 0, 0.3, 0.0) ==
          doctest::Approx(0.5));

    // Indifference: neighbor sum equals theta * d_i exactly.
    const Graph pair = Graph::from_edges(2, {{0, 1}});
    ActionProfile half(2);
    half.set(1, 1);
    CHECK(logit_choice_prob(pair, half, 0, 1.0, 3.7) == doctest::Approx(0.5));

    // Both triangle neighbors at 1: sigmoid(beta * 1.4).
    ActionProfile others = ActionProfile::from_mask(0b110, 3);
    CHECK(logit_choice_prob(kTriangle, others, 0, 0.3, 1.0) ==
          doctest::Approx(1.0 / (1.0 + std::exp(-1.4))).epsilon(1e-12));

    // No overflow at extreme rationality.
    CHECK(logit_choice_prob(kTriangle, others, 0, 0.3, 1e6) == doctest::Approx(1.0));
    CHECK(logit_choice_prob(kTriangle, ActionProfile::zeros(3), 0, 0.3, 1e6) ==
          doctest::Approx(0.0));

    CHECK_THROWS_AS(logit_choice_prob(kTriangle, ActionProfile::zeros(3), 9, 0.3, 1.0),
                    std::out_of_range);
}

TEST_CASE("single step semantics") {
    Rng rng_a(123), rng_b(123);
    const ActionProfile start = ActionProfile::from_mask(0b010, 3);
    const ActionProfile next_a = step(kTriangle, start, 0.3, 1.0, rng_a);
    const ActionProfile next_b = step(kTriangle, start, 0.3, 1.0, rng_b);
    CHECK(next_a == next_b);  // fixed seed, reproducible

    // At most one coordinate changes per step.
    Rng rng(7);
    ActionProfile current = ActionProfile::zeros(3);
    for (int t = 0; t < 200; ++t) {
        const ActionProfile next = step(kTriangle, current, 0.3, 1.5, rng);
        int changed = 0;
        for (int i = 0; i < 3; ++i) changed += next.bit(i) != current.bit(i);
        CHECK(changed <= 1);
        current = next;
    }

    // Near-infinite rationality: an agent surrounded by ones switches on.
    Rng best(11);
    ActionProfile surrounded = ActionProfile::from_mask(0b110, 3);
    for (int t = 0; t < 60; ++t) {
        surrounded = step(kTriangle, surrounded, 0.3, 1e6, best);
        CHECK(surrounded.hamming() >= 2);  // nobody ever defects
    }
    CHECK(surrounded.hamming() == 3);
}

TEST_CASE("simulate matches the exact stationary law") {
    // beta = 0: uniform target.
    const Graph cycle = build_k_regular(6, 2);
    ChainConfig config;
    config.steps = 400000;
    config.burn_in = default_burn_in(6, 0.0);
    config.seed = 2024;
    const EmpiricalDistribution uniform_hist = simulate(cycle, 0.3, 0.0, config);
    const std::vector<double> uniform_target(64, 1.0 / 64.0);
    CHECK(tv_distance(uniform_hist.probabilities(), uniform_target) < 0.02);

    // 6-cycle at beta = 1 against the exact Gibbs distribution.
    config.steps = 1000000 + default_burn_in(6, 1.0);
    config.burn_in = default_burn_in(6, 1.0);
    const EmpiricalDistribution hist = simulate(cycle, 0.3, 1.0, config);
    const std::vector<double> exact = exact_gibbs(cycle, 0.3, 1.0).probabilities();
    CHECK(tv_distance(hist.probabilities(), exact) < 0.02);

    // Large beta: the chain spends almost all of its time at all-ones.
    ChainConfig frozen;
    frozen.steps = 200000;
    frozen.burn_in = default_burn_in(6, 8.0);
    frozen.seed = 5;
    const EmpiricalDistribution concentrated = simulate(cycle, 0.3, 8.0, frozen);
    CHECK(concentrated.probability(63) > 0.99);

    CHECK_THROWS_AS(simulate(cycle, 0.3, 1.0, ChainConfig{}), std::invalid_argument);
    ChainConfig bad;
    bad.steps = 10;
    bad.burn_in = 10;
    CHECK_THROWS_AS(simulate(cycle, 0.3, 1.0, bad), std::invalid_argument);
}

TEST_CASE("longer runs converge closer (seed majority)") {
    const Graph cycle = build_k_regular(6, 2);
    const std::vector<double> exact = exact_gibbs(cycle, 0.3, 1.0).probabilities();
    int improved = 0;
    const int seeds = 50;
    for (int s = 0; s < seeds; ++s) {
        ChainConfig short_run;
        short_run.steps = 10000 + 600;
        short_run.burn_in = 600;
        short_run.seed = 9000 + s;
        ChainConfig long_run = short_run;
        long_run.steps = 1000000 + 600;
        const double tv_short =
            tv_distance(simulate(cycle, 0.3, 1.0, short_run).probabilities(), exact);
        const double tv_long =
            tv_distance(simulate(cycle, 0.3, 1.0, long_run).probabilities(), exact);
        if (tv_long < tv_short) ++improved;
    }
    CHECK(improved >= 45);  // >= 90% of seeds
}

TEST_CASE("transition matrix") {
    Rng rng(15);
    const Graph g = oracle::random_connected(rng, 5, 5);
    const int n = g.vertex_count();
    const std::uint64_t size = 1ull << n;
    const std::vector<double> kernel = transition_matrix(g, 0.3, 1.5);

    for (std::uint64_t row = 0; row < size; ++row) {
        double total = 0.0;
        for (std::uint64_t col = 0; col < size; ++col) total += kernel[row * size + col];
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }

    // Asynchronous dynamics: profiles differing in two or more coordinates
    // are unreachable in one step.
    for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t b = 0; b < size; ++b)
            if (std::popcount(a ^ b) >= 2) CHECK(kernel[a * size + b] == 0.0);

    // Stationarity: mu P = mu within 1e-10.
    const std::vector<double> mu = exact_gibbs(g, 0.3, 1.5).probabilities();
    double l1 = 0.0;
    for (std::uint64_t col = 0; col < size; ++col) {
        double acc = 0.0;
        for (std::uint64_t row = 0; row < size; ++row)
            acc += mu[row] * kernel[row * size + col];
        l1 += std::abs(acc - mu[col]);
    }
    CHECK(l1 < 1e-10);

    // Detailed balance on single-flip pairs.
    double residual = 0.0;
    for (std::uint64_t a = 0; a < size; ++a)
        for (int i = 0; i < n; ++i) {
            const std::uint64_t b = a ^ (1ull << i);
            residual = std::max(residual, std::abs(mu[a] * kernel[a * size + b] -
                                                   mu[b] * kernel[b * size + a]));
        }
    CHECK(residual < 1e-10);

    const Graph big = erdos_renyi(13, 0.0, rng);
    CHECK_THROWS_AS(transition_matrix(big, 0.3, 1.0), std::invalid_argument);
}

TEST_CASE("finite-beta chain is ergodic") {
    // Every entry of P^k is positive for k >= n (checked at n <= 6).
    for (int n : {4, 6}) {
        const Graph g = build_k_regular(n, 2);
        const std::uint64_t size = 1ull << n;
        std::vector<double> power = transition_matrix(g, 0.3, 2.0);
        const std::vector<double> kernel = power;
        for (int step = 1; step < n; ++step) {
            std::vector<double> next(size * size, 0.0);
            for (std::uint64_t a = 0; a < size; ++a)
                for (std::uint64_t mid = 0; mid < size; ++mid) {
                    const double p = power[a * size + mid];
                    if (p == 0.0) continue;
                    for (std::uint64_t b = 0; b < size; ++b)
                        next[a * size + b] += p * kernel[mid * size + b];
                }
            power = std::move(next);
        }
        double min_entry = 1.0;
        for (double p : power) min_entry = std::min(min_entry, p);
        CHECK(min_entry > 0.0);
    }
}

TEST_CASE("tv distance") {
    const std::vector<double> p{0.5, 0.5}, q{0.5, 0.5};
    CHECK(tv_distance(p, q) == 0.0);
    const std::vector<double> a{1.0, 0.0}, b{0.0, 1.0};
    CHECK(tv_distance(a, b) == 1.0);

    // Uniform on 2^3 versus a point mass: 7/8.
    std::vector<double> uniform(8, 0.125), point(8, 0.0);
    point[3] = 1.0;
    CHECK(tv_distance(uniform, point) == doctest::Approx(0.875));

    const std::vector<double> short_vec{1.0};
    CHECK_THROWS_AS(tv_distance(p, short_vec), std::invalid_argument);
}

TEST_CASE("empirical distribution bookkeeping") {
    EmpiricalDistribution dense(3);
    dense.record(5);
    dense.record(5);
    dense.record(2);
    CHECK(dense.total() == 3);
    CHECK(dense.count(5) == 2);
    CHECK(dense.probability(2) == doctest::Approx(1.0 / 3.0));

    EmpiricalDistribution other(3);
    other.record(7);
    dense.merge(other);
    CHECK(dense.total() == 4);
    CHECK(dense.count(7) == 1);

    // Sparse storage above 20 agents.
    EmpiricalDistribution sparse(32);
    sparse.record(0xdeadbeefull);
    CHECK(sparse.count(0xdeadbeefull) == 1);
    CHECK_THROWS_AS(sparse.probabilities(), std::invalid_argument);
    CHECK_THROWS_AS(dense.merge(sparse), std::invalid_argument);
}
