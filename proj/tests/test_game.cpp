#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "staghunt/game.hpp"
#include "staghunt/graph.hpp"

using namespace staghunt;

namespace {

const Graph kTriangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});

}  // namespace

TEST_CASE("profiles and spins") {
    ActionProfile a = ActionProfile::from_mask(0b101, 3);
    CHECK(a.hamming() == 2);
    CHECK(a.bit(0) == 1);
    CHECK(a.bit(1) == 0);
    a.flip(1);
    CHECK(a.hamming() == 3);
    CHECK(a.to_mask() == 0b111);

    const SpinProfile s = SpinProfile::from_actions(ActionProfile::from_mask(0b01, 2));
    CHECK(s.spin(0) == 1);
    CHECK(s.spin(1) == -1);
    CHECK(s.to_actions().to_mask() == 0b01);
    CHECK_THROWS_AS(SpinProfile::from_spins({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ActionProfile::from_bits({0, 2}), std::invalid_argument);
}

TEST_CASE("pairwise payoff") {
    CHECK(pairwise_payoff(1, 1, 0.3) == doctest::Approx(0.7));
    CHECK(pairwise_payoff(0, 0, 0.3) == 0.0);
    CHECK(pairwise_payoff(0, 1, 0.9) == 0.0);
    CHECK(pairwise_payoff(1, 0, 0.3) == doctest::Approx(-0.3));
    CHECK_THROWS_AS(pairwise_payoff(2, 0, 0.3), std::invalid_argument);
}

TEST_CASE("network utility") {
    CHECK(utility(kTriangle, ActionProfile::ones(3), 0, 0.3) == doctest::Approx(1.4));
    CHECK(utility(kTriangle, ActionProfile::from_mask(0b110, 3), 0, 0.3) == 0.0);

    const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(utility(star, ActionProfile::ones(5), 0, 0.5) == doctest::Approx(2.0));

    // Utility equals the sum of pairwise payoffs against each neighbor.
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracle::random_connected(rng, 3, 8);
        const std::uint64_t mask = rng.next_below(1ull << g.vertex_count());
        const ActionProfile a = ActionProfile::from_mask(mask, g.vertex_count());
        const double theta = -0.5 + 2.0 * rng.next_double();
        for (int i = 0; i < g.vertex_count(); ++i) {
            double expected = 0.0;
            for (int j : g.neighbors(i)) expected += pairwise_payoff(a.bit(i), a.bit(j), theta);
            CHECK(utility(g, a, i, theta) == doctest::Approx(expected).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(utility(kTriangle, ActionProfile::ones(3), 5, 0.3), std::out_of_range);
}

TEST_CASE("reduced potential") {
    CHECK(potential_reduced(kTriangle, ActionProfile::zeros(3), 0.3) == 0.0);
    CHECK(potential_reduced(kTriangle, ActionProfile::from_mask(0b011, 3), 0.3) ==
          doctest::Approx(-0.2));

    // k-regular all-ones: (1/2 - theta) n k, exact at rational theta.
    for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 3}, {14, 6}, {9, 4}}) {
        const Graph g = build_k_regular(n, k);
        const double value = potential_reduced(g, ActionProfile::ones(n), 0.25);
        CHECK(value == 0.25 * n * k);  // exact: integers scaled by powers of two
    }
}

TEST_CASE("full potential and shift invariance") {
    CHECK(potential_full(kTriangle, ActionProfile::zeros(3), 0.3) == doctest::Approx(0.9));
    CHECK(potential_full(kTriangle, ActionProfile::ones(3), 0.3) == doctest::Approx(2.1));

    Rng rng(9);
    const Graph g = oracle::random_connected(rng, 4, 9);
    const int n = g.vertex_count();
    for (int trial = 0; trial < 20; ++trial) {
        const ActionProfile a = ActionProfile::from_mask(rng.next_below(1ull << n), n);
        const ActionProfile b = ActionProfile::from_mask(rng.next_below(1ull << n), n);
        const double theta = rng.next_double();
        const double full_diff = potential_full(g, a, theta) - potential_full(g, b, theta);
        const double reduced_diff =
            potential_reduced(g, a, theta) - potential_reduced(g, b, theta);
        CHECK(full_diff == doctest::Approx(reduced_diff).epsilon(1e-12));
    }
}

TEST_CASE("ising potential") {
    Rng rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = oracle::random_connected(rng, 3, 9);
        const double theta = rng.next_double();
        const double edges = static_cast<double>(g.edge_count());
        CHECK(ising_potential(g, SpinProfile::plus_ones(g.vertex_count()), theta) ==
              doctest::Approx((0.75 - theta) * edges).epsilon(1e-12));
        CHECK(ising_potential(g, SpinProfile::minus_ones(g.vertex_count()), theta) ==
              doctest::Approx((theta - 0.25) * edges).epsilon(1e-12));
    }

    // Mean of the potential over all spin profiles vanishes (exact integer sums).
    const Graph g = oracle::random_connected(rng, 4, 8);
    const int n = g.vertex_count();
    long long sum_q = 0, sum_l = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        const SpinProfile s = SpinProfile::from_actions(ActionProfile::from_mask(mask, n));
        const PotentialTerms t = ising_potential_terms(g, s);
        sum_q += t.inside_edges;
        sum_l += t.degree_mass;
    }
    CHECK(sum_q == 0);
    CHECK(sum_l == 0);
}

TEST_CASE("nash sets") {
    CHECK(pairwise_nash_set(1.5).all_zeros);
    CHECK_FALSE(pairwise_nash_set(1.5).all_ones);
    CHECK(pairwise_nash_set(0.5).all_zeros);
    CHECK(pairwise_nash_set(0.5).all_ones);
    CHECK(pairwise_nash_set(0.0).all_zeros);
    CHECK(pairwise_nash_set(1.0).all_ones);
    CHECK_FALSE(pairwise_nash_set(-0.1).all_zeros);
    CHECK(pairwise_nash_set(-0.1).all_ones);

    CHECK(potential_maximizers(kTriangle, 0.3).all_ones);
    CHECK_FALSE(potential_maximizers(kTriangle, 0.3).all_zeros);
    CHECK(potential_maximizers(kTriangle, 0.5).all_ones);
    CHECK(potential_maximizers(kTriangle, 0.5).all_zeros);
    CHECK(potential_maximizers(kTriangle, 0.7).all_zeros);
    CHECK_FALSE(potential_maximizers(kTriangle, 0.7).all_ones);
    CHECK_THROWS_AS(potential_maximizers(Graph::from_edges(4, {{0, 1}}), 0.3),
                    std::invalid_argument);
}

TEST_CASE("exact potential identity") {
    CHECK(verify_exact_potential(kTriangle, 0.3, PotentialForm::Reduced));
    CHECK(verify_exact_potential(kTriangle, 0.3, PotentialForm::Full));

    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const Graph g = oracle::random_connected(rng, 3, 10);
        const double theta = -1.0 + 3.0 * rng.next_double();
        CHECK(verify_exact_potential(g, theta, PotentialForm::Reduced));
    }

    // Negative control: dropping the -theta term breaks the identity.
    const Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    const bool corrupted_ok = verify_exact_potential(
        path, 0.3, [](const Graph& g, const ActionProfile& a, double) {
            return static_cast<double>(reduced_potential_terms(g, a).inside_edges);
        });
    CHECK_FALSE(corrupted_ok);

    const Graph big = erdos_renyi(21, 0.0, rng);
    CHECK_THROWS_AS(verify_exact_potential(big, 0.3, PotentialForm::Reduced),
                    std::invalid_argument);
}
