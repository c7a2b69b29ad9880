#include "mht/converse_bounds.hpp"
#include "mht/example_instances.hpp"

#include "random_instances.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace mht;

TEST_CASE("verdu_han on the ternary example") {
    JointDistribution pvy = ternary_example();

    GammaSweep def = verdu_han(pvy); // Q_Y defaults to P_Y
    CHECK(std::abs(def.best_value - 27.0 / 47.0) <= 1e-9);

    GammaSweep at_star = verdu_han(pvy, map_solve(pvy).qy_star);
    CHECK(std::abs(at_star.best_value - 0.6) <= 1e-9);
    CHECK(std::abs(at_star.best_gamma - 0.4) <= 1e-9);

    // gammas are 0 plus the ascending jump points, values consistent
    REQUIRE(!at_star.gammas.empty());
    CHECK(at_star.gammas.front() == 0.0);
    for (std::size_t i = 1; i < at_star.gammas.size(); ++i)
        CHECK(at_star.gammas[i] > at_star.gammas[i - 1]);
}

TEST_CASE("verdu_han is exact on a zero-error instance") {
    JointDistribution j(3, 3, std::vector<double>(9, 0.0), true);
    for (int v = 0; v < 3; ++v)
        j.at(v, v) = 1.0 / 3;
    GammaSweep sweep = verdu_han(j);
    CHECK(std::abs(sweep.best_value - 0.0) <= 1e-9);
    CHECK(map_solve(j).error == doctest::Approx(0.0));
}

TEST_CASE("wolfowitz on the ternary example is tight by symmetry") {
    JointDistribution pvy = ternary_example();
    GammaSweep sweep = wolfowitz(pvy, map_solve(pvy).qy_star);
    CHECK(std::abs(sweep.best_value - 0.6) <= 1e-9);
}

TEST_CASE("wolfowitz falls strictly below on an asymmetric instance") {
    // P_V = (0.9, 0.1) with very different rows: at Q_Y = P_Y the worst
    // hypothesis drags the infimum below the average.  (At Q_Y = qy_star
    // every ratio is <= mu, so the bound is tight on any instance.)
    JointDistribution j(2, 2, {0.9 * 0.8, 0.9 * 0.2, 0.1 * 0.3, 0.1 * 0.7},
                        true);
    MapSolution sol = map_solve(j);
    GammaSweep at_py = wolfowitz(j, marginals(j).observation);
    CHECK(at_py.best_value <= sol.error + 1e-9);
    CHECK(at_py.best_value < sol.error - 1e-3);
    GammaSweep at_star = wolfowitz(j, sol.qy_star);
    CHECK(std::abs(at_star.best_value - sol.error) <= 1e-9);
}

TEST_CASE("wolfowitz handles a single hypothesis") {
    JointDistribution j(1, 3, {0.2, 0.5, 0.3}, true);
    GammaSweep sweep = wolfowitz(j, map_solve(j).qy_star);
    CHECK(std::abs(sweep.best_value - 0.0) <= 1e-9);
}

TEST_CASE("wolfowitz rejects zero-prior hypotheses") {
    JointDistribution j(2, 2, {0.5, 0.5, 0.0, 0.0}, true);
    CHECK_THROWS_AS(wolfowitz(j, FiniteMeasure::uniform(2)),
                    std::invalid_argument);
}

TEST_CASE("poor_verdu on the ternary example") {
    JointDistribution pvy = ternary_example();
    FiniteMeasure py = marginals(pvy).observation;
    MapSolution sol = map_solve(pvy);

    SUBCASE("sweep at Q_Y = P_Y peaks at the Verdu-Han value") {
        GammaSweep vh = verdu_han(pvy);
        double best = 0.0;
        for (double g : vh.gammas) {
            auto b = poor_verdu(pvy, py, g);
            CHECK(b.condition_ok);
            best = std::max(best, b.value);
        }
        CHECK(std::abs(best - 27.0 / 47.0) <= 1e-9);
    }
    SUBCASE("qy_star at gamma 0.4 gives the exact error") {
        auto b = poor_verdu(pvy, sol.qy_star, 0.4);
        CHECK(b.condition_ok);
        CHECK(std::abs(b.value - 0.6) <= 1e-9);
    }
    SUBCASE("a mass-starved Q_Y with a large gamma violates the condition") {
        JointDistribution diag(2, 2, {0.5, 0.0, 0.0, 0.5}, true);
        auto b = poor_verdu(diag, FiniteMeasure({0.99, 0.01}), 1.0);
        CHECK_FALSE(b.condition_ok);
        CHECK(std::isfinite(b.value));
    }
}

TEST_CASE("tight_poor_verdu equals the exact error") {
    JointDistribution pvy = ternary_example();
    GammaSweep sweep = tight_poor_verdu(pvy);
    CHECK(std::abs(sweep.best_value - 0.6) <= 1e-9);
    CHECK(std::abs(sweep.best_gamma - 0.4) <= 1e-9);

    const int m = 4, ny = 3;
    JointDistribution flat(m, ny,
                           std::vector<double>(m * ny, 1.0 / (m * ny)), true);
    CHECK(std::abs(tight_poor_verdu(flat).best_value - (1.0 - 1.0 / m)) <=
          1e-9);

    JointDistribution single(1, 2, {0.4, 0.6}, true);
    CHECK(std::abs(tight_poor_verdu(single).best_value - 0.0) <= 1e-9);
}

TEST_CASE("bank_of_tests on the ternary example") {
    JointDistribution pvy = ternary_example();
    MapSolution sol = map_solve(pvy);

    BankOfTests at_star = bank_of_tests(pvy, sol.qy_star);
    for (double b : at_star.budgets)
        CHECK(b == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(std::abs(at_star.value - 0.6) <= 1e-9);

    BankOfTests at_py = bank_of_tests(pvy, marginals(pvy).observation);
    CHECK(at_py.value <= 0.6 + 1e-9);

    JointDistribution single(1, 2, {0.4, 0.6}, true);
    BankOfTests one = bank_of_tests(single, FiniteMeasure({0.5, 0.5}));
    CHECK(one.budgets[0] == doctest::Approx(1.0));
    CHECK(one.value == doctest::Approx(0.0));
}

TEST_CASE("bound ordering property suite (reduced)") {
    testing::Rng rng(90210);
    for (int trial = 0; trial < 100; ++trial) {
        int m = rng.uniform_int(1, 5), ny = rng.uniform_int(1, 6);
        JointDistribution pvy = testing::random_joint(rng, m, ny);
        MapSolution sol = map_solve(pvy);
        FiniteMeasure qy = testing::random_simplex(rng, ny);

        CHECK(verdu_han(pvy).best_value <= sol.error + 1e-9);
        CHECK(verdu_han(pvy, qy).best_value <= sol.error + 1e-9);
        CHECK(wolfowitz(pvy, qy).best_value <= sol.error + 1e-9);
        CHECK(std::abs(verdu_han(pvy, sol.qy_star).best_value - sol.error) <=
              1e-9);
        CHECK(std::abs(tight_poor_verdu(pvy).best_value - sol.error) <= 1e-9);

        BankOfTests bank = bank_of_tests(pvy, qy);
        CHECK(bank.value <= sol.error + 1e-9);
        CHECK(std::abs(bank_of_tests(pvy, sol.qy_star).value - sol.error) <=
              1e-9);

        for (double g : {0.0, 0.3, 1.0, 2.0}) {
            auto pv_py =
                poor_verdu(pvy, marginals(pvy).observation, g);
            CHECK(pv_py.condition_ok); // holds for Q_Y = P_Y at any gamma
            CHECK(pv_py.value <= sol.error + 1e-9);
            auto pv_star = poor_verdu(pvy, sol.qy_star, g);
            CHECK(pv_star.condition_ok); // and for Q_Y = qy_star
            CHECK(pv_star.value <= sol.error + 1e-9);
            auto pv_rand = poor_verdu(pvy, qy, g);
            if (pv_rand.condition_ok)
                CHECK(pv_rand.value <= sol.error + 1e-9);
        }
    }
}
