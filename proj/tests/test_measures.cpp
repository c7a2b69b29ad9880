#include "mht/example_instances.hpp"
#include "mht/json_io.hpp"
#include "mht/measures.hpp"

#include "random_instances.hpp"

#include <doctest.h>

#include <fstream>

using namespace mht;

TEST_CASE("validate accepts a simplex point") {
    CHECK(validate(FiniteMeasure::uniform(3)).ok);
}

TEST_CASE("validate reports a wrong sum with its magnitude") {
    auto r = validate(FiniteMeasure({0.5, 0.6}));
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("sum=1.1") != std::string::npos);
}

TEST_CASE("validate reports the first negative weight") {
    auto r = validate(FiniteMeasure({0.5, -0.1, 0.6}, false));
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("negative weight at index 1") != std::string::npos);
}

TEST_CASE("unnormalized measures skip the sum check") {
    CHECK(validate(FiniteMeasure::counting(4)).ok);
    CHECK(FiniteMeasure::counting(4).total_mass() == doctest::Approx(4.0));
}

TEST_CASE("kernel rows must be stochastic") {
    CHECK(validate(ternary_likelihood()).ok);
    RandomizedKernel bad(1, 2, {0.6, 0.5});
    CHECK_FALSE(validate(bad).ok);
}

TEST_CASE("marginals of the ternary example") {
    Marginals m = marginals(ternary_example());
    for (int v = 0; v < 3; ++v)
        CHECK(m.prior[v] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(m.observation[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(m.observation[1] == doctest::Approx(0.94 / 3).epsilon(1e-12));
    CHECK(m.observation[2] == doctest::Approx(1.06 / 3).epsilon(1e-12));
}

TEST_CASE("uniform prior through an identity channel keeps P_Y uniform") {
    JointDistribution j(4, 4, std::vector<double>(16, 0.0), true);
    for (int v = 0; v < 4; ++v)
        j.at(v, v) = 0.25;
    Marginals m = marginals(j);
    for (int y = 0; y < 4; ++y)
        CHECK(m.observation[y] == doctest::Approx(0.25));
}

TEST_CASE("product of uniform factors is flat") {
    JointDistribution q = product(FiniteMeasure::uniform(3),
                                  FiniteMeasure({1.0 / 3, 1.0 / 3, 1.0 / 3}));
    for (int v = 0; v < 3; ++v)
        for (int y = 0; y < 3; ++y)
            CHECK(q(v, y) == doctest::Approx(1.0 / 9));
    CHECK(q.normalized);
}

TEST_CASE("counting measure times Q_Y repeats Q_Y on every row") {
    FiniteMeasure qy({0.2, 0.8});
    JointDistribution q = product(FiniteMeasure::counting(3), qy);
    CHECK_FALSE(q.normalized);
    for (int v = 0; v < 3; ++v) {
        CHECK(q(v, 0) == doctest::Approx(0.2));
        CHECK(q(v, 1) == doctest::Approx(0.8));
    }
}

TEST_CASE("product with a degenerate prior") {
    JointDistribution q =
        product(FiniteMeasure({1.0, 0.0}), FiniteMeasure({0.3, 0.7}));
    CHECK(q(0, 0) == doctest::Approx(0.3));
    CHECK(q(0, 1) == doctest::Approx(0.7));
    CHECK(q(1, 0) == 0.0);
    CHECK(q(1, 1) == 0.0);
}

TEST_CASE("marginals of random joints are normalized simplex points") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        JointDistribution j = random_joint(rng, rng.uniform_int(1, 5),
                                           rng.uniform_int(1, 6));
        Marginals m = marginals(j);
        CHECK(validate(m.prior).ok);
        CHECK(validate(m.observation).ok);
        CHECK(m.prior.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(m.observation.total_mass() ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("product followed by marginals recovers the factors") {
    testing::Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        FiniteMeasure qv = random_simplex(rng, rng.uniform_int(1, 5));
        FiniteMeasure qy = random_simplex(rng, rng.uniform_int(1, 6));
        Marginals m = marginals(product(qv, qy));
        for (std::size_t v = 0; v < qv.size(); ++v)
            CHECK(m.prior[v] == doctest::Approx(qv[v]).epsilon(1e-9));
        for (std::size_t y = 0; y < qy.size(); ++y)
            CHECK(m.observation[y] == doctest::Approx(qy[y]).epsilon(1e-9));
    }
}

TEST_CASE("unnormalized product recovers factors up to global scale") {
    FiniteMeasure qy({0.2, 0.3, 0.5});
    Marginals m = marginals(product(FiniteMeasure::counting(4), qy));
    for (std::size_t v = 0; v < 4; ++v)
        CHECK(m.prior[v] == doctest::Approx(1.0)); // scale 1: qy sums to 1
    for (std::size_t y = 0; y < 3; ++y)
        CHECK(m.observation[y] == doctest::Approx(4.0 * qy[y]));
}

TEST_CASE("json: both instance forms agree") {
    nlohmann::json a = {
        {"V", 2},
        {"Y", 2},
        {"pvy", {{0.45, 0.05}, {0.05, 0.45}}},
    };
    nlohmann::json b = {
        {"prior", {0.5, 0.5}},
        {"likelihood", {{0.9, 0.1}, {0.1, 0.9}}},
    };
    JointDistribution ja = joint_from_json(a);
    JointDistribution jb = joint_from_json(b);
    for (int v = 0; v < 2; ++v)
        for (int y = 0; y < 2; ++y)
            CHECK(ja(v, y) == doctest::Approx(jb(v, y)).epsilon(1e-12));
}

TEST_CASE("json: emitted joint mirrors the input form") {
    JointDistribution j = joint_from_json(
        {{"prior", {0.5, 0.5}}, {"likelihood", {{0.9, 0.1}, {0.1, 0.9}}}});
    nlohmann::json out = joint_to_json(j, /*prior_likelihood_form=*/true);
    CHECK(out.contains("prior"));
    CHECK(out.contains("likelihood"));
    CHECK(joint_from_json(out)(0, 0) == doctest::Approx(0.45));

    nlohmann::json flat = joint_to_json(j);
    CHECK(flat.at("V") == 2);
    CHECK(flat.at("pvy")[0][0].get<double>() == doctest::Approx(0.45));
}

TEST_CASE("json: malformed documents raise with context") {
    std::string path = "malformed_instance.json";
    {
        std::ofstream out(path);
        out << "{\"pvy\": [[0.5, 0.5],";
    }
    CHECK_THROWS_AS(load_joint_instance(path), std::invalid_argument);
    CHECK_THROWS_AS(joint_from_json(nlohmann::json{{"pvy", {{0.5, -0.1}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(joint_from_json(nlohmann::json{{"V", 2}}),
                    std::invalid_argument);
}
