#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "mldeg/likelihood.hpp"
#include "mldeg/parser.hpp"

using namespace mldeg;

namespace {

TorusModel hyperplane_model(int n) {
    RatPoly sum(n);
    for (int i = 0; i < n; ++i) sum += RatPoly::variable(n, i);
    sum -= RatPoly::constant(n, Rational(1));
    return TorusModel::implicit_model(n, {sum});
}

TrackerConfig quick_config(std::uint64_t seed = 42) {
    TrackerConfig cfg;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("linear model has one critical point matching the closed form") {
    TorusModel model = hyperplane_model(2);
    TrackerConfig cfg = quick_config();
    MLReport rep = ml_degree(model, cfg, 3);
    CHECK(rep.count == 1);
    CHECK(rep.certified);
    CHECK(rep.bezout == 4);
    REQUIRE(rep.solutions.size() == 1);

    // The last valid draw's data gives p_i = lambda_i / (lambda_1 + lambda_2).
    const DrawRecord* last_valid = nullptr;
    for (const auto& rec : rep.draw_records)
        if (rec.valid) last_valid = &rec;
    REQUIRE(last_valid != nullptr);
    DataVector data = sample_generic_data(2, last_valid->data_seed);
    Complex total = data.lambda[0] + data.lambda[1];
    CHECK(std::abs(rep.solutions[0][0] - data.lambda[0] / total) < 1e-10);
    CHECK(std::abs(rep.solutions[0][1] - data.lambda[1] / total) < 1e-10);
}

TEST_CASE("hyperplane models up to dimension five have ML degree one") {
    for (int n = 2; n <= 6; ++n) {
        TorusModel model = hyperplane_model(n);
        MLReport rep = ml_degree(model, quick_config(7 + static_cast<std::uint64_t>(n)), 2);
        CAPTURE(n);
        CHECK(rep.count == 1);
        CHECK(rep.certified);
    }
}

TEST_CASE("parametrized segment matches the punctured line") {
    // X = C \ {0, 1} embedded by t -> (t, 1 - t): chi = -1, dimension 1.
    std::vector<std::string> params{"t"};
    std::vector<RatFun> coords{parse_rational_function("t", params),
                               parse_rational_function("1 - t", params)};
    TorusModel model = TorusModel::parametrized_model(2, params, coords, {});
    EulerReport rep = euler_char_smooth(model, quick_config(), 3);
    CHECK(rep.dimension == 1);
    CHECK(rep.ml.count == 1);
    CHECK(rep.ml.certified);
    CHECK(rep.chi == -1);
}

TEST_CASE("thrice punctured line via a cubic coordinate") {
    // t -> (t, t^3 - t) embeds C \ {0, 1, -1}: chi = -2, ML degree 2.
    std::vector<std::string> params{"t"};
    std::vector<RatFun> coords{parse_rational_function("t", params),
                               parse_rational_function("t^3 - t", params)};
    TorusModel model = TorusModel::parametrized_model(2, params, coords, {});
    EulerReport rep = euler_char_smooth(model, quick_config(), 3);
    CHECK(rep.ml.count == 2);
    CHECK(rep.ml.certified);
    CHECK(rep.chi == -2);
}

TEST_CASE("implicit and parametrized forms of a curve agree") {
    std::vector<std::string> pnames{"p1", "p2"};
    TorusModel implicit_form =
        TorusModel::implicit_model(2, {parse_polynomial("p2 - p1^3 + p1", pnames)});
    std::vector<std::string> params{"t"};
    TorusModel param_form = TorusModel::parametrized_model(
        2, params,
        {parse_rational_function("t", params), parse_rational_function("t^3 - t", params)}, {});
    MLReport a = ml_degree(implicit_form, quick_config(11), 3);
    MLReport b = ml_degree(param_form, quick_config(13), 3);
    CHECK(a.certified);
    CHECK(b.certified);
    CHECK(a.count == b.count);
    CHECK(a.count == 2);
}

TEST_CASE("degenerate likelihood forms count zero critical points") {
    // (t, 1/t): the log-likelihood reduces to (l1 - l2) log t, never critical.
    std::vector<std::string> params{"t"};
    TorusModel model = TorusModel::parametrized_model(
        2, params, {parse_rational_function("t", params), parse_rational_function("1/t", params)}, {});
    MLReport rep = ml_degree(model, quick_config(), 2);
    CHECK(rep.count == 0);
    CHECK(rep.certified);
}

TEST_CASE("two constraint hyperplanes in four coordinates") {
    std::vector<std::string> names{"p1", "p2", "p3", "p4"};
    TorusModel model = TorusModel::implicit_model(
        4, {parse_polynomial("p1 + p3 - 1", names), parse_polynomial("p2 + p4 - 1", names)});
    EulerReport rep = euler_char_smooth(model, quick_config(), 3);
    CHECK(rep.ml.count == 1);
    CHECK(rep.ml.certified);
    CHECK(rep.dimension == 2);
    CHECK(rep.chi == 1);
    CHECK(rep.ml.bezout == 16);
    for (const auto& rec : rep.ml.draw_records) {
        if (!rec.valid) continue;
        CHECK(rec.paths.finite + rec.paths.diverged + rec.paths.failed == rep.ml.bezout);
        CHECK(rec.paths.failed == 0);
    }
}

TEST_CASE("ml reports are deterministic in the seed") {
    TorusModel model = hyperplane_model(3);
    MLReport a = ml_degree(model, quick_config(321), 2);
    MLReport b = ml_degree(model, quick_config(321), 2);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (size_t i = 0; i < a.solutions.size(); ++i)
        for (size_t j = 0; j < a.solutions[i].size(); ++j)
            CHECK(a.solutions[i][j] == b.solutions[i][j]);  // bitwise
    CHECK(a.count == b.count);
    CHECK(a.total_redraws == b.total_redraws);
    REQUIRE(a.draw_records.size() == b.draw_records.size());
    for (size_t i = 0; i < a.draw_records.size(); ++i)
        CHECK(a.draw_records[i].data_seed == b.draw_records[i].data_seed);
}

TEST_CASE("invalid inputs are rejected") {
    TorusModel model = hyperplane_model(2);
    TrackerConfig cfg = quick_config();
    CHECK_THROWS_AS(ml_degree(model, cfg, 0), std::invalid_argument);
    TrackerConfig bad = cfg;
    bad.corrector_tol = 0.0;
    CHECK_THROWS_AS(ml_degree(model, bad, 2), std::invalid_argument);
}
