#include <doctest.h>

#include <random>

#include "aamcba/errors.hpp"
#include "aamcba/forecast/correlation.hpp"
#include "aamcba/forecast/hypothesis_tests.hpp"
#include "test_util.hpp"

using namespace aamcba;
using namespace aamcba::forecast;

TEST_CASE("acf and pacf agree with the reference implementation") {
    const auto fx = testutil::load_fixture("stats_fixtures.json");
    for (const auto& c : fx.at("acf_pacf")) {
        const auto x = testutil::as_vector(c.at("x"));
        const int nl = c.at("nlags").get<int>();
        const auto r = acf(x, nl);
        const auto pr = pacf(x, nl);
        const auto er = testutil::as_vector(c.at("acf"));
        const auto epr = testutil::as_vector(c.at("pacf"));
        CAPTURE(c.at("name").get<std::string>());
        CHECK(r[0] == 1.0);
        for (int k = 0; k <= nl; ++k) {
            CHECK(r[k] == doctest::Approx(er[k]).epsilon(1e-10));
            CHECK(pr[k] == doctest::Approx(epr[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("acf properties on simulated data") {
    std::mt19937_64 rng(1000);
    const auto noise = testutil::simulate_arma(rng, 1000, {}, {});
    const auto r = acf(noise, 20);
    int inside = 0;
    for (int k = 1; k <= 20; ++k) inside += std::abs(r[k]) < 2.0 / std::sqrt(1000.0);
    CHECK(inside >= 19);

    const auto ar = testutil::simulate_arma(rng, 1000, {0.7}, {});
    CHECK(acf(ar, 1)[1] == doctest::Approx(0.7).epsilon(0.1 / 0.7));
    CHECK(bartlett_bound(400) == doctest::Approx(0.098));
}

TEST_CASE("acf errors") {
    const std::vector<double> flat(10, 3.0);
    CHECK_THROWS_AS(acf(flat, 2), std::invalid_argument);
    const std::vector<double> x{1, 2, 3};
    CHECK_THROWS_AS(acf(x, 3), std::invalid_argument);
}

TEST_CASE("ADF statistic and p-value match the reference") {
    const auto fx = testutil::load_fixture("stats_fixtures.json");
    for (const auto& c : fx.at("adf")) {
        const auto x = testutil::as_vector(c.at("x"));
        CAPTURE(c.at("name").get<std::string>());
        CHECK(default_adf_lag(x.size()) == c.at("lag").get<int>());
        const auto rep = adf_test(x, c.at("lag").get<int>());
        CHECK(rep.statistic == doctest::Approx(c.at("statistic").get<double>()).epsilon(1e-8));
        CHECK(rep.p_value == doctest::Approx(c.at("p_value").get<double>()).epsilon(1e-6));
        CHECK(rep.reject_null == (rep.p_value <= kSignificance));
    }
}

TEST_CASE("ADF rejects on white noise and not on a random walk") {
    const auto fx = testutil::load_fixture("stats_fixtures.json");
    const auto& cases = fx.at("adf");
    CHECK(adf_test(testutil::as_vector(cases[0].at("x")), cases[0].at("lag").get<int>()).reject_null);
    CHECK_FALSE(adf_test(testutil::as_vector(cases[1].at("x")), cases[1].at("lag").get<int>()).reject_null);
}

TEST_CASE("MacKinnon p-values match the reference surface") {
    const auto fx = testutil::load_fixture("stats_fixtures.json");
    for (const auto& c : fx.at("mackinnon")) {
        CAPTURE(c.at("tau").get<double>());
        CHECK(adf_p_value(c.at("tau").get<double>()) ==
              doctest::Approx(c.at("p_value").get<double>()).epsilon(1e-9));
    }
}

TEST_CASE("ADF errors") {
    const std::vector<double> flat(50, 1.0);
    const std::string msg = [&] {
        try {
            adf_test(flat, 2);
        } catch (const NumericalError& e) {
            return std::string(e.what());
        }
        return std::string();
    }();
    CHECK(msg.find("singular regression") != std::string::npos);
    const std::vector<double> tiny{1, 2, 1, 3, 2};
    CHECK_THROWS_AS(adf_test(tiny, 2), std::invalid_argument);
    CHECK_THROWS_AS(adf_test(tiny, -1), std::invalid_argument);
}

TEST_CASE("Ljung-Box matches the reference") {
    const auto fx = testutil::load_fixture("stats_fixtures.json");
    for (const auto& c : fx.at("ljung_box")) {
        CAPTURE(c.at("name").get<std::string>());
        const auto rep = ljung_box(testutil::as_vector(c.at("x")), c.at("lags").get<int>(),
                                   c.at("model_df").get<int>());
        CHECK(rep.statistic == doctest::Approx(c.at("statistic").get<double>()).epsilon(1e-10));
        CHECK(rep.p_value == doctest::Approx(c.at("p_value").get<double>()).epsilon(1e-9));
    }
}

TEST_CASE("Ljung-Box behaviour on simulated data") {
    std::mt19937_64 rng(500);
    const auto noise = testutil::simulate_arma(rng, 500, {}, {});
    CHECK(ljung_box(noise, 10, 0).p_value > 0.05);
    const auto ar = testutil::simulate_arma(rng, 500, {0.8}, {});
    CHECK(ljung_box(ar, 10, 0).p_value <= 0.05);
    CHECK_THROWS_AS(ljung_box(noise, 2, 2), std::invalid_argument);
    const std::vector<double> few{1, -1, 2, 0};
    CHECK_THROWS_AS(ljung_box(few, 3, 0), std::invalid_argument);
}

TEST_CASE("property: Ljung-Box p-value is scale invariant") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> scale(1e-6, 1e6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = testutil::simulate_arma(rng, 60, {0.3}, {});
        const auto base = ljung_box(x, 8, 1);
        const double c = scale(rng);
        std::vector<double> y(x);
        for (double& v : y) v *= c;
        CHECK(std::abs(ljung_box(y, 8, 1).p_value - base.p_value) <= 1e-12);
    }
}
