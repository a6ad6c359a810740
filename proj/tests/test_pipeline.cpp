#include <doctest.h>

#include <random>

#include "aamcba/errors.hpp"
#include "aamcba/forecast/pipeline.hpp"
#include "test_util.hpp"

using namespace aamcba;
using namespace aamcba::forecast;

TEST_CASE("random walk is differenced") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> z;
    std::vector<double> x(200);
    double acc = 0;
    for (double& v : x) v = acc += z(rng);
    const auto res = auto_pipeline(TimeSeries::from_start("rw", 1800, x), std::nullopt);
    CHECK(res.model.order.d >= 1);
    CHECK(res.band.size() == 11);
    CHECK(res.band.years.front() == 2000);
    REQUIRE_FALSE(res.diagnostics.empty());
    CHECK(res.diagnostics.front().test == "ADF d=0");
}

TEST_CASE("stationary AR(1) keeps d = 0 and finds the AR term") {
    std::mt19937_64 rng(32);
    const auto x = testutil::simulate_arma(rng, 300, {0.7}, {});
    const auto res = auto_pipeline(TimeSeries::from_start("ar", 1700, x), std::nullopt);
    CHECK(res.model.order.d == 0);
    CHECK(res.model.order.p >= 1);
    CHECK(res.adequate);
}

TEST_CASE("pinned order is used verbatim") {
    std::mt19937_64 rng(33);
    const auto x = testutil::simulate_arma(rng, 60, {0.3}, {});
    PipelineOptions opt;
    opt.horizon = 4;
    const auto res = auto_pipeline(TimeSeries::from_start("p", 1950, x), ArimaOrder{2, 1, 1}, opt);
    CHECK(res.model.order == ArimaOrder{2, 1, 1});
    CHECK(res.tried.size() == 1);
    CHECK(res.band.size() == 4);
}

TEST_CASE("select_order honours the length rule") {
    std::mt19937_64 rng(34);
    const auto x = testutil::simulate_arma(rng, 14, {0.9}, {0.8});
    const auto o = select_order(x, 0);
    CHECK(static_cast<int>(x.size()) >= o.p + o.q + 10);
    const std::vector<double> flat(20, 1.0);
    CHECK(select_order(flat, 1) == ArimaOrder{0, 1, 0});
}

TEST_CASE("pipeline input errors") {
    const auto tiny = TimeSeries::from_start("t", 2000, {1, 2, 3});
    CHECK_THROWS_AS(auto_pipeline(tiny, std::nullopt), std::invalid_argument);
    const auto ok = TimeSeries::from_start("t", 2000, {1, 2, 3, 2, 1, 2, 3, 2, 1, 2});
    PipelineOptions opt;
    opt.horizon = 0;
    CHECK_THROWS_AS(auto_pipeline(ok, std::nullopt, opt), std::invalid_argument);
}

TEST_CASE("constant series has no positive innovation variance") {
    const auto flat = TimeSeries::from_start("c", 2000, std::vector<double>(20, 4.0));
    CHECK_THROWS_AS(auto_pipeline(flat, std::nullopt), NumericalError);
}

TEST_CASE("pinned (0,2,1) is respected") {
    std::mt19937_64 rng(35);
    auto x = testutil::simulate_arma(rng, 40, {}, {0.3});
    const auto res = auto_pipeline(TimeSeries::from_start("q", 1980, x), ArimaOrder{0, 2, 1});
    CHECK(res.model.order == ArimaOrder{0, 2, 1});
}
