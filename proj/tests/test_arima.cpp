#include <doctest.h>

#include <numeric>
#include <random>

#include "aamcba/errors.hpp"
#include "aamcba/forecast/arima.hpp"
#include "aamcba/forecast/polynomial.hpp"
#include "test_util.hpp"

using namespace aamcba;
using namespace aamcba::forecast;

TEST_CASE("stationarity and invertibility checks") {
    CHECK(ar_is_stationary(std::vector<double>{0.5}));
    CHECK_FALSE(ar_is_stationary(std::vector<double>{1.0}));
    CHECK_FALSE(ar_is_stationary(std::vector<double>{1.2}));
    CHECK(ar_is_stationary(std::vector<double>{0.5, 0.3}));
    CHECK_FALSE(ar_is_stationary(std::vector<double>{0.5, 0.6}));
    CHECK(ma_is_invertible(std::vector<double>{-0.9}));
    CHECK_FALSE(ma_is_invertible(std::vector<double>{1.5}));
    CHECK(ar_is_stationary(std::vector<double>{}));
}

TEST_CASE("property: reflection round trip") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> r(1 + trial % 5);
        for (double& v : r) v = u(rng);
        const auto phi = reflection_to_ar(r);
        CHECK(ar_is_stationary(phi));
        const auto back = ar_to_reflection(phi);
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(back[i] == doctest::Approx(r[i]).epsilon(1e-9));
    }
}

TEST_CASE("integrated_ar expands (1 - phi B)(1 - B)^d") {
    const auto c = integrated_ar(std::vector<double>{0.5}, 1);
    // (1 - 0.5B)(1 - B) = 1 - 1.5B + 0.5B^2
    REQUIRE(c.size() == 2);
    CHECK(c[0] == doctest::Approx(1.5));
    CHECK(c[1] == doctest::Approx(-0.5));
    const auto c2 = integrated_ar(std::vector<double>{}, 2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == doctest::Approx(2.0));
    CHECK(c2[1] == doctest::Approx(-1.0));
}

TEST_CASE("difference and integrate") {
    const std::vector<double> x{2, 4, 6, 8};
    CHECK(difference(x, 1) == std::vector<double>{2, 2, 2});
    CHECK(difference(x, 2) == std::vector<double>{0, 0});
    const auto ts = TimeSeries::from_start("x", 2000, x);
    const auto d1 = difference(ts, 1);
    CHECK(d1.first_year() == 2001);
    CHECK(d1.values == std::vector<double>{2, 2, 2});

    std::mt19937_64 rng(11);
    std::normal_distribution<double> z(0, 10);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v(20);
        for (double& e : v) e = z(rng);
        for (int d = 0; d <= 2; ++d) {
            const auto back = integrate(difference(v, d), difference_heads(v, d));
            REQUIRE(back.size() == v.size());
            for (std::size_t i = 0; i < v.size(); ++i) CHECK(back[i] == doctest::Approx(v[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("mean model on [2,4,6,8]") {
    const auto ts = TimeSeries::from_start("x", 2000, {2, 4, 6, 8});
    const auto fit = fit_arima(ts, {0, 0, 0});
    CHECK(fit.intercept == doctest::Approx(5.0));
    const auto band = forecast::forecast(fit, ts, 3);
    for (double m : band.mean) CHECK(m == doctest::Approx(5.0));
    CHECK(band.years == std::vector<int>{2004, 2005, 2006});
    const double w0 = band.upper[0] - band.lower[0];
    for (std::size_t h = 0; h < band.size(); ++h)
        CHECK(band.upper[h] - band.lower[h] == doctest::Approx(w0));
    CHECK(w0 / 2 == doctest::Approx(1.96 * std::sqrt(fit.sigma2)));
}

TEST_CASE("CSS estimates agree with an independent optimiser") {
    const auto fx = testutil::load_fixture("stats_fixtures.json");
    for (const auto& c : fx.at("css")) {
        const auto x = testutil::as_vector(c.at("x"));
        const auto ord = c.at("order").get<std::vector<int>>();
        const ArimaOrder order{ord[0], ord[1], ord[2]};
        CAPTURE(order.str());
        FitOptions opt;
        opt.include_mean = c.at("include_mean").get<bool>();
        const auto fit = fit_arima(x, order, opt);
        const auto phi = testutil::as_vector(c.at("phi"));
        const auto theta = testutil::as_vector(c.at("theta"));
        REQUIRE(fit.ar_coeffs.size() == phi.size());
        REQUIRE(fit.ma_coeffs.size() == theta.size());
        for (std::size_t i = 0; i < phi.size(); ++i) CHECK(fit.ar_coeffs[i] == doctest::Approx(phi[i]).epsilon(1e-3));
        for (std::size_t i = 0; i < theta.size(); ++i)
            CHECK(fit.ma_coeffs[i] == doctest::Approx(theta[i]).epsilon(1e-3));
        CHECK(fit.intercept == doctest::Approx(c.at("mu").get<double>()).epsilon(1e-3).scale(1.0));
        // Our optimum must be at least as good as the reference one.
        CHECK(-fit.loglik_proxy <= c.at("sse").get<double>() * (1 + 1e-7));
        CHECK(fit.n_obs == c.at("n_resid").get<int>());
        CHECK(fit.sigma2 == doctest::Approx(-fit.loglik_proxy / fit.n_obs));
        const auto again = arima_residuals(fit, x);
        REQUIRE(again.size() == fit.residuals.size());
        for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i] == doctest::Approx(fit.residuals[i]));
    }
}

TEST_CASE("fits are scale equivariant") {
    std::mt19937_64 rng(5);
    const auto x = testutil::simulate_arma(rng, 200, {0.6}, {0.3});
    std::vector<double> y(x);
    for (double& v : y) v = 1e6 * v + 3e7;
    const auto a = fit_arima(x, {1, 0, 1});
    const auto b = fit_arima(y, {1, 0, 1});
    CHECK(a.ar_coeffs[0] == doctest::Approx(b.ar_coeffs[0]).epsilon(1e-4));
    CHECK(a.ma_coeffs[0] == doctest::Approx(b.ma_coeffs[0]).epsilon(1e-4));
    CHECK(b.intercept == doctest::Approx(1e6 * a.intercept + 3e7).epsilon(1e-6));
}

TEST_CASE("coefficient recovery on long simulated series") {
    std::mt19937_64 rng(2024);
    const auto ar2 = testutil::simulate_arma(rng, 2000, {0.5, -0.3}, {});
    const auto f = fit_arima(ar2, {2, 0, 0});
    CHECK(f.ar_coeffs[0] == doctest::Approx(0.5).epsilon(0.1));
    CHECK(f.ar_coeffs[1] == doctest::Approx(-0.3).epsilon(0.15));
    CHECK(ar_is_stationary(f.ar_coeffs));

    const auto ma = testutil::simulate_arma(rng, 2000, {}, {-0.6});
    const auto g = fit_arima(ma, {0, 0, 1});
    CHECK(g.ma_coeffs[0] == doctest::Approx(-0.6).epsilon(0.1));
    CHECK(ma_is_invertible(g.ma_coeffs));
    CHECK(g.sigma2 == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("fit errors") {
    const std::vector<double> short_x{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK_THROWS_AS(fit_arima(short_x, {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_arima(short_x, {6, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fit_arima(short_x, {0, 3, 0}), std::invalid_argument);
    const std::vector<double> flat(40, 2.0);
    CHECK_THROWS_AS(fit_arima(flat, {1, 0, 0}), NumericalError);
}

TEST_CASE("random walk forecast: flat mean, sqrt(h) widths") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> z;
    std::vector<double> x(100);
    double acc = 0;
    for (double& v : x) v = acc += z(rng);
    const auto ts = TimeSeries::from_start("rw", 1900, x);
    const auto fit = fit_arima(ts, {0, 1, 0});
    const auto band = forecast::forecast(fit, ts, 4);
    for (double m : band.mean) CHECK(m == doctest::Approx(x.back()).epsilon(1e-12));
    const double h1 = band.upper[0] - band.mean[0];
    const double h4 = band.upper[3] - band.mean[3];
    CHECK(h4 / h1 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(h1 == doctest::Approx(1.96 * std::sqrt(fit.sigma2)));
}

TEST_CASE("AR(1) forecast decays to the mean analytically") {
    std::mt19937_64 rng(10);
    const auto x = testutil::simulate_arma(rng, 400, {0.6}, {});
    const auto ts = TimeSeries::from_start("ar", 1600, x);
    const auto fit = fit_arima(ts, {1, 0, 0});
    const double phi = fit.ar_coeffs[0];
    const double mu = fit.intercept;
    const auto band = forecast::forecast(fit, ts, 5);
    double expect = x.back();
    double var = 0.0;
    for (int h = 0; h < 5; ++h) {
        expect = mu + phi * (expect - mu);
        var += std::pow(phi, 2 * h);
        CHECK(band.mean[h] == doctest::Approx(expect).epsilon(1e-10));
        CHECK(band.upper[h] - band.mean[h] == doctest::Approx(1.96 * std::sqrt(fit.sigma2 * var)).epsilon(1e-10));
    }
}

TEST_CASE("ARIMA(0,2,1) on an exact quadratic extrapolates the quadratic with drift") {
    std::vector<double> x;
    for (int t = 0; t < 30; ++t) x.push_back(3.0 + 2.0 * t + 0.5 * t * t);
    // Small jitter keeps the second differences from being exactly constant.
    std::mt19937_64 rng(4);
    std::normal_distribution<double> z(0, 1e-6);
    for (double& v : x) v += z(rng);
    const auto ts = TimeSeries::from_start("q", 1990, x);
    FitOptions opt;
    opt.include_mean = true;
    const auto fit = fit_arima(ts, {0, 2, 1}, opt);
    CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-3));
    const auto band = forecast::forecast(fit, ts, 3);
    for (int h = 1; h <= 3; ++h) {
        const double t = 29 + h;
        CHECK(band.mean[h - 1] == doctest::Approx(3.0 + 2.0 * t + 0.5 * t * t).epsilon(1e-4));
    }
}

TEST_CASE("psi weights") {
    FittedArima m;
    m.order = {1, 0, 1};
    m.ar_coeffs = {0.5};
    m.ma_coeffs = {0.4};
    const auto psi = psi_weights(m, 4);
    CHECK(psi[0] == doctest::Approx(1.0));
    CHECK(psi[1] == doctest::Approx(0.9));
    CHECK(psi[2] == doctest::Approx(0.45));
    CHECK(psi[3] == doctest::Approx(0.225));

    FittedArima rw;
    rw.order = {0, 1, 0};
    for (double v : psi_weights(rw, 5)) CHECK(v == doctest::Approx(1.0));
    FittedArima i2;
    i2.order = {0, 2, 0};
    const auto p2 = psi_weights(i2, 4);
    CHECK(p2 == std::vector<double>{1, 2, 3, 4});
}

TEST_CASE("property: forecast band widths never shrink") {
    std::mt19937_64 rng(123);
    const ArimaOrder orders[] = {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {2, 1, 1}, {0, 2, 1}};
    for (const auto& o : orders) {
        for (int trial = 0; trial < 5; ++trial) {
            auto x = testutil::simulate_arma(rng, 80, {0.4}, {0.2});
            for (int k = 0; k < o.d; ++k) std::partial_sum(x.begin(), x.end(), x.begin());
            const auto ts = TimeSeries::from_start("s", 1900, x);
            const auto fit = fit_arima(ts, o);
            const auto band = forecast::forecast(fit, ts, 11);
            CAPTURE(o.str());
            for (std::size_t h = 0; h < band.size(); ++h) {
                CHECK(band.lower[h] <= band.mean[h]);
                CHECK(band.mean[h] <= band.upper[h]);
                if (h > 0)
                    CHECK(band.upper[h] - band.lower[h] >= band.upper[h - 1] - band.lower[h - 1] - 1e-9);
            }
        }
    }
}

TEST_CASE("forecast rejects a bad horizon") {
    const auto ts = TimeSeries::from_start("x", 2000, {1, 3, 2, 4, 3, 5, 4, 6, 5, 7, 6, 8});
    const auto fit = fit_arima(ts, {0, 0, 0});
    CHECK_THROWS_AS(forecast::forecast(fit, ts, 0), std::invalid_argument);
    CHECK_THROWS_AS(ArimaOrder({6, 0, 0}).validate(), std::invalid_argument);
    CHECK(ArimaOrder{1, 1, 3}.str() == "(1,1,3)");
}

TEST_CASE("difference examples") {
    const std::vector<double> x{1, 3, 6, 10};
    CHECK(difference(x, 1) == std::vector<double>{2, 3, 4});
    CHECK(difference(x, 2) == std::vector<double>{1, 1});
    CHECK(difference(x, 0) == x);
}

TEST_CASE("mean model residuals") {
    const std::vector<double> x{2, 4, 6, 8};
    const auto fit = fit_arima(x, {0, 0, 0});
    CHECK(fit.residuals == std::vector<double>{-3, -1, 1, 3});
}

TEST_CASE("hand-set models forecast analytically") {
    FittedArima mean;
    mean.order = {0, 0, 0};
    mean.intercept = 5.0;
    mean.sigma2 = 4.0;
    const auto ts = TimeSeries::from_start("x", 2000, {1, 9, 3, 7});
    const auto b = forecast::forecast(mean, ts, 5);
    for (std::size_t h = 0; h < b.size(); ++h) {
        CHECK(b.mean[h] == 5.0);
        CHECK(b.upper[h] - b.mean[h] == doctest::Approx(1.96 * 2.0));
    }

    FittedArima rw;
    rw.order = {0, 1, 0};
    rw.include_mean = false;
    rw.sigma2 = 9.0;
    const auto last = TimeSeries::from_start("y", 2000, {97, 99, 100});
    const auto r = forecast::forecast(rw, last, 6);
    for (int h = 1; h <= 6; ++h) {
        CHECK(r.mean[h - 1] == 100.0);
        CHECK(r.upper[h - 1] - r.mean[h - 1] == doctest::Approx(1.96 * 3.0 * std::sqrt(h)));
    }
}

TEST_CASE("seeded estimator examples") {
    std::mt19937_64 rng(151);
    const auto ar = testutil::simulate_arma(rng, 500, {0.7}, {});
    const double phi = fit_arima(ar, {1, 0, 0}).ar_coeffs[0];
    CHECK(phi >= 0.6);
    CHECK(phi <= 0.8);
    const auto ma = testutil::simulate_arma(rng, 500, {}, {0.5});
    const double theta = fit_arima(ma, {0, 0, 1}).ma_coeffs[0];
    CHECK(theta >= 0.35);
    CHECK(theta <= 0.65);
}
