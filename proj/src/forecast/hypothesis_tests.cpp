#include "aamcba/forecast/hypothesis_tests.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "aamcba/errors.hpp"
#include "aamcba/forecast/correlation.hpp"

namespace aamcba::forecast {

namespace {

// MacKinnon (1994) response-surface coefficients, regression with a constant,
// one integrated series.
constexpr double kTauMax = 2.74;
constexpr double kTauMin = -18.83;
constexpr double kTauStar = -1.61;
constexpr double kSmallP[] = {2.1659, 1.4412, 0.038269};
constexpr double kLargeP[] = {1.7339, 0.93202, -0.12745, -0.010368};

template <std::size_t N>
double polyval(const double (&c)[N], double x) {
    double acc = 0.0;
    for (std::size_t i = N; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

}  // namespace

int default_adf_lag(std::size_t n) {
    if (n < 2) return 0;
    return static_cast<int>(std::floor(std::cbrt(static_cast<double>(n - 1)) + 1e-9));
}

double adf_p_value(double statistic) {
    if (statistic > kTauMax) return 1.0;
    if (statistic < kTauMin) return 0.0;
    const double z = statistic <= kTauStar ? polyval(kSmallP, statistic) : polyval(kLargeP, statistic);
    return boost::math::cdf(boost::math::normal(), z);
}

TestReport adf_test(std::span<const double> x, int max_lag) {
    if (max_lag < 0) throw std::invalid_argument("adf_test: max_lag must be non-negative");
    const auto n = static_cast<int>(x.size());
    const int k = max_lag;
    const int nobs = n - 1 - k;
    const int cols = k + 2;
    if (n < k + 4 || nobs <= cols)
        throw std::invalid_argument("adf_test: series too short for lag " + std::to_string(k));

    // The t-ratio is scale invariant; standardising keeps the normal equations tame.
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const double scale = std::sqrt(ss / n);
    if (!(scale > 0.0)) throw NumericalError("adf_test: singular regression (constant series)");

    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] - mean) / scale;
    std::vector<double> dy(y.size() - 1);
    for (std::size_t i = 1; i < y.size(); ++i) dy[i - 1] = y[i] - y[i - 1];

    Eigen::MatrixXd X(nobs, cols);
    Eigen::VectorXd target(nobs);
    for (int r = 0; r < nobs; ++r) {
        const int t = k + r;  // index into dy
        target(r) = dy[t];
        X(r, 0) = y[t];       // level lagged one period relative to dy[t]
        X(r, 1) = 1.0;
        for (int j = 1; j <= k; ++j) X(r, 1 + j) = dy[t - j];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < cols) throw NumericalError("adf_test: singular regression");
    const Eigen::VectorXd beta = qr.solve(target);
    const Eigen::VectorXd resid = target - X * beta;
    const double s2 = resid.squaredNorm() / (nobs - cols);
    if (!(s2 > 0.0)) throw NumericalError("adf_test: singular regression (perfect fit)");
    const Eigen::MatrixXd xtx_inv = (X.transpose() * X).inverse();
    const double se = std::sqrt(s2 * xtx_inv(0, 0));

    TestReport rep;
    rep.test = "ADF";
    rep.statistic = beta(0) / se;
    rep.p_value = adf_p_value(rep.statistic);
    rep.lags_used = k;
    rep.reject_null = rep.p_value <= kSignificance;
    return rep;
}

int default_ljung_box_lags(std::size_t n, int fitted_params) {
    const int base = std::min<int>(10, static_cast<int>(n / 5));
    return std::max(base, fitted_params + 1);
}

TestReport ljung_box(std::span<const double> residuals, int lags, int fitted_params) {
    if (fitted_params < 0) throw std::invalid_argument("ljung_box: negative parameter count");
    if (lags <= fitted_params)
        throw std::invalid_argument("ljung_box: lags must exceed the fitted parameter count");
    const auto n = static_cast<int>(residuals.size());
    if (n <= lags + 1) throw std::invalid_argument("ljung_box: insufficient residuals");

    const std::vector<double> r = acf(residuals, lags);
    double q = 0.0;
    for (int k = 1; k <= lags; ++k) q += r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k)] / (n - k);
    q *= static_cast<double>(n) * (n + 2);

    const double dof = lags - fitted_params;
    TestReport rep;
    rep.test = "Ljung-Box";
    rep.statistic = q;
    rep.p_value = std::clamp(boost::math::gamma_q(dof / 2.0, q / 2.0), 0.0, 1.0);
    rep.lags_used = lags;
    rep.reject_null = rep.p_value <= kSignificance;
    return rep;
}

}  // namespace aamcba::forecast
