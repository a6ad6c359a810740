#include "aamcba/forecast/arima.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "aamcba/errors.hpp"
#include "aamcba/forecast/correlation.hpp"
#include "aamcba/forecast/polynomial.hpp"
#include "nelder_mead.hpp"

namespace aamcba::forecast {

namespace {

// Reflection coefficients are kept strictly inside the unit interval so the
// fitted polynomials never touch the unit circle.
constexpr double kReflectionCap = 0.9999;

struct ArmaParams {
    std::vector<double> phi;
    std::vector<double> theta;
    double mu = 0.0;
};

ArmaParams unpack(const std::vector<double>& u, int p, int q, bool with_mean) {
    std::vector<double> k_ar(static_cast<std::size_t>(p));
    std::vector<double> k_ma(static_cast<std::size_t>(q));
    for (int i = 0; i < p; ++i) k_ar[i] = kReflectionCap * std::tanh(u[i]);
    for (int j = 0; j < q; ++j) k_ma[j] = kReflectionCap * std::tanh(u[p + j]);
    ArmaParams out;
    out.phi = reflection_to_ar(k_ar);
    out.theta = reflection_to_ar(k_ma);
    for (double& t : out.theta) t = -t;
    out.mu = with_mean ? u[p + q] : 0.0;
    return out;
}

/// Conditional one-step errors for t = p..n-1, pre-sample errors zero.
std::vector<double> css_errors(std::span<const double> w, const ArmaParams& a) {
    const int p = static_cast<int>(a.phi.size());
    const int q = static_cast<int>(a.theta.size());
    const int n = static_cast<int>(w.size());
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    for (int t = p; t < n; ++t) {
        double v = w[t] - a.mu;
        for (int i = 1; i <= p; ++i) v -= a.phi[i - 1] * (w[t - i] - a.mu);
        for (int j = 1; j <= q && t - j >= p; ++j) v -= a.theta[j - 1] * e[t - j];
        e[t] = v;
    }
    return {e.begin() + p, e.end()};
}

double css_objective(std::span<const double> w, const ArmaParams& a) {
    const int p = static_cast<int>(a.phi.size());
    const int q = static_cast<int>(a.theta.size());
    const int n = static_cast<int>(w.size());
    thread_local std::vector<double> e;
    e.assign(static_cast<std::size_t>(n), 0.0);
    double sse = 0.0;
    for (int t = p; t < n; ++t) {
        double v = w[t] - a.mu;
        for (int i = 1; i <= p; ++i) v -= a.phi[i - 1] * (w[t - i] - a.mu);
        for (int j = 1; j <= q && t - j >= p; ++j) v -= a.theta[j - 1] * e[t - j];
        e[t] = v;
        sse += v * v;
    }
    return std::isfinite(sse) ? sse : std::numeric_limits<double>::max();
}

bool resolve_mean(const FitOptions& options, int d) {
    return options.include_mean.value_or(d == 0);
}

}  // namespace

std::vector<double> difference(std::span<const double> x, int d) {
    if (d < 0) throw std::invalid_argument("difference: d must be non-negative");
    if (static_cast<std::size_t>(d) >= x.size() && d > 0)
        throw std::invalid_argument("difference: d exceeds length - 1");
    std::vector<double> out(x.begin(), x.end());
    for (int r = 0; r < d; ++r) {
        for (std::size_t i = 0; i + 1 < out.size(); ++i) out[i] = out[i + 1] - out[i];
        out.pop_back();
    }
    return out;
}

TimeSeries difference(const TimeSeries& ts, int d) {
    std::vector<double> v = difference(ts.view(), d);
    std::vector<int> years(ts.years.begin() + d, ts.years.end());
    return TimeSeries{ts.name, std::move(years), std::move(v), ts.unit};
}

std::vector<double> difference_heads(std::span<const double> x, int d) {
    std::vector<double> heads;
    std::vector<double> level(x.begin(), x.end());
    for (int r = 0; r < d; ++r) {
        if (level.empty()) throw std::invalid_argument("difference_heads: d exceeds length");
        heads.push_back(level.front());
        level = difference(level, 1);
    }
    return heads;
}

std::vector<double> integrate(std::span<const double> diffed, std::span<const double> heads) {
    std::vector<double> level(diffed.begin(), diffed.end());
    for (std::size_t r = heads.size(); r-- > 0;) {
        std::vector<double> up(level.size() + 1);
        up[0] = heads[r];
        for (std::size_t i = 0; i < level.size(); ++i) up[i + 1] = up[i] + level[i];
        level.swap(up);
    }
    return level;
}

FittedArima fit_arima(const TimeSeries& ts, ArimaOrder order, const FitOptions& options) {
    return fit_arima(ts.view(), order, options);
}

FittedArima fit_arima(std::span<const double> x, ArimaOrder order, const FitOptions& options) {
    order.validate();
    const int p = order.p;
    const int q = order.q;
    const int d = order.d;
    const bool with_mean = resolve_mean(options, d);
    const int m = static_cast<int>(x.size()) - d;
    if (p + q > 0 && m < p + q + 10)
        throw std::invalid_argument("fit_arima: series too short for order " + order.str());
    if (m < 1) throw std::invalid_argument("fit_arima: series too short to difference");

    const std::vector<double> w = difference(x, d);
    FittedArima fit;
    fit.order = order;
    fit.include_mean = with_mean;

    const double wmean = std::accumulate(w.begin(), w.end(), 0.0) / m;

    if (p + q == 0) {
        fit.intercept = with_mean ? wmean : 0.0;
        fit.residuals.resize(w.size());
        double sse = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            fit.residuals[i] = w[i] - fit.intercept;
            sse += fit.residuals[i] * fit.residuals[i];
        }
        fit.sigma2 = sse / m;
        fit.loglik_proxy = -sse;
        fit.n_obs = m;
        if (!(fit.sigma2 > 0.0)) throw NumericalError("fit_arima: zero innovation variance");
        return fit;
    }

    // Standardise so the objective and tolerance are scale free.
    const double center = with_mean ? wmean : 0.0;
    double ss = 0.0;
    for (double v : w) ss += (v - center) * (v - center);
    const double scale = std::sqrt(ss / m);
    if (!(scale > 0.0)) throw NumericalError("fit_arima: degenerate series after differencing");
    std::vector<double> z(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) z[i] = (w[i] - center) / scale;

    const std::size_t dim = static_cast<std::size_t>(p + q + (with_mean ? 1 : 0));
    auto objective = [&](const std::vector<double>& u) {
        return css_objective(z, unpack(u, p, q, with_mean));
    };

    // Yule-Walker partial autocorrelations seed the AR part.
    std::vector<double> seed(dim, 0.0);
    if (p > 0 && m > p + 1) {
        try {
            const auto partial = pacf(z, p);
            for (int i = 0; i < p; ++i)
                seed[i] = std::atanh(std::clamp(partial[i + 1] / kReflectionCap, -0.95, 0.95));
        } catch (const std::invalid_argument&) {
        }
    }

    constexpr double kSteps[] = {0.5, 0.5, 0.25, 1.0, 0.1, 0.05};
    detail::SimplexResult best{seed, objective(seed), 0, false};
    bool any_converged = false;
    const int runs = std::max(1, options.restarts + 1);
    int used = 0;
    for (int r = 0; r < runs; ++r) {
        std::vector<double> start = r == 1 ? std::vector<double>(dim, 0.0) : best.x;
        const double step = kSteps[std::min<std::size_t>(static_cast<std::size_t>(r), std::size(kSteps) - 1)];
        auto run = detail::nelder_mead(objective, std::move(start), step, options.tolerance,
                                       options.max_iterations);
        ++used;
        const double gain = best.value - run.value;
        if (run.value < best.value) best = run;
        if (!run.converged) continue;
        // Stop once a restart from the incumbent no longer improves it.
        const bool settled = any_converged && r >= 2 &&
                             gain <= options.tolerance * (std::abs(best.value) + options.tolerance);
        any_converged = true;
        if (settled) break;
    }
    if (!any_converged)
        throw NumericalError("fit_arima: optimizer did not converge for order " + order.str());

    const ArmaParams a = unpack(best.x, p, q, with_mean);
    if (!ar_is_stationary(a.phi) || !ma_is_invertible(a.theta))
        throw NumericalError("fit_arima: invariant-violating optimum for order " + order.str());

    fit.ar_coeffs = a.phi;
    fit.ma_coeffs = a.theta;
    fit.intercept = center + scale * a.mu;
    fit.restarts_used = used - 1;
    fit.residuals = arima_residuals(fit, x);
    double sse = 0.0;
    for (double e : fit.residuals) sse += e * e;
    fit.n_obs = static_cast<int>(fit.residuals.size());
    fit.sigma2 = sse / fit.n_obs;
    fit.loglik_proxy = -sse;
    if (!(fit.sigma2 > 0.0)) throw NumericalError("fit_arima: zero innovation variance");
    return fit;
}

std::vector<double> arima_residuals(const FittedArima& model, std::span<const double> x) {
    const std::vector<double> w = difference(x, model.order.d);
    if (static_cast<int>(w.size()) < model.order.p)
        throw std::invalid_argument("arima_residuals: series shorter than the AR order");
    ArmaParams a{model.ar_coeffs, model.ma_coeffs, model.include_mean ? model.intercept : 0.0};
    return css_errors(w, a);
}

std::size_t ForecastBand::index_of(int year) const {
    auto it = std::find(years.begin(), years.end(), year);
    if (it == years.end()) throw std::out_of_range("forecast band has no year " + std::to_string(year));
    return static_cast<std::size_t>(it - years.begin());
}

std::vector<double> psi_weights(const FittedArima& model, int count) {
    const std::vector<double> c = integrated_ar(model.ar_coeffs, model.order.d);
    std::vector<double> psi(static_cast<std::size_t>(std::max(count, 0)), 0.0);
    for (int j = 0; j < count; ++j) {
        double v = j == 0 ? 1.0 : 0.0;
        if (j >= 1 && j <= static_cast<int>(model.ma_coeffs.size())) v += model.ma_coeffs[j - 1];
        for (int i = 1; i <= std::min<int>(j, static_cast<int>(c.size())); ++i) v += c[i - 1] * psi[j - i];
        psi[j] = v;
    }
    return psi;
}

ForecastBand forecast(const FittedArima& model, const TimeSeries& last_values, int horizon) {
    if (horizon < 1) throw std::invalid_argument("forecast: horizon must be at least 1");
    const int p = model.order.p;
    const int q = model.order.q;
    const int d = model.order.d;
    if (static_cast<int>(last_values.size()) < p + d + 1)
        throw std::invalid_argument("forecast: need at least p + d + 1 observations");

    const std::vector<double> w = difference(last_values.view(), d);
    const std::vector<double> e = q > 0 ? arima_residuals(model, last_values.view())
                                        : std::vector<double>{};
    const double mu = model.include_mean ? model.intercept : 0.0;

    // Differenced-scale forecasts.
    std::vector<double> hist(w.begin(), w.end());
    std::vector<double> wf(static_cast<std::size_t>(horizon));
    for (int h = 1; h <= horizon; ++h) {
        double v = mu;
        for (int i = 1; i <= p; ++i) v += model.ar_coeffs[i - 1] * (hist[hist.size() - i] - mu);
        for (int j = h; j <= q; ++j) {
            const int back = j - h;  // e_{T - back}
            if (back < static_cast<int>(e.size())) v += model.ma_coeffs[j - 1] * e[e.size() - 1 - back];
        }
        wf[h - 1] = v;
        hist.push_back(v);
    }

    // Integrate back through each differencing level using its last observed value.
    std::vector<double> level = wf;
    for (int r = d; r-- > 0;) {
        const std::vector<double> base = difference(last_values.view(), r);
        double prev = base.back();
        for (double& v : level) {
            prev += v;
            v = prev;
        }
    }

    const std::vector<double> psi = psi_weights(model, horizon);
    const double sigma = std::sqrt(model.sigma2);
    ForecastBand band;
    double acc = 0.0;
    for (int h = 1; h <= horizon; ++h) {
        acc += psi[h - 1] * psi[h - 1];
        const double half = kBandZ * sigma * std::sqrt(acc);
        band.years.push_back(last_values.last_year() + h);
        band.mean.push_back(level[h - 1]);
        band.lower.push_back(level[h - 1] - half);
        band.upper.push_back(level[h - 1] + half);
    }
    return band;
}

}  // namespace aamcba::forecast
