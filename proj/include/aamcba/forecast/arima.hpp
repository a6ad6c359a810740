#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aamcba/forecast/arima_order.hpp"
#include "aamcba/ingest/time_series.hpp"

namespace aamcba::forecast {

inline constexpr double kBandZ = 1.96;

/// d-th order difference; the result starts d years later.
TimeSeries difference(const TimeSeries& ts, int d);
std::vector<double> difference(std::span<const double> x, int d);

/// First element of each differencing level 0..d-1. Together with the d-th
/// difference they reconstruct the original series through `integrate`.
std::vector<double> difference_heads(std::span<const double> x, int d);
std::vector<double> integrate(std::span<const double> diffed, std::span<const double> heads);

struct FittedArima {
    ArimaOrder order;
    std::vector<double> ar_coeffs;
    std::vector<double> ma_coeffs;
    double intercept = 0.0;  // mean of the differenced series
    bool include_mean = true;
    double sigma2 = 0.0;
    std::vector<double> residuals;  // on the differenced scale
    double loglik_proxy = 0.0;      // -(conditional sum of squares)
    int n_obs = 0;                  // residual count
    int restarts_used = 0;
};

struct FitOptions {
    /// Unset follows the convention: intercept when d == 0, none otherwise.
    std::optional<bool> include_mean;
    int restarts = 5;
    double tolerance = 1e-8;
    int max_iterations = 4000;
};

/// Conditional-sum-of-squares fit of an ARIMA(p,d,q) model.
///
/// The series is differenced d times. A (0,d,0) model is the mean model:
/// intercept is the sample mean and sigma2 the mean squared deviation. Other
/// orders minimise the sum of squared one-step errors, started at t = p with
/// pre-sample errors set to zero, using Nelder-Mead over a parameterisation
/// that keeps the AR part stationary and the MA part invertible. Requires
/// length - d >= p + q + 10.
///
/// Throws std::invalid_argument on a bad order or a short series and
/// NumericalError on a degenerate series or when no restart converges.
FittedArima fit_arima(const TimeSeries& ts, ArimaOrder order, const FitOptions& options = {});
FittedArima fit_arima(std::span<const double> x, ArimaOrder order, const FitOptions& options = {});

/// Conditional residuals of `model` re-evaluated on `x` (same differencing).
std::vector<double> arima_residuals(const FittedArima& model, std::span<const double> x);

struct ForecastBand {
    std::vector<int> years;
    std::vector<double> mean;
    std::vector<double> lower;
    std::vector<double> upper;
    double confidence = 0.95;

    std::size_t size() const { return years.size(); }
    /// Index of `year`, or throws std::out_of_range.
    std::size_t index_of(int year) const;
};

/// psi_0..psi_{count-1} of the integrated model (AR part multiplied by (1-B)^d).
std::vector<double> psi_weights(const FittedArima& model, int count);

/// Iterated one-step forecasts integrated back d times. The half-width at
/// step h is 1.96 * sigma * sqrt(sum_{j<h} psi_j^2). `last_values` is the
/// series the model was fitted on (at least p + d observations).
ForecastBand forecast(const FittedArima& model, const TimeSeries& last_values, int horizon);

}  // namespace aamcba::forecast
