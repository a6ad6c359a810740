#pragma once

#include <optional>
#include <vector>

#include "aamcba/forecast/arima.hpp"
#include "aamcba/forecast/hypothesis_tests.hpp"

namespace aamcba::forecast {

inline constexpr std::size_t kMinForecastLength = 8;

struct PipelineOptions {
    int horizon = 11;
    bool drift_when_differenced = false;
    FitOptions fit;
};

struct PipelineResult {
    FittedArima model;
    ForecastBand band;
    std::vector<TestReport> diagnostics;
    std::vector<ArimaOrder> tried;
    bool adequate = false;  // Ljung-Box did not reject on the chosen fit
};

/// Order chosen from ACF/PACF: p (q) is the last PACF (ACF) lag among 1..5
/// outside the Bartlett band, reduced until length - d >= p + q + 10.
ArimaOrder select_order(std::span<const double> differenced, int d);

/// Stationarity testing, differencing, order selection, fitting, residual
/// checking and forecasting. A pinned order is used verbatim. Otherwise the
/// ADF test is repeated on successive differences until it rejects (d <= 2),
/// and when Ljung-Box rejects, q then p is raised once each. If no candidate
/// passes, the candidate with the largest Ljung-Box p-value is returned with
/// `adequate == false`.
PipelineResult auto_pipeline(const TimeSeries& ts, std::optional<ArimaOrder> pinned,
                             const PipelineOptions& options = {});

}  // namespace aamcba::forecast
