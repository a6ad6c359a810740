#pragma once

#include <span>
#include <vector>

#include "aamcba/ingest/time_series.hpp"

namespace aamcba::forecast {

/// Sample autocorrelation r_0..r_max_lag (r_0 = 1). The mean is removed and the
/// lag-k sum is divided by the full-sample sum of squares.
std::vector<double> acf(std::span<const double> x, int max_lag);
inline std::vector<double> acf(const TimeSeries& ts, int max_lag) { return acf(ts.view(), max_lag); }

/// Partial autocorrelation via the Durbin-Levinson recursion; pacf[0] = 1.
std::vector<double> pacf(std::span<const double> x, int max_lag);
inline std::vector<double> pacf(const TimeSeries& ts, int max_lag) {
    return pacf(ts.view(), max_lag);
}

/// 95% white-noise band half-width 1.96 / sqrt(n).
double bartlett_bound(std::size_t n);

}  // namespace aamcba::forecast
