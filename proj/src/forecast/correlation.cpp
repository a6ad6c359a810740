#include "aamcba/forecast/correlation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace aamcba::forecast {

std::vector<double> acf(std::span<const double> x, int max_lag) {
    const std::size_t n = x.size();
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n)
        throw std::invalid_argument("acf: max_lag must be in [0, n)");
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    double denom = 0.0;
    for (double v : x) denom += (v - mean) * (v - mean);
    if (!(denom > 0.0)) throw std::invalid_argument("acf: zero-variance series");

    std::vector<double> r(static_cast<std::size_t>(max_lag) + 1);
    r[0] = 1.0;
    for (int k = 1; k <= max_lag; ++k) {
        double s = 0.0;
        for (std::size_t t = static_cast<std::size_t>(k); t < n; ++t)
            s += (x[t] - mean) * (x[t - k] - mean);
        r[static_cast<std::size_t>(k)] = s / denom;
    }
    return r;
}

std::vector<double> pacf(std::span<const double> x, int max_lag) {
    const std::vector<double> r = acf(x, max_lag);
    std::vector<double> out(r.size());
    out[0] = 1.0;
    std::vector<double> phi;   // phi_{k-1, 1..k-1}
    std::vector<double> next;
    double v = 1.0;            // prediction error variance relative to r_0
    for (int k = 1; k <= max_lag; ++k) {
        double num = r[static_cast<std::size_t>(k)];
        for (int j = 1; j < k; ++j) num -= phi[j - 1] * r[static_cast<std::size_t>(k - j)];
        const double kk = v > 0.0 ? num / v : 0.0;
        next.assign(static_cast<std::size_t>(k), 0.0);
        for (int j = 1; j < k; ++j) next[j - 1] = phi[j - 1] - kk * phi[k - j - 1];
        next[k - 1] = kk;
        phi.swap(next);
        v *= (1.0 - kk * kk);
        out[static_cast<std::size_t>(k)] = kk;
    }
    return out;
}

double bartlett_bound(std::size_t n) { return 1.96 / std::sqrt(static_cast<double>(n)); }

}  // namespace aamcba::forecast
