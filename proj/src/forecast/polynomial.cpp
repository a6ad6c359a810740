#include "aamcba/forecast/polynomial.hpp"

#include <cmath>

namespace aamcba::forecast {

std::vector<double> ar_to_reflection(std::span<const double> phi) {
    const std::size_t p = phi.size();
    std::vector<double> a(phi.begin(), phi.end());
    std::vector<double> k(p, 0.0);
    std::vector<double> prev;
    for (std::size_t m = p; m >= 1; --m) {
        const double km = a[m - 1];
        k[m - 1] = km;
        if (std::abs(km) >= 1.0) {
            // Non-stationary; the lower-order terms are not meaningful.
            return k;
        }
        const double denom = 1.0 - km * km;
        prev.assign(m - 1, 0.0);
        for (std::size_t j = 1; j < m; ++j) prev[j - 1] = (a[j - 1] + km * a[m - j - 1]) / denom;
        a.swap(prev);
    }
    return k;
}

std::vector<double> reflection_to_ar(std::span<const double> reflection) {
    std::vector<double> phi;
    std::vector<double> next;
    for (std::size_t m = 1; m <= reflection.size(); ++m) {
        const double km = reflection[m - 1];
        next.assign(m, 0.0);
        for (std::size_t j = 1; j < m; ++j) next[j - 1] = phi[j - 1] - km * phi[m - j - 1];
        next[m - 1] = km;
        phi.swap(next);
    }
    return phi;
}

bool ar_is_stationary(std::span<const double> phi) {
    for (double k : ar_to_reflection(phi)) {
        if (!(std::abs(k) < 1.0)) return false;
    }
    return true;
}

bool ma_is_invertible(std::span<const double> theta) {
    std::vector<double> neg(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) neg[i] = -theta[i];
    return ar_is_stationary(neg);
}

std::vector<double> integrated_ar(std::span<const double> phi, int d) {
    // Work with the full polynomial 1 - sum phi_i B^i, then multiply by (1 - B) d times.
    std::vector<double> poly(phi.size() + 1);
    poly[0] = 1.0;
    for (std::size_t i = 0; i < phi.size(); ++i) poly[i + 1] = -phi[i];
    for (int r = 0; r < d; ++r) {
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= poly[i];
        }
        poly.swap(next);
    }
    std::vector<double> c(poly.size() - 1);
    for (std::size_t i = 1; i < poly.size(); ++i) c[i - 1] = -poly[i];
    return c;
}

}  // namespace aamcba::forecast
