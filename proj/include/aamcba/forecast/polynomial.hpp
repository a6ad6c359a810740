#pragma once

#include <span>
#include <vector>

namespace aamcba::forecast {

// Lag polynomials here use the ARIMA sign conventions:
//   AR:  1 - phi_1 B - ... - phi_p B^p
//   MA:  1 + theta_1 B + ... + theta_q B^q

/// True when every root of the AR polynomial lies strictly outside the unit circle.
bool ar_is_stationary(std::span<const double> phi);
/// True when every root of the MA polynomial lies strictly outside the unit circle.
bool ma_is_invertible(std::span<const double> theta);

/// Maps partial autocorrelations in (-1, 1) to stationary AR coefficients.
std::vector<double> reflection_to_ar(std::span<const double> reflection);
/// Inverse of `reflection_to_ar`; entries of magnitude >= 1 mean non-stationary.
std::vector<double> ar_to_reflection(std::span<const double> phi);

/// Coefficients c_1..c_k of (1 - sum phi_i B^i)(1 - B)^d written as 1 - sum c_i B^i.
std::vector<double> integrated_ar(std::span<const double> phi, int d);

}  // namespace aamcba::forecast
