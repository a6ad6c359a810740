#pragma once

#include <functional>
#include <vector>

namespace aamcba::forecast::detail {

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Nelder-Mead downhill simplex. Converges when the spread of objective
/// values across the simplex drops below tol * (|f_best| + tol).
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, double step, double tol, int max_iter);

}  // namespace aamcba::forecast::detail
