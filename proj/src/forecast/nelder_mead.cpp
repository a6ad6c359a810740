#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aamcba::forecast::detail {

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, double step, double tol, int max_iter) {
    const std::size_t n = start.size();
    if (n == 0) return {start, f(start), 0, true};

    std::vector<std::vector<double>> pts(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    std::vector<std::size_t> idx(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    auto along = [&](double coef, const std::vector<double>& worst, std::vector<double>& out) {
        for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + coef * (worst[j] - centroid[j]);
    };

    SimplexResult res;
    for (int it = 0; it < max_iter; ++it) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
        const std::size_t best = idx.front(), worst = idx.back(), second = idx[n - 1];
        res.iterations = it;
        if (vals[worst] - vals[best] <= tol * (std::abs(vals[best]) + tol)) {
            res.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / static_cast<double>(n);
        }

        along(-1.0, pts[worst], trial);
        const double fr = f(trial);
        if (fr < vals[best]) {
            along(-2.0, pts[worst], trial2);
            const double fe = f(trial2);
            if (fe < fr) {
                pts[worst] = trial2;
                vals[worst] = fe;
            } else {
                pts[worst] = trial;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = trial;
            vals[worst] = fr;
            continue;
        }
        // Contraction, outside when the reflected point beats the worst.
        const bool outside = fr < vals[worst];
        along(outside ? -0.5 : 0.5, pts[worst], trial2);
        const double fc = f(trial2);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = trial2;
            vals[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < n; ++j) pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
            vals[i] = f(pts[i]);
        }
    }
    const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    res.x = pts[best];
    res.value = vals[best];
    return res;
}

}  // namespace aamcba::forecast::detail
