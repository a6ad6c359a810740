#include "aamcba/forecast/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aamcba/errors.hpp"
#include "aamcba/forecast/correlation.hpp"

namespace aamcba::forecast {

namespace {

constexpr int kSelectionLags = 5;

int last_outside(const std::vector<double>& r, double bound) {
    int last = 0;
    for (std::size_t k = 1; k < r.size(); ++k) {
        if (std::abs(r[k]) > bound) last = static_cast<int>(k);
    }
    return last;
}

/// Shrinks p and q (larger first, q on ties) until the fit length rule holds.
ArimaOrder fit_within_length(ArimaOrder o, std::size_t length) {
    const int m = static_cast<int>(length) - o.d;
    while (o.p + o.q > 0 && m < o.p + o.q + 10) {
        if (o.p > o.q) --o.p;
        else --o.q;
    }
    return o;
}

struct Candidate {
    FittedArima model;
    TestReport whiteness;
};

std::optional<TestReport> residual_check(const FittedArima& fit) {
    const int params = fit.order.p + fit.order.q;
    const int lags = default_ljung_box_lags(fit.residuals.size(), params);
    if (static_cast<int>(fit.residuals.size()) <= lags + 1) return std::nullopt;
    TestReport rep = ljung_box(fit.residuals, lags, params);
    rep.test = "Ljung-Box " + fit.order.str();
    return rep;
}

}  // namespace

ArimaOrder select_order(std::span<const double> differenced, int d) {
    ArimaOrder o{0, d, 0};
    const int m = static_cast<int>(differenced.size());
    const int lags = std::min(kSelectionLags, m - 1);
    if (lags < 1) return o;
    std::vector<double> r;
    std::vector<double> pr;
    try {
        r = acf(differenced, lags);
        pr = pacf(differenced, lags);
    } catch (const std::invalid_argument&) {
        return o;  // zero variance: nothing left to model
    }
    const double band = bartlett_bound(differenced.size());
    o.p = last_outside(pr, band);
    o.q = last_outside(r, band);
    return fit_within_length(o, differenced.size() + static_cast<std::size_t>(d));
}

PipelineResult auto_pipeline(const TimeSeries& ts, std::optional<ArimaOrder> pinned,
                             const PipelineOptions& options) {
    check_series_invariants(ts);
    if (ts.size() < kMinForecastLength)
        throw std::invalid_argument("series '" + ts.name + "' needs at least " +
                                    std::to_string(kMinForecastLength) + " observations");
    if (options.horizon < 1) throw std::invalid_argument("auto_pipeline: horizon must be >= 1");

    PipelineResult out;
    std::vector<ArimaOrder> candidates;

    if (pinned) {
        pinned->validate();
        candidates.push_back(*pinned);
    } else {
        int d = 0;
        std::vector<double> level(ts.values);
        while (true) {
            const int lag = default_adf_lag(level.size());
            bool stationary = false;
            try {
                TestReport rep = adf_test(level, lag);
                rep.test = "ADF d=" + std::to_string(d);
                stationary = rep.reject_null;
                out.diagnostics.push_back(rep);
            } catch (const NumericalError&) {
                stationary = true;  // a constant level is trivially stationary
            } catch (const std::invalid_argument&) {
                stationary = true;  // too short to test further
            }
            if (stationary || d == kMaxDiff) break;
            level = difference(level, 1);
            ++d;
        }
        const ArimaOrder base = select_order(level, d);
        candidates.push_back(base);
        ArimaOrder more_q = base;
        more_q.q = std::min(base.q + 1, kMaxMa);
        ArimaOrder more_p = more_q;
        more_p.p = std::min(base.p + 1, kMaxAr);
        for (ArimaOrder c : {more_q, more_p}) {
            if (fit_within_length(c, ts.size()) == c &&
                std::find(candidates.begin(), candidates.end(), c) == candidates.end())
                candidates.push_back(c);
        }
    }

    std::optional<Candidate> best;
    std::string last_error;
    for (const ArimaOrder& order : candidates) {
        out.tried.push_back(order);
        FittedArima fit;
        try {
            FitOptions o = options.fit;
            if (!options.fit.include_mean.has_value())
                o.include_mean = order.d == 0 || options.drift_when_differenced;
            fit = fit_arima(ts, order, o);
        } catch (const NumericalError& e) {
            last_error = e.what();
            continue;
        }
        const auto check = residual_check(fit);
        TestReport rep = check.value_or(TestReport{"Ljung-Box " + order.str() + " (skipped)", 0.0, 1.0, 0, false});
        out.diagnostics.push_back(rep);
        if (!best || rep.p_value > best->whiteness.p_value) best = Candidate{fit, rep};
        if (!rep.reject_null) {
            best = Candidate{fit, rep};
            break;
        }
    }
    if (!best)
        throw NumericalError("series '" + ts.name + "': no ARIMA candidate could be fitted (" +
                             last_error + ")");

    out.model = best->model;
    out.adequate = !best->whiteness.reject_null;
    out.band = forecast(out.model, ts, options.horizon);
    return out;
}

}  // namespace aamcba::forecast
