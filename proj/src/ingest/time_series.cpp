#include "aamcba/ingest/time_series.hpp"

#include <cmath>

#include "aamcba/errors.hpp"

namespace aamcba {

TimeSeries TimeSeries::make(std::string name, std::vector<int> years, std::vector<double> values,
                            std::string unit) {
    TimeSeries ts{std::move(name), std::move(years), std::move(values), std::move(unit)};
    check_series_invariants(ts);
    return ts;
}

TimeSeries TimeSeries::from_start(std::string name, int first_year, std::vector<double> values,
                                  std::string unit) {
    std::vector<int> years(values.size());
    for (std::size_t i = 0; i < years.size(); ++i) years[i] = first_year + static_cast<int>(i);
    return make(std::move(name), std::move(years), std::move(values), std::move(unit));
}

void check_series_invariants(const TimeSeries& ts) {
    const std::string where = "series '" + ts.name + "': ";
    if (ts.years.size() != ts.values.size())
        throw ValidationError(where + "years and values differ in length");
    if (ts.values.empty()) throw ValidationError(where + "empty series");
    for (std::size_t i = 1; i < ts.years.size(); ++i) {
        const int prev = ts.years[i - 1];
        const int cur = ts.years[i];
        if (cur == prev) throw ValidationError(where + "duplicate year " + std::to_string(cur));
        if (cur < prev)
            throw ValidationError(where + "years not increasing at " + std::to_string(cur));
        if (cur != prev + 1)
            throw ValidationError(where + "year gap between " + std::to_string(prev) + " and " +
                                  std::to_string(cur));
    }
    for (std::size_t i = 0; i < ts.values.size(); ++i) {
        if (!std::isfinite(ts.values[i]))
            throw ValidationError(where + "non-finite value in year " +
                                  std::to_string(ts.years[i]));
    }
}

}  // namespace aamcba
