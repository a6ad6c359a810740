#pragma once

#include <span>
#include <string>
#include <vector>

namespace aamcba {

/// Ordered yearly observations of one variable.
///
/// Construction through `TimeSeries::make` enforces the invariants: years are
/// contiguous and strictly increasing, values are finite and the two vectors
/// have the same length.
struct TimeSeries {
    std::string name;
    std::vector<int> years;
    std::vector<double> values;
    std::string unit;

    static TimeSeries make(std::string name, std::vector<int> years, std::vector<double> values,
                           std::string unit = {});
    /// Series starting at `first_year` with one value per consecutive year.
    static TimeSeries from_start(std::string name, int first_year, std::vector<double> values,
                                 std::string unit = {});

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
    int first_year() const { return years.front(); }
    int last_year() const { return years.back(); }
    std::span<const double> view() const { return values; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

/// Throws ValidationError naming the violated invariant.
void check_series_invariants(const TimeSeries& ts);

}  // namespace aamcba
