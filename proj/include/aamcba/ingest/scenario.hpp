#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aamcba/band.hpp"
#include "aamcba/forecast/arima_order.hpp"
#include "aamcba/ingest/time_series.hpp"

namespace aamcba {

/// The nine benefit factors. BF8 is the tax pass-through.
enum class Factor { BF1 = 1, BF2, BF3, BF4, BF5, BF6, BF7, BF8, BF9 };

inline constexpr Factor kAllFactors[] = {Factor::BF1, Factor::BF2, Factor::BF3,
                                         Factor::BF4, Factor::BF5, Factor::BF6,
                                         Factor::BF7, Factor::BF8, Factor::BF9};

std::string factor_id(Factor f);
std::optional<Factor> parse_factor(std::string_view id);

/// Sign convention for the eVTOL extra-cost term of the cargo factor.
enum class CiSign { AsPrinted, PositiveExtraCost };

/// Policy flags. Every field has a default so omitted keys are harmless.
struct Toggles {
    std::set<Factor> factors{std::begin(kAllFactors), std::end(kAllFactors)};
    bool bf2_use_trip_miles = false;
    int amortize_capex_years = 0;  // 0 charges drone capital cost in full every year
    bool bf3_single_ratio = false;
    CiSign bf4_ci_sign = CiSign::AsPrinted;
    bool bf6_matching_area = true;
    bool bf6_incremental = false;
    int bf7_case = 0;  // 1-based docking-station case; 0 selects the largest network
    bool forecast_drift = false;  // keep an intercept for differenced models

    bool enabled(Factor f) const { return factors.contains(f); }
    friend bool operator==(const Toggles&, const Toggles&) = default;
};

/// Per-year exogenous input (demand, cargo trips, population, tax, costs).
/// Optional lower/upper vectors carry a band; otherwise the series is a point.
struct ExogenousSeries {
    std::string name;
    std::vector<int> years;
    std::vector<double> values;
    std::optional<std::vector<double>> lower;
    std::optional<std::vector<double>> upper;
    std::string unit;

    bool covers(int year) const;
    double at(int year) const;
    BandValue band_at(int year) const;

    friend bool operator==(const ExogenousSeries&, const ExogenousSeries&) = default;
};

struct Scenario {
    std::vector<int> horizon;
    std::map<std::string, double> constants;
    std::map<std::string, std::vector<double>> vectors;
    std::map<std::string, ExogenousSeries> exogenous;
    std::map<std::string, TimeSeries> historical;
    std::map<std::string, forecast::ArimaOrder> orders;
    Toggles toggles;

    /// Throws ValidationError naming the key when it is absent.
    double constant(std::string_view key) const;
    const std::vector<double>& vector(std::string_view key) const;
    const ExogenousSeries& series(std::string_view key) const;
    double constant_or(std::string_view key, double fallback) const;

    /// Adoption factor: explicit `F_ag` or farms_large / farms_total.
    double adoption_factor() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Keys each factor needs. The ledger always needs `capex` and `opex`.
struct FactorRequirements {
    std::vector<std::string> constants;
    std::vector<std::string> vectors;
    std::vector<std::string> exogenous;
    std::vector<std::string> historical;
};
FactorRequirements requirements_for(Factor f);

/// Reference magnitudes used by `validate_scenario` for sanity warnings.
const std::map<std::string, double>& reference_constants();

/// Names of the variables forecast from history.
const std::vector<std::string>& forecast_variable_names();

}  // namespace aamcba
