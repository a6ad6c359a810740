#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aamcba/band.hpp"
#include "aamcba/bf/agriculture.hpp"
#include "aamcba/bf/environment.hpp"
#include "aamcba/bf/inspection.hpp"
#include "aamcba/bf/logistics.hpp"
#include "aamcba/bf/medical.hpp"
#include "aamcba/bf/mobility.hpp"
#include "aamcba/forecast/pipeline.hpp"
#include "aamcba/ingest/scenario.hpp"
#include "aamcba/ledger/ledger.hpp"

namespace aamcba::ledger {

struct EngineOptions {
    /// Fall back to a random walk when a variable cannot be fitted.
    bool best_effort = false;
    /// Use the scenario's `orders` section; otherwise every order is selected automatically.
    bool use_scenario_orders = true;
    /// Extra pins applied on top of (or instead of) the scenario's orders.
    std::map<std::string, forecast::ArimaOrder> pins;
};

struct VariableForecast {
    forecast::PipelineResult result;
    bool pinned = false;
    bool fallback = false;
};

/// Forecast bands of the historical variables, clipped at zero.
struct ForecastSet {
    std::map<std::string, VariableForecast> variables;
    std::map<std::string, TimeSeries> history;

    /// Observed value as a point band for in-sample years, the forecast band afterwards.
    BandValue at(const std::string& name, int year) const;
};

std::set<std::string> required_history(const Toggles& t);
ForecastSet forecast_variables(const Scenario& s, const std::set<std::string>& names,
                               const EngineOptions& options, std::vector<std::string>* warnings);

double pick(const BandValue& b, Channel c);

/// Every yearly input a factor can read, on one channel.
struct ChannelInputs {
    int year = 0;
    std::map<std::string, double> values;

    double get(const std::string& key) const;
};
ChannelInputs channel_inputs(const Scenario& s, const ForecastSet& f, int year, Channel c);

/// Factor constants mapped from scenario keys.
bf::MobilityConstants mobility_constants(const Scenario& s);
bf::PackageMarketConstants market_constants(const Scenario& s);
bf::CargoConstants cargo_constants(const Scenario& s);
bf::InspectionConstants inspection_constants(const Scenario& s);
bf::CropConstants crop_constants(const Scenario& s);
bf::LivestockConstants livestock_constants(const Scenario& s);
bf::MedicalConstants medical_constants(const Scenario& s);
bf::GhgConstants ghg_constants(const Scenario& s);

/// Scenario constants converted once for repeated evaluation.
struct FactorContext {
    bf::MobilityConstants mobility;
    bf::PackageMarketConstants market;
    bf::CargoConstants cargo;
    bf::InspectionConstants inspection;
    bf::CropConstants crops;
    bf::LivestockConstants livestock;
    bf::MedicalConstants medical;
    bf::GhgConstants ghg;
    std::size_t bf7_case = 0;  // 1-based, resolved

    static FactorContext from(const Scenario& s);
};

/// BF-6 parts: production value, crop cost savings, livestock savings.
std::array<double, 3> agriculture_parts(const FactorContext& ctx, const ChannelInputs& in);
/// BF-7 value for every station case (index k is case k+1).
std::vector<double> medical_cases(const FactorContext& ctx, const ChannelInputs& in);

/// One factor on one channel of one year. BF8 is handled by `tax_passthrough`.
double evaluate_factor(Factor f, const FactorContext& ctx, const ChannelInputs& in);

struct RunResult {
    std::vector<int> horizon;
    ForecastSet forecasts;
    FactorBands benefits;
    std::optional<std::vector<BandValue>> tax;
    std::vector<AnnualResult> annual;
    std::vector<std::array<BandValue, 3>> agriculture;  // per year, when BF6 is enabled
    std::vector<std::vector<BandValue>> medical;        // per year per case, when BF7 is enabled
    std::size_t bf7_case = 0;
    std::vector<std::string> warnings;
};

/// Forecast, evaluate every enabled factor per channel, then aggregate.
RunResult run_engine(const Scenario& s, const EngineOptions& options = {});

/// Benefit evaluation on an existing forecast set.
RunResult evaluate(const Scenario& s, ForecastSet forecasts);

}  // namespace aamcba::ledger
