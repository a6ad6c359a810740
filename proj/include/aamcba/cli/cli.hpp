#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aamcba/ingest/scenario.hpp"
#include "aamcba/ledger/engine.hpp"
#include "aamcba/ledger/report.hpp"

namespace aamcba::cli {

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitNumerical = 3 };

struct RunManifest {
    std::string scenario = "default.json";
    std::filesystem::path output_dir = "aamcba-out";
    std::optional<std::set<Factor>> factors;
    std::uint64_t seed = 0;
    ledger::EmitSet emit;
    bool best_effort = false;
    std::vector<std::string> toggles;     // key=value
    std::vector<std::string> pin_orders;  // NAME=p,d,q or "auto"
};

/// An existing path is used as given. Otherwise the name is looked up in each
/// directory of AAMCBA_SCENARIO_DIR (colon separated), then in the bundled scenarios.
std::filesystem::path resolve_scenario(const std::string& name);

std::set<Factor> parse_factor_list(const std::string& csv);
/// Applies `key=value` onto a toggles object; values parse as bool, integer or string.
void apply_toggle(nlohmann::json& toggles, const std::string& assignment);
ledger::EngineOptions engine_options(const RunManifest& m);

/// Loads the scenario with the manifest's factor and toggle overrides applied.
Scenario load_for_manifest(const RunManifest& m);

/// Runs the full pipeline and writes reports. Returns an ExitCode.
int run(const RunManifest& m, std::ostream& out, std::ostream& err);

/// Intermediate quantities of one factor-year on the mean channel.
std::string explain_text(Factor f, int year, const Scenario& s, const ledger::RunResult& r);
int explain(const std::string& factor, int year, const RunManifest& m, std::ostream& out,
            std::ostream& err);

}  // namespace aamcba::cli
