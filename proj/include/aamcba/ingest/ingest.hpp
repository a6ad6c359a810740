#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aamcba/ingest/scenario.hpp"
#include "aamcba/ingest/time_series.hpp"

namespace aamcba::ingest {

/// Reads a `year,value` CSV. A header row and `# unit: ...` comment lines are
/// optional. Throws ValidationError on a missing file, non-numeric cell, year
/// gap or duplicate year.
TimeSeries load_series(const std::filesystem::path& path, const std::string& name);
TimeSeries parse_series_csv(std::istream& in, const std::string& name);

Scenario load_scenario(const std::filesystem::path& path);
/// `base_dir` resolves relative `file` references inside the document.
Scenario parse_scenario(const nlohmann::json& doc, const std::filesystem::path& base_dir);

/// Inline, self-contained form; `parse_scenario(to_json(s), {}) == s`.
nlohmann::json to_json(const Scenario& s);

/// Fatal checks run by the loader; exposed so programmatically built
/// scenarios can be checked the same way.
void check_scenario(const Scenario& s);

/// Non-fatal sanity warnings. Never mutates its input.
std::vector<std::string> validate_scenario(const Scenario& s);

/// Spreads a cargo tonnage total into yearly eVTOL trips:
/// trips_y = total_tons * 2000 / payload_lb * share_y.
std::map<int, double> cargo_trips_from_tonnage(double total_tons, double payload_lb,
                                               const std::map<int, double>& shares);

}  // namespace aamcba::ingest
