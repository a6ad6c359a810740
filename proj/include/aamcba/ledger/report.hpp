#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aamcba/ledger/engine.hpp"

namespace aamcba::ledger {

struct EmitSet {
    bool csv = true;
    bool json = true;
    bool plotdata = true;
};

/// Fixed-point with six decimals; negative zero prints as zero.
std::string format_value(double v);

std::string factor_csv(const RunResult& r, Factor f);
std::string npi_csv(const RunResult& r);
/// Long table `year,factor,lower,mean,upper` with an NPI row per year.
std::string results_csv(const RunResult& r);
nlohmann::json summary_json(const RunResult& r, const Scenario& s, std::uint64_t seed);
/// Figure series keyed by relative path, each `year,series,lower,mean,upper`.
std::map<std::string, std::string> plot_files(const RunResult& r, const Scenario& s);

/// Writes the selected artifacts below `out_dir` and returns the paths written.
std::vector<std::filesystem::path> write_reports(const RunResult& r, const Scenario& s,
                                                 const std::filesystem::path& out_dir,
                                                 std::uint64_t seed, const EmitSet& emit = {});

}  // namespace aamcba::ledger
