#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "aamcba/band.hpp"
#include "aamcba/ingest/scenario.hpp"

namespace aamcba::ledger {

/// Per-factor benefit bands, one entry per horizon year.
using FactorBands = std::map<Factor, std::vector<BandValue>>;

struct AnnualResult {
    int year = 0;
    std::map<Factor, BandValue> benefits;  // excludes the tax pass-through
    BandValue tax;
    double capex = 0.0;
    double opex = 0.0;
    BandValue npi;

    BandValue total_benefits() const;
};

/// Wraps the tax series into bands over `horizon`; the series' own band is kept when present.
std::vector<BandValue> tax_passthrough(const ExogenousSeries& series, std::span<const int> horizon);

/// Sums each channel independently and subtracts capex + opex from every channel.
/// An absent `tax` contributes zero. Throws ValidationError when lengths differ from the horizon.
std::vector<AnnualResult> compute_npi(std::span<const int> horizon, const FactorBands& benefits,
                                      const std::optional<std::vector<BandValue>>& tax,
                                      std::span<const double> capex, std::span<const double> opex);

/// (last / first)^(1 / years) - 1.
double cagr(double first, double last, int years);

}  // namespace aamcba::ledger
