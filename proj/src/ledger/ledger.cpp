#include "aamcba/ledger/ledger.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aamcba/errors.hpp"

namespace aamcba::ledger {

BandValue AnnualResult::total_benefits() const {
    BandValue total;
    for (const auto& [f, b] : benefits) total += b;
    return total;
}

std::vector<BandValue> tax_passthrough(const ExogenousSeries& series, std::span<const int> horizon) {
    if (series.values.empty()) throw ValidationError("tax series '" + series.name + "' is empty");
    std::vector<BandValue> out;
    out.reserve(horizon.size());
    for (int y : horizon) {
        if (!series.covers(y))
            throw ValidationError("tax series '" + series.name + "' has no value for year " +
                                  std::to_string(y));
        out.push_back(series.band_at(y));
    }
    return out;
}

std::vector<AnnualResult> compute_npi(std::span<const int> horizon, const FactorBands& benefits,
                                      const std::optional<std::vector<BandValue>>& tax,
                                      std::span<const double> capex, std::span<const double> opex) {
    const std::size_t n = horizon.size();
    auto misaligned = [&](const std::string& what, std::size_t got) {
        return ValidationError("horizon misalignment: " + what + " has " + std::to_string(got) +
                               " entries for a " + std::to_string(n) + "-year horizon");
    };
    if (capex.size() != n) throw misaligned("capex", capex.size());
    if (opex.size() != n) throw misaligned("opex", opex.size());
    if (tax && tax->size() != n) throw misaligned("tax", tax->size());
    for (const auto& [f, v] : benefits)
        if (v.size() != n) throw misaligned(factor_id(f), v.size());

    std::vector<AnnualResult> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        AnnualResult& r = out[i];
        r.year = horizon[i];
        for (const auto& [f, v] : benefits) r.benefits[f] = v[i];
        r.tax = tax ? (*tax)[i] : BandValue{};
        r.capex = capex[i];
        r.opex = opex[i];
        r.npi = r.total_benefits();
        r.npi += r.tax;
        r.npi -= r.capex + r.opex;
    }
    return out;
}

double cagr(double first, double last, int years) {
    if (!(first > 0.0)) throw std::invalid_argument("cagr: first value must be positive");
    if (years < 1) throw std::invalid_argument("cagr: years must be >= 1");
    return std::pow(last / first, 1.0 / years) - 1.0;
}

}  // namespace aamcba::ledger
