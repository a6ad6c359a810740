#include "aamcba/ingest/scenario.hpp"

#include <algorithm>

#include "aamcba/errors.hpp"

namespace aamcba {

std::string factor_id(Factor f) { return "BF" + std::to_string(static_cast<int>(f)); }

std::optional<Factor> parse_factor(std::string_view id) {
    for (Factor f : kAllFactors) {
        if (factor_id(f) == id) return f;
    }
    return std::nullopt;
}

namespace {

std::size_t index_of(const ExogenousSeries& s, int year) {
    if (s.years.empty() || year < s.years.front() || year > s.years.back())
        throw ValidationError("series '" + s.name + "' has no value for year " +
                              std::to_string(year));
    return static_cast<std::size_t>(year - s.years.front());
}

}  // namespace

bool ExogenousSeries::covers(int year) const {
    return !years.empty() && year >= years.front() && year <= years.back();
}

double ExogenousSeries::at(int year) const { return values[index_of(*this, year)]; }

BandValue ExogenousSeries::band_at(int year) const {
    const std::size_t i = index_of(*this, year);
    const double m = values[i];
    const double lo = lower ? (*lower)[i] : m;
    const double hi = upper ? (*upper)[i] : m;
    return {lo, m, hi};
}

double Scenario::constant(std::string_view key) const {
    auto it = constants.find(std::string(key));
    if (it == constants.end())
        throw ValidationError("missing required constant '" + std::string(key) + "'");
    return it->second;
}

double Scenario::constant_or(std::string_view key, double fallback) const {
    auto it = constants.find(std::string(key));
    return it == constants.end() ? fallback : it->second;
}

const std::vector<double>& Scenario::vector(std::string_view key) const {
    auto it = vectors.find(std::string(key));
    if (it == vectors.end())
        throw ValidationError("missing required vector constant '" + std::string(key) + "'");
    return it->second;
}

const ExogenousSeries& Scenario::series(std::string_view key) const {
    auto it = exogenous.find(std::string(key));
    if (it == exogenous.end())
        throw ValidationError("missing required series '" + std::string(key) + "'");
    return it->second;
}

double Scenario::adoption_factor() const {
    if (auto it = constants.find("F_ag"); it != constants.end()) return it->second;
    return constant("farms_large") / constant("farms_total");
}

FactorRequirements requirements_for(Factor f) {
    switch (f) {
        case Factor::BF1:
            return {{"VTTS_2015", "MHI_2015", "s"}, {}, {"D"}, {"MHI"}};
        case Factor::BF2:
            return {{"d1", "A_g", "A_a", "seats_per_evtol"}, {}, {"D", "P_US"}, {"VMT_US", "P", "VSL"}};
        case Factor::BF3:
            return {{"V_2019", "U_2019", "CAGR", "parcels_2022", "parcel_fraction",
                     "operational_days", "R_t", "m", "n", "q", "C_c", "C_o", "ATS", "VDTS",
                     "reserve_fraction"},
                    {},
                    {"P_US"},
                    {"P"}};
        case Factor::BF4:
            return {{"p_e", "p_t", "c_t", "c_e", "f_e", "warehouse_rent", "warehouse_size",
                     "warehouse_nnn", "warehouse_wage", "area_per_worker", "s", "d1", "VDTS"},
                    {},
                    {"T"},
                    {}};
        case Factor::BF5:
            return {{"I", "alpha", "TLCT", "RLCT", "ADV", "snooper_core", "snooper_offhours",
                     "drone_core", "drone_offhours", "core_share", "drone_capable_count",
                     "occupancy", "VTTS_2015", "MHI_2015"},
                    {},
                    {},
                    {"MHI"}};
        case Factor::BF6:
            return {{"y_uplift", "x_uplift", "d_corn", "d_soy", "d_wheat", "ST1", "ST2", "l_c",
                     "FL"},
                    {},
                    {},
                    {"A_soy", "A_corn", "A_wheat", "Y_soy", "Y_corn", "Y_wheat", "price_soy",
                     "price_corn", "price_wheat", "L"}};
        case Factor::BF7:
            return {{"ohca_per_100k"}, {"DSN", "p_s", "CAS"}, {}, {"P", "VSL"}};
        case Factor::BF8:
            return {{}, {}, {"tax"}, {}};
        case Factor::BF9:
            return {{"SCC", "SCM", "SCN", "scc_discount", "scc_base_year", "MPG", "F_eq", "g_C",
                     "F_f", "Tr_US", "seats_per_evtol", "V_2019", "U_2019", "CAGR",
                     "parcels_2022", "parcel_fraction"},
                    {},
                    {"D", "T", "P_US"},
                    {"VMT_US", "P"}};
    }
    return {};
}

const std::map<std::string, double>& reference_constants() {
    static const std::map<std::string, double> table = {
        {"VTTS_2015", 17.25},       {"s", 50.0},
        {"d1", 50.0},               {"A_g", 0.6},
        {"A_a", 0.3},               {"seats_per_evtol", 4.0},
        {"V_2019", 343.303},        {"U_2019", 211.553},
        {"CAGR", 0.538},            {"parcels_2022", 6.5e9},
        {"parcel_fraction", 0.86},  {"operational_days", 284.0},
        {"R_t", 24.0},              {"m", 10.0},
        {"n", 250.0},               {"q", 30.0},
        {"C_c", 4000.0},            {"C_o", 800.0},
        {"ATS", 13.0},              {"VDTS", 3.61},
        {"reserve_fraction", 0.25}, {"p_e", 525.0},
        {"p_t", 24000.0},           {"c_t", 1.417},
        {"c_e", 34.0},              {"f_e", 0.44},
        {"warehouse_rent", 0.79},   {"warehouse_size", 39631.0},
        {"warehouse_nnn", 0.25},    {"warehouse_wage", 27867.0},
        {"area_per_worker", 138.0}, {"I", 400.0},
        {"alpha", 1200.0},          {"TLCT", 8.0},
        {"RLCT", 4.0},              {"ADV", 10.0},
        {"snooper_core", 3143.0},   {"snooper_offhours", 4152.0},
        {"drone_core", 522.0},      {"drone_offhours", 735.0},
        {"core_share", 0.8},        {"drone_capable_count", 200.0},
        {"occupancy", 1.0},         {"y_uplift", 0.025},
        {"x_uplift", 0.033},        {"d_corn", 11.58},
        {"d_soy", 2.28},            {"d_wheat", 2.57},
        {"farms_large", 13893.0},   {"farms_total", 77805.0},
        {"ST1", 26.0},              {"ST2", 104.0},
        {"l_c", 980.0},             {"FL", 13.93},
        {"ohca_per_100k", 55.0},    {"SCC", 51.0},
        {"SCM", 1200.0},            {"SCN", 1500.0},
        {"scc_discount", 0.03},     {"scc_base_year", 2020.0},
        {"MPG", 22.5},              {"F_eq", 0.993},
        {"g_C", 8.89e-3},           {"F_f", 0.35},
        {"Tr_US", 4.11e11},
    };
    return table;
}

const std::vector<std::string>& forecast_variable_names() {
    static const std::vector<std::string> names = {
        "VMT_US", "P", "VSL", "MHI", "A_soy", "A_corn", "A_wheat", "Y_soy",
        "Y_corn", "Y_wheat", "price_soy", "price_corn", "price_wheat", "L"};
    return names;
}

}  // namespace aamcba
