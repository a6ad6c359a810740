#include "aamcba/ingest/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aamcba/errors.hpp"

namespace aamcba::ingest {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

bool parse_double(const std::string& cell, double& out) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_int(const std::string& cell, int& out) {
    const char* end = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(cell.data(), end, out);
    return ec == std::errc() && ptr == end;
}

std::vector<int> consecutive_years(int first, std::size_t count) {
    std::vector<int> years(count);
    for (std::size_t i = 0; i < count; ++i) years[i] = first + static_cast<int>(i);
    return years;
}

std::vector<double> number_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw ValidationError(where + ": non-numeric entry");
        out.push_back(v.get<double>());
    }
    return out;
}

/// Shared by exogenous and historical entries: inline values or a CSV file.
TimeSeries read_series_entry(const std::string& name, const json& entry, const fs::path& base_dir,
                             const std::string& where) {
    if (!entry.is_object()) throw ValidationError(where + ": expected an object");
    const std::string unit = entry.value("unit", std::string{});
    if (entry.contains("file")) {
        fs::path p = entry.at("file").get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        TimeSeries ts = load_series(p, name);
        if (!unit.empty()) ts.unit = unit;
        return ts;
    }
    if (!entry.contains("values")) throw ValidationError(where + ": needs 'file' or 'values'");
    std::vector<double> values = number_array(entry.at("values"), where + ".values");
    std::vector<int> years;
    if (entry.contains("years")) {
        for (const auto& y : entry.at("years")) years.push_back(y.get<int>());
    } else if (entry.contains("first_year")) {
        years = consecutive_years(entry.at("first_year").get<int>(), values.size());
    } else {
        throw ValidationError(where + ": needs 'first_year' or 'years'");
    }
    return TimeSeries::make(name, std::move(years), std::move(values), unit);
}

ExogenousSeries read_exogenous(const std::string& name, const json& entry,
                               const Scenario& partial, const fs::path& base_dir) {
    const std::string where = "series.exogenous." + name;
    ExogenousSeries out;
    out.name = name;
    if (entry.is_object() && entry.contains("tonnage")) {
        const json& t = entry.at("tonnage");
        const std::string payload_key = t.value("payload_constant", std::string("p_e"));
        const double payload = partial.constant(payload_key);
        const auto shares = number_array(t.at("shares"), where + ".tonnage.shares");
        const int first = t.at("first_year").get<int>();
        std::map<int, double> share_map;
        for (std::size_t i = 0; i < shares.size(); ++i)
            share_map[first + static_cast<int>(i)] = shares[i];
        const auto trips =
            cargo_trips_from_tonnage(t.at("total_tons").get<double>(), payload, share_map);
        for (const auto& [year, v] : trips) {
            out.years.push_back(year);
            out.values.push_back(v);
        }
        out.unit = entry.value("unit", std::string("trips"));
        check_series_invariants(TimeSeries{name, out.years, out.values, out.unit});
        return out;
    }
    TimeSeries ts = read_series_entry(name, entry, base_dir, where);
    out.years = std::move(ts.years);
    out.values = std::move(ts.values);
    out.unit = std::move(ts.unit);
    if (entry.contains("lower")) out.lower = number_array(entry.at("lower"), where + ".lower");
    if (entry.contains("upper")) out.upper = number_array(entry.at("upper"), where + ".upper");
    return out;
}

forecast::ArimaOrder read_order(const std::string& name, const json& j) {
    forecast::ArimaOrder o;
    if (j.is_array() && j.size() == 3) {
        o = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
    } else if (j.is_object()) {
        o = {j.at("p").get<int>(), j.at("d").get<int>(), j.at("q").get<int>()};
    } else {
        throw ValidationError("orders." + name + ": expected [p,d,q]");
    }
    try {
        o.validate();
    } catch (const std::invalid_argument& e) {
        throw ValidationError("orders." + name + ": " + e.what());
    }
    return o;
}

Toggles read_toggles(const json& j) {
    Toggles t;
    for (const auto& [key, v] : j.items()) {
        if (key == "factors") {
            t.factors.clear();
            for (const auto& id : v) {
                auto f = parse_factor(id.get<std::string>());
                if (!f) throw ValidationError("toggles.factors: unknown factor '" +
                                              id.get<std::string>() + "'");
                t.factors.insert(*f);
            }
        } else if (key == "bf2_use_trip_miles") {
            t.bf2_use_trip_miles = v.get<bool>();
        } else if (key == "amortize_capex_years") {
            t.amortize_capex_years = v.get<int>();
        } else if (key == "bf3_single_ratio") {
            t.bf3_single_ratio = v.get<bool>();
        } else if (key == "bf4_ci_sign") {
            const auto s = v.get<std::string>();
            if (s == "as_printed") t.bf4_ci_sign = CiSign::AsPrinted;
            else if (s == "positive_extra_cost") t.bf4_ci_sign = CiSign::PositiveExtraCost;
            else throw ValidationError("toggles.bf4_ci_sign: unknown value '" + s + "'");
        } else if (key == "bf6_matching_area") {
            t.bf6_matching_area = v.get<bool>();
        } else if (key == "bf6_incremental") {
            t.bf6_incremental = v.get<bool>();
        } else if (key == "bf7_case") {
            t.bf7_case = v.get<int>();
        } else if (key == "forecast_drift") {
            t.forecast_drift = v.get<bool>();
        } else {
            throw ValidationError("toggles: unknown key '" + key + "'");
        }
    }
    return t;
}

json series_json(const std::vector<int>& years, const std::vector<double>& values,
                 const std::string& unit) {
    json j;
    j["first_year"] = years.front();
    j["values"] = values;
    if (!unit.empty()) j["unit"] = unit;
    return j;
}

}  // namespace

TimeSeries parse_series_csv(std::istream& in, const std::string& name) {
    std::vector<int> years;
    std::vector<double> values;
    std::string unit;
    std::string line;
    std::size_t line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '#') {
            const auto body = trim(std::string_view(t).substr(1));
            if (body.rfind("unit:", 0) == 0) unit = trim(std::string_view(body).substr(5));
            continue;
        }
        const auto comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
            throw ValidationError("series '" + name + "' line " + std::to_string(line_no) +
                                  ": expected two columns year,value");
        const std::string ycell = trim(std::string_view(t).substr(0, comma));
        const std::string vcell = trim(std::string_view(t).substr(comma + 1));
        int year = 0;
        double value = 0.0;
        const bool year_ok = parse_int(ycell, year);
        const bool value_ok = parse_double(vcell, value);
        if (!saw_data && !year_ok && !value_ok) {
            // Header row, e.g. "year,value" or "year,value [USD]".
            if (auto open = vcell.find('['); open != std::string::npos) {
                auto close = vcell.find(']', open);
                if (close != std::string::npos) unit = vcell.substr(open + 1, close - open - 1);
            }
            saw_data = true;
            continue;
        }
        if (!year_ok || !value_ok)
            throw ValidationError("series '" + name + "' line " + std::to_string(line_no) +
                                  ": non-numeric cell");
        saw_data = true;
        years.push_back(year);
        values.push_back(value);
    }
    return TimeSeries::make(name, std::move(years), std::move(values), std::move(unit));
}

TimeSeries load_series(const fs::path& path, const std::string& name) {
    std::ifstream in(path);
    if (!in) throw ValidationError("series '" + name + "': cannot open file " + path.string());
    return parse_series_csv(in, name);
}

std::map<int, double> cargo_trips_from_tonnage(double total_tons, double payload_lb,
                                               const std::map<int, double>& shares) {
    if (!(payload_lb > 0.0)) throw ValidationError("cargo payload must be positive");
    if (total_tons < 0.0) throw ValidationError("cargo tonnage must be non-negative");
    const double total_trips = total_tons * 2000.0 / payload_lb;
    std::map<int, double> trips;
    for (const auto& [year, share] : shares) {
        if (share < 0.0 || !std::isfinite(share))
            throw ValidationError("cargo share for " + std::to_string(year) + " is invalid");
        trips[year] = total_trips * share;
    }
    return trips;
}

Scenario parse_scenario(const json& doc, const fs::path& base_dir) {
    if (!doc.is_object()) throw ValidationError("scenario: top level must be an object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "horizon" && key != "constants" && key != "series" && key != "orders" &&
            key != "toggles" && key != "notes")
            throw ValidationError("scenario: unknown section '" + key + "'");
    }
    Scenario s;
    try {
        if (doc.contains("horizon")) {
            const json& h = doc.at("horizon");
            if (h.is_array()) {
                for (const auto& y : h) s.horizon.push_back(y.get<int>());
            } else {
                const int first = h.at("first").get<int>();
                const int last = h.at("last").get<int>();
                if (last < first) throw ValidationError("horizon: last precedes first");
                s.horizon = consecutive_years(first, static_cast<std::size_t>(last - first + 1));
            }
        } else {
            s.horizon = consecutive_years(2022, 11);
        }

        if (doc.contains("constants")) {
            for (const auto& [key, v] : doc.at("constants").items()) {
                if (v.is_number()) {
                    s.constants[key] = v.get<double>();
                } else if (v.is_array()) {
                    s.vectors[key] = number_array(v, "constants." + key);
                } else {
                    throw ValidationError("constants." + key + ": expected a number or array");
                }
            }
        }

        if (doc.contains("series")) {
            const json& series = doc.at("series");
            if (series.contains("historical")) {
                for (const auto& [name, entry] : series.at("historical").items())
                    s.historical[name] =
                        read_series_entry(name, entry, base_dir, "series.historical." + name);
            }
            if (series.contains("exogenous")) {
                for (const auto& [name, entry] : series.at("exogenous").items())
                    s.exogenous[name] = read_exogenous(name, entry, s, base_dir);
            }
        }

        if (doc.contains("orders")) {
            for (const auto& [name, v] : doc.at("orders").items())
                s.orders[name] = read_order(name, v);
        }
        if (doc.contains("toggles")) s.toggles = read_toggles(doc.at("toggles"));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("scenario: malformed document: ") + e.what());
    }
    check_scenario(s);
    return s;
}

Scenario load_scenario(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("scenario " + path.string() + ": " + e.what());
    }
    return parse_scenario(doc, path.parent_path());
}

void check_scenario(const Scenario& s) {
    if (s.horizon.empty()) throw ValidationError("horizon is empty");
    for (std::size_t i = 1; i < s.horizon.size(); ++i) {
        if (s.horizon[i] != s.horizon[i - 1] + 1)
            throw ValidationError("horizon not contiguous at " + std::to_string(s.horizon[i]));
    }
    if (s.toggles.factors.empty()) throw ValidationError("no benefit factors enabled");
    if (s.toggles.amortize_capex_years < 0)
        throw ValidationError("toggles.amortize_capex_years must be non-negative");

    for (const auto& [key, v] : s.constants) {
        if (!std::isfinite(v)) throw ValidationError("constant '" + key + "' is not finite");
    }
    for (const auto& [key, vec] : s.vectors) {
        for (double v : vec) {
            if (!std::isfinite(v))
                throw ValidationError("vector constant '" + key + "' has a non-finite entry");
        }
    }

    auto require_exogenous = [&](const std::string& key, const std::string& who) {
        auto it = s.exogenous.find(key);
        if (it == s.exogenous.end())
            throw ValidationError("missing required series '" + key + "' (needed by " + who + ")");
        for (int year : s.horizon) {
            if (!it->second.covers(year))
                throw ValidationError("series '" + key + "' does not cover horizon year " +
                                      std::to_string(year));
        }
    };

    for (Factor f : s.toggles.factors) {
        const auto req = requirements_for(f);
        const std::string who = factor_id(f);
        for (const auto& c : req.constants) {
            if (!s.constants.contains(c))
                throw ValidationError("missing required constant '" + c + "' (needed by " + who +
                                      ")");
        }
        for (const auto& v : req.vectors) {
            if (!s.vectors.contains(v))
                throw ValidationError("missing required vector constant '" + v +
                                      "' (needed by " + who + ")");
        }
        for (const auto& e : req.exogenous) require_exogenous(e, who);
        for (const auto& h : req.historical) {
            if (!s.historical.contains(h))
                throw ValidationError("missing required historical series '" + h +
                                      "' (needed by " + who + ")");
        }
    }
    if (s.toggles.enabled(Factor::BF6) && !s.constants.contains("F_ag") &&
        !(s.constants.contains("farms_large") && s.constants.contains("farms_total")))
        throw ValidationError("missing required constant 'F_ag' (or farms_large/farms_total)");
    require_exogenous("capex", "ledger");
    require_exogenous("opex", "ledger");

    for (const auto& [name, e] : s.exogenous) {
        for (const auto* band : {&e.lower, &e.upper}) {
            if (*band && (*band)->size() != e.values.size())
                throw ValidationError("series '" + name + "': band length mismatch");
        }
        for (std::size_t i = 0; i < e.values.size(); ++i) {
            const double lo = e.lower ? (*e.lower)[i] : e.values[i];
            const double hi = e.upper ? (*e.upper)[i] : e.values[i];
            if (!(lo <= e.values[i] && e.values[i] <= hi))
                throw ValidationError("series '" + name + "': band not ordered in year " +
                                      std::to_string(e.years[i]));
        }
    }

    const bool has_medical = s.vectors.contains("DSN") || s.vectors.contains("p_s") ||
                             s.vectors.contains("CAS");
    if (has_medical || s.toggles.enabled(Factor::BF7)) {
        const auto& dsn = s.vector("DSN");
        const auto& ps = s.vector("p_s");
        const auto& cas = s.vector("CAS");
        if (dsn.size() != ps.size() || dsn.size() != cas.size())
            throw ValidationError("vector-length mismatch between DSN, p_s and CAS");
        if (dsn.size() < 2) throw ValidationError("DSN needs at least two cases");
        if (dsn.front() != 0.0) throw ValidationError("DSN[0] must be 0 (no-drone case)");
        const int cases = static_cast<int>(dsn.size()) - 1;
        if (s.toggles.bf7_case < 0 || s.toggles.bf7_case > cases)
            throw ValidationError("toggles.bf7_case out of range 1.." + std::to_string(cases));
    }
}

std::vector<std::string> validate_scenario(const Scenario& s) {
    std::vector<std::string> warnings;
    const auto& ref = reference_constants();
    for (const auto& [key, v] : s.constants) {
        auto it = ref.find(key);
        if (it == ref.end() || it->second == 0.0) continue;
        const double ratio = v / it->second;
        if (!(ratio >= 0.1 && ratio <= 10.0)) {
            std::ostringstream msg;
            msg << "constant '" << key << "' = " << v << " is far from the reference magnitude "
                << it->second;
            warnings.push_back(msg.str());
        }
    }
    auto c = [&](const char* key) { return s.constant_or(key, 0.0); };
    if (s.constants.contains("A_a") && s.constants.contains("A_g") && c("A_a") > c("A_g"))
        warnings.emplace_back("air fatality rate exceeds ground rate");
    if (s.constants.contains("RLCT") && s.constants.contains("TLCT") && c("RLCT") > c("TLCT"))
        warnings.emplace_back("reduced lane closing time exceeds traditional closing time");
    if (s.constants.contains("drone_core") && s.constants.contains("snooper_core") &&
        c("drone_core") > c("snooper_core"))
        warnings.emplace_back("drone inspection rate exceeds snooper rate");
    for (const char* key : {"capex", "opex"}) {
        auto it = s.exogenous.find(key);
        if (it == s.exogenous.end()) continue;
        for (std::size_t i = 0; i < it->second.values.size(); ++i) {
            if (it->second.values[i] < 0.0)
                warnings.push_back(std::string("negative ") + key + " entry in year " +
                                   std::to_string(it->second.years[i]));
        }
    }
    if (s.vectors.contains("p_s")) {
        const auto& ps = s.vectors.at("p_s");
        if (!std::is_sorted(ps.begin(), ps.end()) ||
            std::adjacent_find(ps.begin(), ps.end()) != ps.end())
            warnings.emplace_back("survival rates p_s are not strictly increasing");
    }
    return warnings;
}

json to_json(const Scenario& s) {
    json doc;
    doc["horizon"] = s.horizon;
    json constants = json::object();
    for (const auto& [k, v] : s.constants) constants[k] = v;
    for (const auto& [k, v] : s.vectors) constants[k] = v;
    doc["constants"] = constants;

    json exo = json::object();
    for (const auto& [name, e] : s.exogenous) {
        json j = series_json(e.years, e.values, e.unit);
        if (e.lower) j["lower"] = *e.lower;
        if (e.upper) j["upper"] = *e.upper;
        exo[name] = j;
    }
    json hist = json::object();
    for (const auto& [name, ts] : s.historical) hist[name] = series_json(ts.years, ts.values, ts.unit);
    doc["series"] = {{"exogenous", exo}, {"historical", hist}};

    json orders = json::object();
    for (const auto& [name, o] : s.orders) orders[name] = {o.p, o.d, o.q};
    doc["orders"] = orders;

    const Toggles& t = s.toggles;
    json factors = json::array();
    for (Factor f : t.factors) factors.push_back(factor_id(f));
    doc["toggles"] = {
        {"factors", factors},
        {"bf2_use_trip_miles", t.bf2_use_trip_miles},
        {"amortize_capex_years", t.amortize_capex_years},
        {"bf3_single_ratio", t.bf3_single_ratio},
        {"bf4_ci_sign", t.bf4_ci_sign == CiSign::AsPrinted ? "as_printed" : "positive_extra_cost"},
        {"bf6_matching_area", t.bf6_matching_area},
        {"bf6_incremental", t.bf6_incremental},
        {"bf7_case", t.bf7_case},
        {"forecast_drift", t.forecast_drift},
    };
    return doc;
}

}  // namespace aamcba::ingest
