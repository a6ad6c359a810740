#include "aamcba/ledger/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "aamcba/errors.hpp"

namespace aamcba::ledger {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void band_row(std::ostringstream& os, int year, const std::string& series, const BandValue& b) {
    os << year << ',' << series << ',' << format_value(b.lower) << ',' << format_value(b.mean)
       << ',' << format_value(b.upper) << '\n';
}

constexpr const char* kLongHeader = "year,series,lower,mean,upper\n";

json band_json(const BandValue& b) { return {{"lower", b.lower}, {"mean", b.mean}, {"upper", b.upper}}; }

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << content;
    if (!out) throw ValidationError("write failed for " + path.string());
}

std::string stations_label(double stations) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "DSN=%.0f", stations);
    return buf;
}

}  // namespace

std::string format_value(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::string factor_csv(const RunResult& r, Factor f) {
    std::ostringstream os;
    os << "year,lower,mean,upper\n";
    const std::vector<BandValue>* v = nullptr;
    if (f == Factor::BF8) {
        if (r.tax) v = &*r.tax;
    } else if (auto it = r.benefits.find(f); it != r.benefits.end()) {
        v = &it->second;
    }
    if (!v) throw std::invalid_argument(factor_id(f) + " was not evaluated");
    for (std::size_t i = 0; i < r.horizon.size(); ++i)
        os << r.horizon[i] << ',' << format_value((*v)[i].lower) << ',' << format_value((*v)[i].mean)
           << ',' << format_value((*v)[i].upper) << '\n';
    return os.str();
}

std::string npi_csv(const RunResult& r) {
    std::ostringstream os;
    os << "year,benefits_mean,tax_mean,capex,opex,lower,mean,upper\n";
    for (const auto& a : r.annual) {
        os << a.year << ',' << format_value(a.total_benefits().mean) << ',' << format_value(a.tax.mean)
           << ',' << format_value(a.capex) << ',' << format_value(a.opex) << ','
           << format_value(a.npi.lower) << ',' << format_value(a.npi.mean) << ','
           << format_value(a.npi.upper) << '\n';
    }
    return os.str();
}

std::string results_csv(const RunResult& r) {
    std::ostringstream os;
    os << "year,factor,lower,mean,upper\n";
    for (std::size_t i = 0; i < r.annual.size(); ++i) {
        const auto& a = r.annual[i];
        for (Factor f : kAllFactors) {
            if (f == Factor::BF8) {
                if (r.tax) band_row(os, a.year, factor_id(f), a.tax);
            } else if (auto it = a.benefits.find(f); it != a.benefits.end()) {
                band_row(os, a.year, factor_id(f), it->second);
            }
        }
        band_row(os, a.year, "NPI", a.npi);
    }
    return os.str();
}

json summary_json(const RunResult& r, const Scenario& s, std::uint64_t seed) {
    json doc;
    doc["horizon"] = {{"first", r.horizon.front()}, {"last", r.horizon.back()}};
    doc["seed"] = seed;

    json factors = json::object();
    for (const auto& [f, v] : r.benefits) {
        BandValue total;
        for (const auto& b : v) total += b;
        factors[factor_id(f)] = band_json(total);
    }
    if (r.tax) {
        BandValue total;
        for (const auto& b : *r.tax) total += b;
        factors[factor_id(Factor::BF8)] = band_json(total);
    }
    doc["factor_totals"] = factors;

    json npi = json::array();
    for (const auto& a : r.annual) {
        json row = band_json(a.npi);
        row["year"] = a.year;
        npi.push_back(row);
    }
    doc["npi"] = npi;
    const auto& first = r.annual.front().npi.mean;
    const auto& last = r.annual.back().npi.mean;
    const int span = static_cast<int>(r.annual.size()) - 1;
    if (span >= 1 && first > 0.0 && last > 0.0)
        doc["npi_cagr"] = std::pow(last / first, 1.0 / span) - 1.0;
    else
        doc["npi_cagr"] = nullptr;

    json forecasts = json::object();
    for (const auto& [name, vf] : r.forecasts.variables) {
        json v;
        v["order"] = vf.result.model.order.str();
        v["pinned"] = vf.pinned;
        v["fallback"] = vf.fallback;
        v["adequate"] = vf.result.adequate;
        json diag = json::array();
        for (const auto& d : vf.result.diagnostics)
            diag.push_back({{"test", d.test}, {"statistic", d.statistic}, {"p_value", d.p_value}});
        v["diagnostics"] = diag;
        forecasts[name] = v;
    }
    doc["forecasts"] = forecasts;

    json toggles;
    const Toggles& t = s.toggles;
    json ids = json::array();
    for (Factor f : t.factors) ids.push_back(factor_id(f));
    toggles["factors"] = ids;
    toggles["bf2_use_trip_miles"] = t.bf2_use_trip_miles;
    toggles["amortize_capex_years"] = t.amortize_capex_years;
    toggles["bf3_single_ratio"] = t.bf3_single_ratio;
    toggles["bf4_ci_sign"] = t.bf4_ci_sign == CiSign::AsPrinted ? "as_printed" : "positive_extra_cost";
    toggles["bf6_matching_area"] = t.bf6_matching_area;
    toggles["bf6_incremental"] = t.bf6_incremental;
    toggles["bf7_case"] = r.bf7_case;
    toggles["forecast_drift"] = t.forecast_drift;
    doc["toggles"] = toggles;
    if (t.enabled(Factor::BF6) && !t.bf6_incremental)
        doc["notes"] = json::array({"BF6 crop production is valued on total boosted production, "
                                    "not on the yield increment (toggle bf6_incremental)"});
    doc["warnings"] = r.warnings;
    return doc;
}

std::map<std::string, std::string> plot_files(const RunResult& r, const Scenario& s) {
    std::map<std::string, std::string> files;
    auto factor_figure = [&](const std::string& file, std::initializer_list<Factor> which) {
        std::ostringstream os;
        bool any = false;
        os << kLongHeader;
        for (std::size_t i = 0; i < r.horizon.size(); ++i) {
            for (Factor f : which) {
                if (f == Factor::BF8) {
                    if (!r.tax) continue;
                    band_row(os, r.horizon[i], factor_id(f), (*r.tax)[i]);
                    any = true;
                } else if (auto it = r.benefits.find(f); it != r.benefits.end()) {
                    band_row(os, r.horizon[i], factor_id(f), it->second[i]);
                    any = true;
                }
            }
        }
        if (any) files[file] = os.str();
    };

    {
        std::ostringstream os;
        os << kLongHeader;
        for (const auto& a : r.annual) {
            band_row(os, a.year, "capex", BandValue::point(a.capex));
            band_row(os, a.year, "opex", BandValue::point(a.opex));
        }
        files["plots/fig3_capex_opex.csv"] = os.str();
    }
    factor_figure("plots/fig4_bf1_bf2_bf5.csv", {Factor::BF1, Factor::BF2, Factor::BF5});
    factor_figure("plots/fig5_bf3_bf4.csv", {Factor::BF3, Factor::BF4});
    if (!r.agriculture.empty()) {
        static const char* kParts[] = {"crop_production", "crop_cost_savings", "livestock_savings"};
        std::ostringstream os;
        os << kLongHeader;
        for (std::size_t i = 0; i < r.horizon.size(); ++i) {
            for (std::size_t k = 0; k < 3; ++k) band_row(os, r.horizon[i], kParts[k], r.agriculture[i][k]);
            band_row(os, r.horizon[i], "BF6", r.benefits.at(Factor::BF6)[i]);
        }
        files["plots/fig6_bf6.csv"] = os.str();
    }
    if (!r.medical.empty()) {
        const auto stations = medical_constants(s).stations;
        std::ostringstream os;
        os << kLongHeader;
        for (std::size_t i = 0; i < r.horizon.size(); ++i)
            for (std::size_t k = 0; k < r.medical[i].size(); ++k)
                band_row(os, r.horizon[i], stations_label(stations[k + 1]), r.medical[i][k]);
        files["plots/fig7_bf7_cases.csv"] = os.str();
    }
    factor_figure("plots/fig8_bf8_bf9.csv", {Factor::BF8, Factor::BF9});
    {
        std::ostringstream os;
        os << kLongHeader;
        for (const auto& a : r.annual) band_row(os, a.year, "NPI", a.npi);
        files["plots/fig9_npi.csv"] = os.str();
    }
    {
        std::ostringstream os;
        os << kLongHeader;
        for (const auto& [name, ts] : r.forecasts.history) {
            for (std::size_t i = 0; i < ts.size(); ++i)
                band_row(os, ts.years[i], name, BandValue::point(ts.values[i]));
            const auto& band = r.forecasts.variables.at(name).result.band;
            for (std::size_t i = 0; i < band.size(); ++i)
                band_row(os, band.years[i], name, {band.lower[i], band.mean[i], band.upper[i]});
        }
        files["plots/forecasts.csv"] = os.str();
    }
    return files;
}

std::vector<fs::path> write_reports(const RunResult& r, const Scenario& s, const fs::path& out_dir,
                                    std::uint64_t seed, const EmitSet& emit) {
    std::vector<fs::path> written;
    auto put = [&](const fs::path& rel, const std::string& content) {
        write_file(out_dir / rel, content);
        written.push_back(out_dir / rel);
    };
    if (emit.csv) {
        for (Factor f : kAllFactors) {
            const bool present = f == Factor::BF8 ? r.tax.has_value() : r.benefits.contains(f);
            const fs::path rel = fs::path("factors") / (factor_id(f) + ".csv");
            if (present) put(rel, factor_csv(r, f));
            else fs::remove(out_dir / rel);
        }
        put("npi.csv", npi_csv(r));
        put("results.csv", results_csv(r));
    }
    if (emit.json) put("summary.json", summary_json(r, s, seed).dump(2) + "\n");
    if (emit.plotdata) {
        const auto files = plot_files(r, s);
        if (fs::is_directory(out_dir / "plots")) {
            for (const auto& entry : fs::directory_iterator(out_dir / "plots")) {
                const std::string rel = "plots/" + entry.path().filename().string();
                if (!files.contains(rel)) fs::remove(entry.path());
            }
        }
        for (const auto& [rel, content] : files) put(rel, content);
    }
    return written;
}

}  // namespace aamcba::ledger
