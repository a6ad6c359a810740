#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "aamcba/cli/cli.hpp"
#include "aamcba/errors.hpp"
#include "aamcba/ingest/ingest.hpp"

namespace aamcba::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    return parts;
}

}  // namespace

fs::path resolve_scenario(const std::string& name) {
    if (fs::exists(name)) return name;
    std::vector<fs::path> dirs;
    if (const char* env = std::getenv("AAMCBA_SCENARIO_DIR"))
        for (const auto& d : split(env, ':'))
            if (!d.empty()) dirs.emplace_back(d);
    dirs.emplace_back(AAMCBA_BUNDLED_SCENARIO_DIR);
    for (const auto& d : dirs) {
        for (const fs::path& candidate : {d / name, d / (name + ".json")})
            if (fs::is_regular_file(candidate)) return candidate;
    }
    throw ValidationError("scenario '" + name + "' not found");
}

std::set<Factor> parse_factor_list(const std::string& csv) {
    std::set<Factor> out;
    for (const auto& id : split(csv, ',')) {
        if (id.empty()) continue;
        auto f = parse_factor(id);
        if (!f) throw ValidationError("unknown factor '" + id + "'");
        out.insert(*f);
    }
    if (out.empty()) throw ValidationError("no benefit factors enabled");
    return out;
}

void apply_toggle(json& toggles, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ValidationError("toggle '" + assignment + "' is not of the form key=value");
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    if (key == "factors") {
        json ids = json::array();
        for (Factor f : parse_factor_list(value)) ids.push_back(factor_id(f));
        toggles[key] = ids;
    } else if (value == "true" || value == "false") {
        toggles[key] = value == "true";
    } else {
        char* end = nullptr;
        const long n = std::strtol(value.c_str(), &end, 10);
        if (!value.empty() && *end == '\0') toggles[key] = n;
        else toggles[key] = value;
    }
}

ledger::EngineOptions engine_options(const RunManifest& m) {
    ledger::EngineOptions o;
    o.best_effort = m.best_effort;
    for (const auto& pin : m.pin_orders) {
        if (pin == "auto") {
            o.use_scenario_orders = false;
            continue;
        }
        const auto eq = pin.find('=');
        if (eq == std::string::npos)
            throw ValidationError("pin '" + pin + "' is not of the form NAME=p,d,q");
        const auto parts = split(pin.substr(eq + 1), ',');
        if (parts.size() != 3) throw ValidationError("pin '" + pin + "' needs three orders p,d,q");
        forecast::ArimaOrder order;
        try {
            order = {std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])};
            order.validate();
        } catch (const std::exception& e) {
            throw ValidationError("pin '" + pin + "': " + e.what());
        }
        o.pins[trim(pin.substr(0, eq))] = order;
    }
    return o;
}

Scenario load_for_manifest(const RunManifest& m) {
    const fs::path path = resolve_scenario(m.scenario);
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("scenario " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw ValidationError("scenario " + path.string() + ": expected an object");
    json& toggles = doc["toggles"];
    if (toggles.is_null()) toggles = json::object();
    if (m.factors) {
        json ids = json::array();
        for (Factor f : *m.factors) ids.push_back(factor_id(f));
        toggles["factors"] = ids;
    }
    for (const auto& t : m.toggles) apply_toggle(toggles, t);
    return ingest::parse_scenario(doc, path.parent_path());
}

int run(const RunManifest& m, std::ostream& out, std::ostream& err) {
    try {
        const Scenario s = load_for_manifest(m);
        const ledger::RunResult r = ledger::run_engine(s, engine_options(m));
        for (const auto& w : r.warnings) err << "warning: " << w << '\n';
        const auto written = ledger::write_reports(r, s, m.output_dir, m.seed, m.emit);
        out << "wrote " << written.size() << " files to " << m.output_dir.string() << '\n';
        return kExitOk;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const fs::filesystem_error& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace aamcba::cli
