#include <iostream>

#include <CLI11.hpp>

#include "aamcba/cli/cli.hpp"
#include "aamcba/errors.hpp"

namespace {

void add_common(CLI::App* cmd, aamcba::cli::RunManifest& m, std::string& factors,
                std::vector<std::string>& emit) {
    cmd->add_option("--scenario", m.scenario, "Scenario file or name on the search path")
        ->capture_default_str();
    cmd->add_option("--factors", factors, "Comma-separated factor ids, e.g. BF1,BF3");
    cmd->add_option("--pin-orders", m.pin_orders,
                    "NAME=p,d,q to pin an ARIMA order; 'auto' ignores the scenario's orders");
    cmd->add_option("--seed", m.seed, "Seed recorded with the run")->capture_default_str();
    cmd->add_flag("--best-effort", m.best_effort, "Fall back to a random walk when a fit fails");
    cmd->add_option("--toggle", m.toggles, "Override a toggle, key=value");
    cmd->add_option("--emit", emit, "Artifacts to write: csv, json, plotdata")
        ->check(CLI::IsMember({"csv", "json", "plotdata"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cost-benefit analysis of advanced air mobility in the six major cities of Ohio"};
    app.require_subcommand(1);

    aamcba::cli::RunManifest m;
    std::string factors;
    std::vector<std::string> emit;

    auto* run = app.add_subcommand("run", "Forecast, evaluate all factors and write reports");
    add_common(run, m, factors, emit);
    run->add_option("--out", m.output_dir, "Output directory")->capture_default_str();

    std::string factor;
    int year = 0;
    auto* explain = app.add_subcommand("explain", "Print the derivation of one factor-year");
    explain->add_option("factor", factor, "Factor id, e.g. BF5")->required();
    explain->add_option("year", year, "Horizon year")->required();
    add_common(explain, m, factors, emit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : aamcba::cli::kExitValidation;
    }

    try {
        if (!factors.empty()) m.factors = aamcba::cli::parse_factor_list(factors);
    } catch (const aamcba::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return aamcba::cli::kExitValidation;
    }
    if (!emit.empty()) {
        m.emit = {false, false, false};
        for (const auto& e : emit) {
            if (e == "csv") m.emit.csv = true;
            if (e == "json") m.emit.json = true;
            if (e == "plotdata") m.emit.plotdata = true;
        }
    }

    if (*run) return aamcba::cli::run(m, std::cout, std::cerr);
    return aamcba::cli::explain(factor, year, m, std::cout, std::cerr);
}
