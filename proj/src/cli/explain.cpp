#include <cstdio>
#include <ostream>
#include <sstream>

#include "aamcba/cli/cli.hpp"
#include "aamcba/errors.hpp"

namespace aamcba::cli {

namespace {

class Trace {
public:
    void line(const std::string& name, double value, const std::string& formula) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.10g", value);
        os_ << "  " << name << " = " << buf;
        if (!formula.empty()) os_ << "    [" << formula << "]";
        os_ << '\n';
    }
    void text(const std::string& s) { os_ << s << '\n'; }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
};

void explain_vtts(Trace& t, const ledger::FactorContext& ctx, const ledger::ChannelInputs& in) {
    t.line("MHI", in.get("MHI"), "forecast");
    t.line("MHI_2015", ctx.mobility.mhi_2015, "");
    t.line("VTTS'", bf::vtts_scaled(in.get("MHI"), ctx.mobility.mhi_2015, ctx.mobility.vtts_2015),
           "MHI / MHI_2015 * VTTS_2015");
}

void explain_market(Trace& t, const ledger::FactorContext& ctx, const ledger::ChannelInputs& in,
                    double& packages) {
    const auto mv = bf::market_value(in.year, ctx.market);
    t.line("r'", mv.ratio, "U_2019 / V_2019");
    t.line("V", mv.global, "V_2019 * (1 + CAGR)^(year - 2019)");
    t.line("U", mv.us, "r' * V");
    t.line("N", mv.growth, ctx.market.single_ratio ? "U / U_2022" : "U * r' / U_2022");
    t.line("P", in.get("P"), "forecast");
    t.line("P_US", in.get("P_US"), "input");
    packages = bf::smco_package_trips(in.year, in.get("P"), in.get("P_US"), ctx.market);
    t.line("p_SMCO", packages, "N * parcels_2022 * parcel_fraction * P / P_US");
}

}  // namespace

std::string explain_text(Factor f, int year, const Scenario& s, const ledger::RunResult& r) {
    if (!s.toggles.enabled(f)) throw ValidationError(factor_id(f) + " is not enabled in this scenario");
    std::size_t idx = r.horizon.size();
    for (std::size_t i = 0; i < r.horizon.size(); ++i)
        if (r.horizon[i] == year) idx = i;
    if (idx == r.horizon.size())
        throw ValidationError("year " + std::to_string(year) + " is outside the horizon");

    const auto ctx = ledger::FactorContext::from(s);
    const auto in = ledger::channel_inputs(s, r.forecasts, year, Channel::Mean);
    Trace t;
    t.text(factor_id(f) + " " + std::to_string(year) + " (mean channel)");

    switch (f) {
        case Factor::BF1: {
            explain_vtts(t, ctx, in);
            const double vtts = bf::vtts_scaled(in.get("MHI"), ctx.mobility.mhi_2015, ctx.mobility.vtts_2015);
            const auto pt = bf::passenger_time_value(in.get("D"), ctx.mobility.trip_saving_min, vtts);
            t.line("D", in.get("D"), "input");
            t.line("S_p", pt.hours_saved, "D * s / 60");
            t.line("value", pt.value, "S_p * VTTS'");
            break;
        }
        case Factor::BF2: {
            const double vmt = bf::vmt_smco(in.get("VMT_US"), in.get("P_US"), in.get("P"));
            t.line("VMT_US", in.get("VMT_US"), "forecast");
            t.line("VMT'", vmt, "VMT_US / P_US * P");
            const auto sr = bf::safety_cost_reduction(vmt, in.get("D"), ctx.mobility, in.get("VSL"));
            t.line("F", sr.fatalities, "VMT' / 1e8 * (A_g - A_a)");
            t.line("D^T", sr.passenger_trips, "D / seats_per_evtol");
            t.line("mileage ratio", sr.mileage_ratio,
                   ctx.mobility.use_trip_miles ? "D^T * d1 / VMT'" : "D * d1 / VMT'");
            t.line("R", sr.reduction, "ratio * F");
            t.line("VSL", in.get("VSL"), "forecast");
            t.line("value", sr.value, "R * VSL");
            break;
        }
        case Factor::BF3: {
            double p = 0.0;
            explain_market(t, ctx, in, p);
            const auto fl = bf::fleet_size(p, ctx.market);
            t.line("Tr'", fl.trips_per_drone, "(60 / R_t) * 24 * operational_days");
            t.line("Y", fl.primary, "p_SMCO / Tr'");
            t.line("Z", fl.reserve, "reserve_fraction * Y");
            t.line("X", fl.total, "2Y + Z");
            const double csl = p > 0.0 ? bf::logistics_cost_savings(p, fl.total, ctx.market) : 0.0;
            t.line("CS^l", csl, "[m q / n - (C_c + C_o) X / p_SMCO] * p_SMCO");
            const double csld = bf::package_lead_time_value(p, ctx.market);
            t.line("CS^ld", csld, "p_SMCO * ATS / 1440 * VDTS");
            t.line("value", csl + csld, "CS^l + CS^ld");
            break;
        }
        case Factor::BF4: {
            const auto cs = bf::cargo_inventory_savings(in.get("T"), ctx.cargo);
            t.line("T", in.get("T"), "input");
            t.line("S_t", cs.months_saved, "T * s / 43200");
            t.line("W", cs.warehouse, "(r + o) z + (z / a) (w1 / 12)");
            t.line("CS^c", cs.storage, "S_t * W");
            t.line("bracket", cs.bracket, "c^t / p^t - c^e / p^e");
            t.line("CI", cs.extra_cost, ctx.cargo.ci_sign == bf::ExtraCostSign::AsPrinted
                                            ? "bracket * p^e * d1 * T"
                                            : "|bracket| * p^e * d1 * T");
            t.line("CD", cs.net, "CS^c - CI");
            t.line("CS^T", cs.value, "f^e * CD");
            const double av = bf::cargo_lead_time_value(cs.months_saved, ctx.cargo.vdts);
            t.line("AVDTS", av, "S_t * 30 * VDTS");
            t.line("value", cs.value + av, "CS^T + AVDTS");
            break;
        }
        case Factor::BF5: {
            explain_vtts(t, ctx, in);
            const double vtts = bf::vtts_scaled(in.get("MHI"), ctx.mobility.mhi_2015, ctx.mobility.vtts_2015);
            const auto d = bf::delay_time_value(ctx.inspection, vtts);
            t.line("P1", d.vehicles_traditional, "I * TLCT * alpha");
            t.line("P2", d.vehicles_drone, "I * RLCT * alpha");
            t.line("D_T", d.delay_traditional_h, "P1 * ADV / 60");
            t.line("D_D", d.delay_drone_h, "P2 * ADV / 60");
            t.line("D_T - D_D", d.hours_saved, "hours, times occupancy");
            t.line("delay value", d.value, "(D_T - D_D) * VTTS'");
            const auto c = bf::inspection_cost_savings(ctx.inspection);
            t.line("C1", c.snooper_only, "I at snooper core/off-hours rates");
            t.line("C2", c.drone_share, "drone-capable count at drone rates");
            t.line("C3", c.snooper_share, "remaining count at snooper rates");
            t.line("CS^B", c.savings, "C1 - (C2 + C3)");
            t.line("value", d.value + c.savings, "delay value + CS^B");
            break;
        }
        case Factor::BF6: {
            t.line("F_ag", ctx.crops.adoption, "farms_large / farms_total");
            for (bf::Crop crop : bf::kCrops) {
                bf::CropInputs ci;
                ci.soybean = {in.get("A_soy"), in.get("Y_soy"), in.get("price_soy")};
                ci.corn = {in.get("A_corn"), in.get("Y_corn"), in.get("price_corn")};
                ci.wheat = {in.get("A_wheat"), in.get("Y_wheat"), in.get("price_wheat")};
                const std::string n(bf::crop_name(crop));
                const auto& cy = ci.get(crop);
                t.line("A_" + n, cy.area, "forecast");
                t.line("Y_" + n, cy.yield, "forecast");
                t.line("price_" + n, cy.price, "forecast");
                const auto pv = bf::crop_production_value(crop, ci, ctx.crops);
                t.line("IP_" + n, pv.production, ctx.crops.incremental ? "Y u A" : "(Y + Y u) A");
                t.line("V_" + n, pv.value, "IP * price * F_ag");
                t.line("C_" + n, bf::crop_cost_saving(crop, ci, ctx.crops), "A * d * F_ag");
            }
            const auto parts = ledger::agriculture_parts(ctx, in);
            t.line("VIP^T", parts[0], "sum of V");
            t.line("crop cost savings", parts[1], "sum of C");
            t.line("E", bf::labor_saving_per_animal(ctx.livestock), "(ST1 + ST2) * FL / l_c");
            t.line("L", in.get("L"), "forecast");
            t.line("livestock savings", parts[2], "E * L * F_ag");
            t.line("value", parts[0] + parts[1] + parts[2], "VIP^T + crop + livestock");
            break;
        }
        case Factor::BF7: {
            const double u = bf::ohca_count(in.get("P"), ctx.medical.ohca_per_100k);
            t.line("P", in.get("P"), "forecast");
            t.line("U", u, "ohca_per_100k / 1e5 * P");
            t.line("VSL", in.get("VSL"), "forecast");
            const double one[] = {u};
            const auto m = bf::survivor_matrices(one, ctx.medical);
            t.line("N_S[0]", m.survivors[0][0], "U * p_s[0] (no drones)");
            const auto tv = ledger::medical_cases(ctx, in);
            for (std::size_t k = 0; k < tv.size(); ++k) {
                char label[64];
                std::snprintf(label, sizeof label, "case %zu (DSN=%.0f)", k + 1, ctx.medical.stations[k + 1]);
                t.text(std::string(" ") + label + (k + 1 == ctx.bf7_case ? " *selected*" : ""));
                t.line("N_S", m.survivors[0][k + 1], "U * p_s");
                t.line("dN_S", m.increase[0][k], "N_S - N_S[0]");
                t.line("CSS", in.get("VSL") - ctx.medical.cost_per_survivor[k + 1], "VSL - CAS");
                t.line("TVSL", tv[k], "CSS * dN_S");
            }
            t.line("value", tv.at(ctx.bf7_case - 1), "TVSL of the selected case");
            break;
        }
        case Factor::BF8:
            t.line("value", in.get("tax"), "tax series, passed through");
            break;
        case Factor::BF9: {
            const auto sc = bf::social_cost_forward(year, ctx.ghg);
            t.line("F_SCC", sc.co2, "SCC * (1 + r)^(year - base)");
            t.line("F_SCM", sc.ch4, "SCM * (1 + r)^(year - base)");
            t.line("F_SCN", sc.n2o, "SCN * (1 + r)^(year - base)");
            t.line("FSC_MN", sc.other_mean, "(F_SCM + F_SCN) / 2");
            const double vmt = bf::vmt_smco(in.get("VMT_US"), in.get("P_US"), in.get("P"));
            t.line("VMT'", vmt, "VMT_US / P_US * P");
            const auto em = bf::fleet_emissions(vmt, ctx.ghg);
            t.line("N_g", em.gallons, "VMT' / MPG");
            t.line("g_MN", ctx.ghg.other_per_gal(), "g_C (1 / F_eq - 1)");
            t.line("A_C", em.co2, "g_C * N_g");
            t.line("A_MN", em.other, "g_MN * N_g");
            double p = 0.0;
            explain_market(t, ctx, in, p);
            const double dt = in.get("D") / ctx.mobility.seats_per_evtol;
            t.line("D^T", dt, "D / seats_per_evtol");
            t.line("T", in.get("T"), "input");
            const auto df = bf::demand_factor(dt, p, in.get("T"), in.get("P"), in.get("P_US"), ctx.ghg.trips_us);
            t.line("Tr_SMCO", df.regional_trips, "P / P_US * Tr_US");
            t.line("D_f", df.value, "(D^T + p_SMCO + T) / Tr_SMCO");
            t.line("value", bf::ghg_savings(df.value, ctx.ghg.fuel_factor, sc.co2, em.co2, sc.other_mean, em.other),
                   "D_f * F_f * (F_SCC A_C + FSC_MN A_MN)");
            break;
        }
    }

    const BandValue band = f == Factor::BF8 ? (*r.tax)[idx] : r.benefits.at(f)[idx];
    char buf[160];
    std::snprintf(buf, sizeof buf, "band: lower %.10g, mean %.10g, upper %.10g", band.lower, band.mean,
                  band.upper);
    t.text(buf);
    return t.str();
}

int explain(const std::string& factor, int year, const RunManifest& m, std::ostream& out,
            std::ostream& err) {
    try {
        const auto f = parse_factor(factor);
        if (!f) throw ValidationError("unknown factor '" + factor + "'");
        const Scenario s = load_for_manifest(m);
        const ledger::RunResult r = ledger::run_engine(s, engine_options(m));
        out << explain_text(*f, year, s, r);
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
    }
}

}  // namespace aamcba::cli
