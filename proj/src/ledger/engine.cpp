#include "aamcba/ledger/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "aamcba/errors.hpp"
#include "aamcba/ingest/ingest.hpp"

namespace aamcba::ledger {

namespace {

BandValue clip_at_zero(BandValue b) {
    b.lower = std::max(0.0, b.lower);
    b.mean = std::max(0.0, b.mean);
    b.upper = std::max(0.0, b.upper);
    return b;
}

std::string format_p(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", p);
    return buf;
}

}  // namespace

std::set<std::string> required_history(const Toggles& t) {
    std::set<std::string> names;
    for (Factor f : t.factors)
        for (const auto& h : requirements_for(f).historical) names.insert(h);
    return names;
}

BandValue ForecastSet::at(const std::string& name, int year) const {
    auto h = history.find(name);
    if (h == history.end()) throw ValidationError("no forecast for variable '" + name + "'");
    const TimeSeries& ts = h->second;
    if (year >= ts.first_year() && year <= ts.last_year())
        return BandValue::point(ts.values[static_cast<std::size_t>(year - ts.first_year())]);
    if (year < ts.first_year())
        throw ValidationError("variable '" + name + "' has no value for year " + std::to_string(year));
    const auto& band = variables.at(name).result.band;
    std::size_t i = 0;
    try {
        i = band.index_of(year);
    } catch (const std::out_of_range&) {
        throw ValidationError("forecast of '" + name + "' does not reach year " + std::to_string(year));
    }
    return clip_at_zero({band.lower[i], band.mean[i], band.upper[i]});
}

ForecastSet forecast_variables(const Scenario& s, const std::set<std::string>& names,
                               const EngineOptions& options, std::vector<std::string>* warnings) {
    ForecastSet out;
    const int last = s.horizon.empty() ? 0 : s.horizon.back();
    for (const auto& name : names) {
        auto it = s.historical.find(name);
        if (it == s.historical.end())
            throw ValidationError("missing required series '" + name + "'");
        const TimeSeries& ts = it->second;

        std::optional<forecast::ArimaOrder> pin;
        if (auto p = options.pins.find(name); p != options.pins.end()) pin = p->second;
        else if (options.use_scenario_orders) {
            if (auto o = s.orders.find(name); o != s.orders.end()) pin = o->second;
        }

        forecast::PipelineOptions po;
        po.horizon = std::max(1, last - ts.last_year());
        po.drift_when_differenced = s.toggles.forecast_drift;

        VariableForecast vf;
        vf.pinned = pin.has_value();
        try {
            vf.result = forecast::auto_pipeline(ts, pin, po);
        } catch (const NumericalError& e) {
            if (!options.best_effort) throw NumericalError("forecast of '" + name + "': " + e.what());
            vf.result = forecast::auto_pipeline(ts, forecast::ArimaOrder{0, 1, 0}, po);
            vf.fallback = true;
            if (warnings)
                warnings->push_back("forecast of '" + name + "' fell back to ARIMA(0,1,0): " + e.what());
        }
        if (warnings && !vf.result.adequate) {
            double p = 0.0;
            for (const auto& d : vf.result.diagnostics)
                if (d.test.rfind("Ljung-Box", 0) == 0) p = d.p_value;
            warnings->push_back("residuals of '" + name + "' " + vf.result.model.order.str() +
                                " fail the Ljung-Box whiteness check (p=" + format_p(p) + ")");
        }
        out.variables.emplace(name, std::move(vf));
        out.history.emplace(name, ts);
    }
    return out;
}

double pick(const BandValue& b, Channel c) {
    switch (c) {
        case Channel::Lower: return b.lower;
        case Channel::Mean: return b.mean;
        case Channel::Upper: return b.upper;
    }
    return b.mean;
}

double ChannelInputs::get(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end())
        throw ValidationError("no value for '" + key + "' in year " + std::to_string(year));
    return it->second;
}

ChannelInputs channel_inputs(const Scenario& s, const ForecastSet& f, int year, Channel c) {
    ChannelInputs in;
    in.year = year;
    for (const auto& [name, vf] : f.variables) in.values[name] = pick(f.at(name, year), c);
    for (const auto& [name, ex] : s.exogenous)
        if (ex.covers(year)) in.values[name] = pick(ex.band_at(year), c);
    return in;
}

bf::MobilityConstants mobility_constants(const Scenario& s) {
    bf::MobilityConstants c;
    c.vtts_2015 = s.constant_or("VTTS_2015", c.vtts_2015);
    c.mhi_2015 = s.constant_or("MHI_2015", c.mhi_2015);
    c.trip_saving_min = s.constant_or("s", c.trip_saving_min);
    c.trip_miles = s.constant_or("d1", c.trip_miles);
    c.ground_fatality_rate = s.constant_or("A_g", c.ground_fatality_rate);
    c.air_fatality_rate = s.constant_or("A_a", c.air_fatality_rate);
    c.seats_per_evtol = s.constant_or("seats_per_evtol", c.seats_per_evtol);
    c.use_trip_miles = s.toggles.bf2_use_trip_miles;
    return c;
}

bf::PackageMarketConstants market_constants(const Scenario& s) {
    bf::PackageMarketConstants c;
    c.v_2019 = s.constant_or("V_2019", c.v_2019);
    c.u_2019 = s.constant_or("U_2019", c.u_2019);
    c.cagr = s.constant_or("CAGR", c.cagr);
    c.parcels_2022 = s.constant_or("parcels_2022", c.parcels_2022);
    c.parcel_fraction = s.constant_or("parcel_fraction", c.parcel_fraction);
    c.operational_days = s.constant_or("operational_days", c.operational_days);
    c.round_trip_min = s.constant_or("R_t", c.round_trip_min);
    c.truck_hours = s.constant_or("m", c.truck_hours);
    c.items_per_day = s.constant_or("n", c.items_per_day);
    c.truck_cost_per_hour = s.constant_or("q", c.truck_cost_per_hour);
    c.drone_capital = s.constant_or("C_c", c.drone_capital);
    c.drone_operating = s.constant_or("C_o", c.drone_operating);
    c.avg_time_saving_min = s.constant_or("ATS", c.avg_time_saving_min);
    c.vdts = s.constant_or("VDTS", c.vdts);
    c.reserve_fraction = s.constant_or("reserve_fraction", c.reserve_fraction);
    c.single_ratio = s.toggles.bf3_single_ratio;
    c.amortize_years = s.toggles.amortize_capex_years;
    return c;
}

bf::CargoConstants cargo_constants(const Scenario& s) {
    bf::CargoConstants c;
    c.payload_evtol = s.constant_or("p_e", c.payload_evtol);
    c.payload_truck = s.constant_or("p_t", c.payload_truck);
    c.cost_truck = s.constant_or("c_t", c.cost_truck);
    c.cost_evtol = s.constant_or("c_e", c.cost_evtol);
    c.fraction_evtol = s.constant_or("f_e", c.fraction_evtol);
    c.rent = s.constant_or("warehouse_rent", c.rent);
    c.warehouse_size = s.constant_or("warehouse_size", c.warehouse_size);
    c.nnn = s.constant_or("warehouse_nnn", c.nnn);
    c.wage = s.constant_or("warehouse_wage", c.wage);
    c.area_per_worker = s.constant_or("area_per_worker", c.area_per_worker);
    c.saving_min = s.constant_or("s", c.saving_min);
    c.trip_miles = s.constant_or("d1", c.trip_miles);
    c.vdts = s.constant_or("VDTS", c.vdts);
    c.ci_sign = s.toggles.bf4_ci_sign == CiSign::AsPrinted ? bf::ExtraCostSign::AsPrinted
                                                          : bf::ExtraCostSign::PositiveExtraCost;
    return c;
}

bf::InspectionConstants inspection_constants(const Scenario& s) {
    bf::InspectionConstants c;
    c.inspections = s.constant_or("I", c.inspections);
    c.lane_volume = s.constant_or("alpha", c.lane_volume);
    c.traditional_closure_h = s.constant_or("TLCT", c.traditional_closure_h);
    c.reduced_closure_h = s.constant_or("RLCT", c.reduced_closure_h);
    c.avg_delay_min = s.constant_or("ADV", c.avg_delay_min);
    c.snooper_core = s.constant_or("snooper_core", c.snooper_core);
    c.snooper_offhours = s.constant_or("snooper_offhours", c.snooper_offhours);
    c.drone_core = s.constant_or("drone_core", c.drone_core);
    c.drone_offhours = s.constant_or("drone_offhours", c.drone_offhours);
    c.core_share = s.constant_or("core_share", c.core_share);
    c.drone_capable = s.constant_or("drone_capable_count", c.drone_capable);
    c.occupancy = s.constant_or("occupancy", c.occupancy);
    return c;
}

bf::CropConstants crop_constants(const Scenario& s) {
    bf::CropConstants c;
    c.uplift_soy_corn = s.constant_or("y_uplift", c.uplift_soy_corn);
    c.uplift_wheat = s.constant_or("x_uplift", c.uplift_wheat);
    c.saving_corn = s.constant_or("d_corn", c.saving_corn);
    c.saving_soy = s.constant_or("d_soy", c.saving_soy);
    c.saving_wheat = s.constant_or("d_wheat", c.saving_wheat);
    if (s.constants.contains("F_ag") ||
        (s.constants.contains("farms_large") && s.constants.contains("farms_total")))
        c.adoption = s.adoption_factor();
    c.incremental = s.toggles.bf6_incremental;
    c.matching_area = s.toggles.bf6_matching_area;
    return c;
}

bf::LivestockConstants livestock_constants(const Scenario& s) {
    bf::LivestockConstants c;
    c.monitoring_hours = s.constant_or("ST1", c.monitoring_hours);
    c.feeding_hours = s.constant_or("ST2", c.feeding_hours);
    c.herd_size = s.constant_or("l_c", c.herd_size);
    c.farm_wage = s.constant_or("FL", c.farm_wage);
    return c;
}

bf::MedicalConstants medical_constants(const Scenario& s) {
    bf::MedicalConstants c;
    c.ohca_per_100k = s.constant_or("ohca_per_100k", c.ohca_per_100k);
    if (auto it = s.vectors.find("DSN"); it != s.vectors.end()) c.stations = it->second;
    if (auto it = s.vectors.find("p_s"); it != s.vectors.end()) c.survival = it->second;
    if (auto it = s.vectors.find("CAS"); it != s.vectors.end()) c.cost_per_survivor = it->second;
    return c;
}

bf::GhgConstants ghg_constants(const Scenario& s) {
    bf::GhgConstants c;
    c.scc = s.constant_or("SCC", c.scc);
    c.scm = s.constant_or("SCM", c.scm);
    c.scn = s.constant_or("SCN", c.scn);
    c.discount = s.constant_or("scc_discount", c.discount);
    c.base_year = static_cast<int>(s.constant_or("scc_base_year", c.base_year));
    c.mpg = s.constant_or("MPG", c.mpg);
    c.co2_share = s.constant_or("F_eq", c.co2_share);
    c.co2_per_gal = s.constant_or("g_C", c.co2_per_gal);
    c.fuel_factor = s.constant_or("F_f", c.fuel_factor);
    c.trips_us = s.constant_or("Tr_US", c.trips_us);
    return c;
}

FactorContext FactorContext::from(const Scenario& s) {
    FactorContext ctx;
    ctx.mobility = mobility_constants(s);
    ctx.market = market_constants(s);
    ctx.cargo = cargo_constants(s);
    ctx.inspection = inspection_constants(s);
    ctx.crops = crop_constants(s);
    ctx.livestock = livestock_constants(s);
    ctx.medical = medical_constants(s);
    ctx.ghg = ghg_constants(s);

    const Toggles& t = s.toggles;
    if (t.enabled(Factor::BF1) || t.enabled(Factor::BF2) || t.enabled(Factor::BF9))
        ctx.mobility.validate();
    if (t.enabled(Factor::BF3) || t.enabled(Factor::BF9)) ctx.market.validate();
    if (t.enabled(Factor::BF4)) ctx.cargo.validate();
    if (t.enabled(Factor::BF5)) ctx.inspection.validate();
    if (t.enabled(Factor::BF6)) {
        ctx.crops.validate();
        ctx.livestock.validate();
    }
    if (t.enabled(Factor::BF7)) ctx.medical.validate();
    if (t.enabled(Factor::BF9)) ctx.ghg.validate();
    ctx.bf7_case = t.bf7_case > 0 ? static_cast<std::size_t>(t.bf7_case) : ctx.medical.cases();
    return ctx;
}

std::array<double, 3> agriculture_parts(const FactorContext& ctx, const ChannelInputs& in) {
    bf::CropInputs crops;
    crops.soybean = {in.get("A_soy"), in.get("Y_soy"), in.get("price_soy")};
    crops.corn = {in.get("A_corn"), in.get("Y_corn"), in.get("price_corn")};
    crops.wheat = {in.get("A_wheat"), in.get("Y_wheat"), in.get("price_wheat")};
    return {bf::total_production_value(crops, ctx.crops), bf::crop_cost_savings(crops, ctx.crops),
            bf::livestock_savings(in.get("L"), ctx.livestock, ctx.crops.adoption)};
}

std::vector<double> medical_cases(const FactorContext& ctx, const ChannelInputs& in) {
    const double u = bf::ohca_count(in.get("P"), ctx.medical.ohca_per_100k);
    const double ohca[] = {u};
    const auto m = bf::survivor_matrices(ohca, ctx.medical);
    const double vsl[] = {in.get("VSL")};
    return bf::life_saving_value(m.increase, vsl, ctx.medical.cost_per_survivor).front();
}

double evaluate_factor(Factor f, const FactorContext& ctx, const ChannelInputs& in) {
    const int year = in.year;
    switch (f) {
        case Factor::BF1: {
            const double vtts = bf::vtts_scaled(in.get("MHI"), ctx.mobility.mhi_2015, ctx.mobility.vtts_2015);
            return bf::passenger_time_value(in.get("D"), ctx.mobility.trip_saving_min, vtts).value;
        }
        case Factor::BF2: {
            const double vmt = bf::vmt_smco(in.get("VMT_US"), in.get("P_US"), in.get("P"));
            return bf::safety_cost_reduction(vmt, in.get("D"), ctx.mobility, in.get("VSL")).value;
        }
        case Factor::BF3: {
            const double p = bf::smco_package_trips(year, in.get("P"), in.get("P_US"), ctx.market);
            double total = bf::package_lead_time_value(p, ctx.market);
            if (p > 0.0) total += bf::logistics_cost_savings(p, bf::fleet_size(p, ctx.market).total, ctx.market);
            return total;
        }
        case Factor::BF4: {
            const auto cs = bf::cargo_inventory_savings(in.get("T"), ctx.cargo);
            return cs.value + bf::cargo_lead_time_value(cs.months_saved, ctx.cargo.vdts);
        }
        case Factor::BF5: {
            const double vtts = bf::vtts_scaled(in.get("MHI"), ctx.mobility.mhi_2015, ctx.mobility.vtts_2015);
            return bf::delay_time_value(ctx.inspection, vtts).value +
                   bf::inspection_cost_savings(ctx.inspection).savings;
        }
        case Factor::BF6: {
            const auto parts = agriculture_parts(ctx, in);
            return parts[0] + parts[1] + parts[2];
        }
        case Factor::BF7:
            return medical_cases(ctx, in).at(ctx.bf7_case - 1);
        case Factor::BF8:
            return in.get("tax");
        case Factor::BF9: {
            const double pop = in.get("P");
            const double pop_us = in.get("P_US");
            const double passengers = in.get("D") / ctx.mobility.seats_per_evtol;
            const double packages = bf::smco_package_trips(year, pop, pop_us, ctx.market);
            const auto df = bf::demand_factor(passengers, packages, in.get("T"), pop, pop_us,
                                              ctx.ghg.trips_us);
            const auto em = bf::fleet_emissions(bf::vmt_smco(in.get("VMT_US"), pop_us, pop), ctx.ghg);
            const auto sc = bf::social_cost_forward(year, ctx.ghg);
            return bf::ghg_savings(df.value, ctx.ghg.fuel_factor, sc.co2, em.co2, sc.other_mean, em.other);
        }
    }
    throw std::invalid_argument("unknown factor");
}

RunResult evaluate(const Scenario& s, ForecastSet forecasts) {
    RunResult out;
    out.horizon = s.horizon;
    out.forecasts = std::move(forecasts);
    const FactorContext ctx = FactorContext::from(s);
    out.bf7_case = ctx.bf7_case;
    const Toggles& t = s.toggles;
    const std::size_t n = s.horizon.size();

    for (Factor f : t.factors)
        if (f != Factor::BF8) out.benefits[f].reserve(n);
    if (t.enabled(Factor::BF6)) out.agriculture.reserve(n);
    if (t.enabled(Factor::BF7)) out.medical.reserve(n);

    for (int year : s.horizon) {
        std::array<ChannelInputs, 3> in;
        for (std::size_t c = 0; c < 3; ++c) in[c] = channel_inputs(s, out.forecasts, year, kChannels[c]);

        for (Factor f : t.factors) {
            if (f == Factor::BF8) continue;
            std::array<double, 3> v{};
            for (std::size_t c = 0; c < 3; ++c) v[c] = evaluate_factor(f, ctx, in[c]);
            out.benefits[f].push_back(BandValue::from_channels(v[0], v[1], v[2]));
        }
        if (t.enabled(Factor::BF6)) {
            std::array<std::array<double, 3>, 3> parts;
            for (std::size_t c = 0; c < 3; ++c) parts[c] = agriculture_parts(ctx, in[c]);
            std::array<BandValue, 3> row;
            for (std::size_t k = 0; k < 3; ++k)
                row[k] = BandValue::from_channels(parts[0][k], parts[1][k], parts[2][k]);
            out.agriculture.push_back(row);
        }
        if (t.enabled(Factor::BF7)) {
            std::array<std::vector<double>, 3> cases;
            for (std::size_t c = 0; c < 3; ++c) cases[c] = medical_cases(ctx, in[c]);
            std::vector<BandValue> row;
            for (std::size_t k = 0; k < cases[1].size(); ++k)
                row.push_back(BandValue::from_channels(cases[0][k], cases[1][k], cases[2][k]));
            out.medical.push_back(std::move(row));
        }
    }

    if (t.enabled(Factor::BF8)) out.tax = tax_passthrough(s.series("tax"), s.horizon);

    std::vector<double> capex, opex;
    const auto& cx = s.series("capex");
    const auto& ox = s.series("opex");
    for (int year : s.horizon) {
        if (!cx.covers(year)) throw ValidationError("capex series has no value for year " + std::to_string(year));
        if (!ox.covers(year)) throw ValidationError("opex series has no value for year " + std::to_string(year));
        capex.push_back(cx.at(year));
        opex.push_back(ox.at(year));
    }
    out.annual = compute_npi(s.horizon, out.benefits, out.tax, capex, opex);
    return out;
}

RunResult run_engine(const Scenario& s, const EngineOptions& options) {
    ingest::check_scenario(s);
    std::vector<std::string> warnings = ingest::validate_scenario(s);
    ForecastSet f = forecast_variables(s, required_history(s.toggles), options, &warnings);
    RunResult out = evaluate(s, std::move(f));
    out.warnings = std::move(warnings);
    return out;
}

}  // namespace aamcba::ledger
