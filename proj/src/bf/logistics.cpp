#include "aamcba/bf/logistics.hpp"

#include <cmath>
#include <stdexcept>

namespace aamcba::bf {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

double PackageMarketConstants::annual_drone_cost() const {
    const double capital = amortize_years > 0 ? drone_capital / amortize_years : drone_capital;
    return capital + drone_operating;
}

void PackageMarketConstants::validate() const {
    require_positive(v_2019, "V_2019");
    require_positive(u_2019, "U_2019");
    require_positive(cagr, "CAGR");
    require_positive(parcels_2022, "parcels_2022");
    require_positive(parcel_fraction, "parcel_fraction");
    require_positive(operational_days, "operational_days");
    require_positive(round_trip_min, "R_t");
    require_positive(truck_hours, "m");
    require_positive(items_per_day, "n");
    require_positive(truck_cost_per_hour, "q");
    require_positive(drone_capital, "C_c");
    require_positive(drone_operating, "C_o");
    require_positive(avg_time_saving_min, "ATS");
    require_positive(vdts, "VDTS");
    if (reserve_fraction < 0.0) throw std::invalid_argument("reserve_fraction must be >= 0");
    if (amortize_years < 0) throw std::invalid_argument("amortize_capex_years must be >= 0");
}

MarketValue market_value(int year, const PackageMarketConstants& c) {
    if (year < c.reference_year)
        throw std::invalid_argument("market_value: year " + std::to_string(year) +
                                    " precedes " + std::to_string(c.reference_year));
    MarketValue out;
    out.ratio = c.u_2019 / c.v_2019;
    out.global = c.v_2019 * std::pow(1.0 + c.cagr, year - c.base_year);
    out.us = out.ratio * out.global;
    const double us_ref =
        out.ratio * c.v_2019 * std::pow(1.0 + c.cagr, c.reference_year - c.base_year);
    out.growth = c.single_ratio ? out.us / us_ref : out.us * out.ratio / us_ref;
    return out;
}

double smco_package_trips(int year, double pop, double pop_us, const PackageMarketConstants& c) {
    if (!(pop_us > 0.0)) throw std::invalid_argument("smco_package_trips: US population must be positive");
    return market_value(year, c).growth * c.eligible_packages() * (pop / pop_us);
}

Fleet fleet_size(double packages, const PackageMarketConstants& c) {
    if (packages < 0.0) throw std::invalid_argument("fleet_size: negative package count");
    Fleet f;
    f.trips_per_drone = (60.0 / c.round_trip_min) * 24.0 * c.operational_days;
    f.primary = packages / f.trips_per_drone;
    f.reserve = c.reserve_fraction * f.primary;
    f.total = 2.0 * f.primary + f.reserve;
    return f;
}

double logistics_cost_savings(double packages, double drones, const PackageMarketConstants& c) {
    if (!(packages > 0.0)) throw std::invalid_argument("logistics_cost_savings: zero package count");
    const double truck = c.truck_hours * c.truck_cost_per_hour / c.items_per_day;
    const double drone = c.annual_drone_cost() * drones / packages;
    return (truck - drone) * packages;
}

double package_lead_time_value(double packages, const PackageMarketConstants& c) {
    if (packages < 0.0) throw std::invalid_argument("package_lead_time_value: negative package count");
    return packages * (c.avg_time_saving_min / 1440.0) * c.vdts;
}

void CargoConstants::validate() const {
    require_positive(payload_evtol, "p_e");
    require_positive(payload_truck, "p_t");
    require_positive(cost_truck, "c_t");
    require_positive(cost_evtol, "c_e");
    require_positive(fraction_evtol, "f_e");
    require_positive(rent, "warehouse_rent");
    require_positive(warehouse_size, "warehouse_size");
    require_positive(nnn, "warehouse_nnn");
    require_positive(wage, "warehouse_wage");
    require_positive(area_per_worker, "area_per_worker");
    require_positive(saving_min, "s");
    require_positive(trip_miles, "d1");
    require_positive(vdts, "VDTS");
}

double cargo_time_saved(double trips, double saving_min) {
    if (trips < 0.0) throw std::invalid_argument("cargo_time_saved: negative trip count");
    return trips * saving_min / (30.0 * 24.0 * 60.0);
}

double warehouse_monthly_cost(const CargoConstants& c) {
    if (!(c.area_per_worker > 0.0))
        throw std::invalid_argument("warehouse_monthly_cost: area_per_worker must be positive");
    return (c.rent + c.nnn) * c.warehouse_size +
           (c.warehouse_size / c.area_per_worker) * (c.wage / 12.0);
}

CargoSavings cargo_inventory_savings(double trips, const CargoConstants& c) {
    CargoSavings out;
    out.months_saved = cargo_time_saved(trips, c.saving_min);
    out.warehouse = warehouse_monthly_cost(c);
    out.storage = out.months_saved * out.warehouse;
    out.bracket = c.cost_truck / c.payload_truck - c.cost_evtol / c.payload_evtol;
    const double per_trip = c.payload_evtol * c.trip_miles * trips;
    out.extra_cost = c.ci_sign == ExtraCostSign::AsPrinted ? out.bracket * per_trip
                                                           : std::abs(out.bracket) * per_trip;
    out.net = out.storage - out.extra_cost;
    out.value = c.fraction_evtol * out.net;
    return out;
}

double cargo_lead_time_value(double months, double vdts) {
    if (months < 0.0) throw std::invalid_argument("cargo_lead_time_value: negative months");
    return months * 30.0 * vdts;
}

}  // namespace aamcba::bf
