#include "aamcba/bf/environment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aamcba::bf {

double GhgConstants::other_per_gal() const { return co2_per_gal * (1.0 / co2_share - 1.0); }

void GhgConstants::validate() const {
    if (!(co2_share > 0.0 && co2_share <= 1.0)) throw std::invalid_argument("F_eq must lie in (0, 1]");
    for (double v : {scc, scm, scn, mpg, co2_per_gal, fuel_factor, trips_us})
        if (!(v > 0.0)) throw std::invalid_argument("GHG constants must be positive");
    if (discount < 0.0) throw std::invalid_argument("SCC discount rate must be non-negative");
}

SocialCost social_cost_forward(int year, const GhgConstants& c) {
    if (year < c.base_year)
        throw std::invalid_argument("social_cost_forward: year " + std::to_string(year) +
                                    " precedes base year " + std::to_string(c.base_year));
    const double growth = std::pow(1.0 + c.discount, year - c.base_year);
    SocialCost out;
    out.co2 = c.scc * growth;
    out.ch4 = c.scm * growth;
    out.n2o = c.scn * growth;
    out.other_mean = (out.ch4 + out.n2o) / 2.0;
    return out;
}

Emissions fleet_emissions(double vmt, const GhgConstants& c) {
    if (!(c.mpg > 0.0)) throw std::invalid_argument("fleet_emissions: MPG must be positive");
    Emissions out;
    out.gallons = vmt / c.mpg;
    out.co2 = c.co2_per_gal * out.gallons;
    out.other = c.other_per_gal() * out.gallons;
    return out;
}

DemandFactor demand_factor(double passenger_trips, double packages, double cargo_trips,
                           double pop, double pop_us, double trips_us) {
    if (!(pop_us > 0.0)) throw std::invalid_argument("demand_factor: US population must be positive");
    DemandFactor out;
    out.regional_trips = pop / pop_us * trips_us;
    if (out.regional_trips == 0.0) throw std::invalid_argument("demand_factor: zero regional trip count");
    out.value = (passenger_trips + packages + cargo_trips) / out.regional_trips;
    return out;
}

double ghg_savings(double demand, double fuel_factor, double scc, double co2,
                   double other_mean, double other) {
    return demand * fuel_factor * (scc * co2 + other_mean * other);
}

}  // namespace aamcba::bf
