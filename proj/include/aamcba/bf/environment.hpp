#pragma once

namespace aamcba::bf {

/// Social cost of greenhouse gases and ground fleet emission factors (BF-9).
struct GhgConstants {
    double scc = 51.0;     // $/t CO2
    double scm = 1200.0;   // $/t CH4
    double scn = 1500.0;   // $/t N2O
    double discount = 0.03;
    int base_year = 2020;
    double mpg = 22.5;
    double co2_share = 0.993;   // F_eq
    double co2_per_gal = 8.89e-3;  // g_C, t
    double fuel_factor = 0.35;  // F_f
    double trips_us = 4.11e11;  // Tr_US

    /// g_MN = g_C * (1/F_eq - 1).
    double other_per_gal() const;
    void validate() const;
};

struct SocialCost {
    double co2 = 0.0;  // F_SCC
    double ch4 = 0.0;
    double n2o = 0.0;
    double other_mean = 0.0;  // FSC_MN
};
SocialCost social_cost_forward(int year, const GhgConstants& c);

struct Emissions {
    double gallons = 0.0;
    double co2 = 0.0;    // A_C
    double other = 0.0;  // A_MN
};
Emissions fleet_emissions(double vmt, const GhgConstants& c);

struct DemandFactor {
    double regional_trips = 0.0;  // Tr_SMCO
    double value = 0.0;           // D_f
};
DemandFactor demand_factor(double passenger_trips, double packages, double cargo_trips,
                           double pop, double pop_us, double trips_us);

double ghg_savings(double demand, double fuel_factor, double scc, double co2,
                   double other_mean, double other);

}  // namespace aamcba::bf
