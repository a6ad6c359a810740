#pragma once

namespace aamcba::bf {

/// Drone package delivery market and fleet constants (BF-3).
struct PackageMarketConstants {
    double v_2019 = 343.303;  // $M
    double u_2019 = 211.553;  // $M
    double cagr = 0.538;
    int base_year = 2019;
    int reference_year = 2022;
    double parcels_2022 = 6.5e9;
    double parcel_fraction = 0.86;
    double operational_days = 284.0;
    double round_trip_min = 24.0;       // R_t
    double truck_hours = 10.0;          // m
    double items_per_day = 250.0;       // n
    double truck_cost_per_hour = 30.0;  // q
    double drone_capital = 4000.0;      // C_c
    double drone_operating = 800.0;     // C_o
    double avg_time_saving_min = 13.0;  // ATS
    double vdts = 3.61;                 // $/day
    double reserve_fraction = 0.25;
    /// N_i = U_i / U_2022 instead of U_i * r' / U_2022.
    bool single_ratio = false;
    /// Straight-line capital charge over this many years; 0 charges C_c in full every year.
    int amortize_years = 0;

    double eligible_packages() const { return parcels_2022 * parcel_fraction; }
    double annual_drone_cost() const;
    void validate() const;
};

struct MarketValue {
    double ratio = 0.0;  // r' = U_2019 / V_2019
    double global = 0.0;  // V_i
    double us = 0.0;      // U_i
    double growth = 0.0;  // N_i
};
MarketValue market_value(int year, const PackageMarketConstants& c);

double smco_package_trips(int year, double pop, double pop_us, const PackageMarketConstants& c);

struct Fleet {
    double trips_per_drone = 0.0;  // Tr'
    double primary = 0.0;          // Y
    double reserve = 0.0;          // Z
    double total = 0.0;            // X = 2Y + Z
};
Fleet fleet_size(double packages, const PackageMarketConstants& c);

double logistics_cost_savings(double packages, double drones, const PackageMarketConstants& c);
double package_lead_time_value(double packages, const PackageMarketConstants& c);

enum class ExtraCostSign { AsPrinted, PositiveExtraCost };

/// eVTOL cargo and warehouse constants (BF-4).
struct CargoConstants {
    double payload_evtol = 525.0;     // p^e, lb
    double payload_truck = 24000.0;   // p^t, lb
    double cost_truck = 1.417;        // c^t, $/mile
    double cost_evtol = 34.0;         // c^e, $/mile
    double fraction_evtol = 0.44;     // f^e
    double rent = 0.79;               // $/sf-month
    double warehouse_size = 39631.0;  // sf
    double nnn = 0.25;                // $/sf-month
    double wage = 27867.0;            // $/yr
    double area_per_worker = 138.0;   // sf
    double saving_min = 50.0;
    double trip_miles = 50.0;
    double vdts = 3.61;
    ExtraCostSign ci_sign = ExtraCostSign::AsPrinted;

    void validate() const;
};

double cargo_time_saved(double trips, double saving_min);
double warehouse_monthly_cost(const CargoConstants& c);

struct CargoSavings {
    double months_saved = 0.0;    // S_t
    double warehouse = 0.0;       // W
    double storage = 0.0;         // CS^c
    double bracket = 0.0;         // c^t/p^t - c^e/p^e
    double extra_cost = 0.0;      // CI
    double net = 0.0;             // CD
    double value = 0.0;           // CS^T
};
CargoSavings cargo_inventory_savings(double trips, const CargoConstants& c);

double cargo_lead_time_value(double months, double vdts);

}  // namespace aamcba::bf
