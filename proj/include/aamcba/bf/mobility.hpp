#pragma once

namespace aamcba::bf {

/// Passenger travel-time (BF-1) and safety (BF-2) inputs that do not vary by year.
struct MobilityConstants {
    double vtts_2015 = 17.25;       // $/person-hour
    double mhi_2015 = 0.0;          // $/household-year
    double trip_saving_min = 50.0;  // s
    double trip_miles = 50.0;       // d1
    double ground_fatality_rate = 0.6;  // per 1e8 passenger-miles
    double air_fatality_rate = 0.3;
    double seats_per_evtol = 4.0;
    /// Read the mileage ratio from D/seats * d1 (trip miles) instead of D * d1.
    bool use_trip_miles = false;

    void validate() const;
};

/// (MHI_i / MHI_2015) * VTTS_2015.
double vtts_scaled(double mhi, double mhi_2015, double vtts_2015);

struct PassengerTime {
    double hours_saved = 0.0;
    double value = 0.0;
};
PassengerTime passenger_time_value(double demand, double saving_minutes, double vtts);

/// Per-capita US vehicle-miles scaled to the regional population.
double vmt_smco(double vmt_us, double pop_us, double pop);

struct SafetyResult {
    double fatalities = 0.0;        // F: extra ground fatalities vs air
    double passenger_trips = 0.0;   // D / seats
    double mileage_ratio = 0.0;     // AAM miles / VMT'
    double reduction = 0.0;         // R
    double value = 0.0;             // R * VSL
};
SafetyResult safety_cost_reduction(double vmt, double demand, const MobilityConstants& c,
                                   double vsl);

}  // namespace aamcba::bf
