#include "aamcba/bf/mobility.hpp"

#include <stdexcept>

namespace aamcba::bf {

void MobilityConstants::validate() const {
    if (!(trip_saving_min > 0.0)) throw std::invalid_argument("trip time saving s must be positive");
    if (!(trip_miles > 0.0)) throw std::invalid_argument("trip distance d1 must be positive");
    if (!(ground_fatality_rate >= air_fatality_rate && air_fatality_rate >= 0.0))
        throw std::invalid_argument("fatality rates must satisfy A_g >= A_a >= 0");
    if (!(seats_per_evtol >= 1.0)) throw std::invalid_argument("seats per eVTOL must be >= 1");
}

double vtts_scaled(double mhi, double mhi_2015, double vtts_2015) {
    if (!(mhi_2015 > 0.0)) throw std::invalid_argument("vtts_scaled: base MHI must be positive");
    return mhi / mhi_2015 * vtts_2015;
}

PassengerTime passenger_time_value(double demand, double saving_minutes, double vtts) {
    PassengerTime out;
    out.hours_saved = demand * saving_minutes / 60.0;
    out.value = out.hours_saved * vtts;
    return out;
}

double vmt_smco(double vmt_us, double pop_us, double pop) {
    if (pop_us == 0.0) throw std::invalid_argument("vmt_smco: zero US population");
    return vmt_us / pop_us * pop;
}

SafetyResult safety_cost_reduction(double vmt, double demand, const MobilityConstants& c,
                                   double vsl) {
    if (!(vmt > 0.0)) throw std::invalid_argument("safety_cost_reduction: VMT' must be positive");
    SafetyResult out;
    out.fatalities = vmt / 1e8 * (c.ground_fatality_rate - c.air_fatality_rate);
    out.passenger_trips = demand / c.seats_per_evtol;
    const double aam_miles = (c.use_trip_miles ? out.passenger_trips : demand) * c.trip_miles;
    out.mileage_ratio = aam_miles / vmt;
    out.reduction = out.mileage_ratio * out.fatalities;
    out.value = out.reduction * vsl;
    return out;
}

}  // namespace aamcba::bf
