#include "aamcba/bf/inspection.hpp"

#include <cmath>
#include <stdexcept>

namespace aamcba::bf {

void InspectionConstants::validate() const {
    if (inspections < 0.0 || lane_volume < 0.0 || avg_delay_min < 0.0 || occupancy < 0.0)
        throw std::invalid_argument("inspection volumes must be non-negative");
    if (reduced_closure_h < 0.0 || reduced_closure_h > traditional_closure_h)
        throw std::invalid_argument("RLCT must lie in [0, TLCT]");
    if (core_share < 0.0 || core_share > 1.0)
        throw std::invalid_argument("core_share must lie in [0, 1]");
    if (drone_capable < 0.0 || drone_capable > inspections)
        throw std::invalid_argument("drone_capable_count must lie in [0, I]");
}

DelayResult delay_time_value(const InspectionConstants& c, double vtts) {
    DelayResult out;
    out.vehicles_traditional = c.inspections * c.traditional_closure_h * c.lane_volume;
    out.vehicles_drone = c.inspections * c.reduced_closure_h * c.lane_volume;
    out.delay_traditional_h = out.vehicles_traditional * c.avg_delay_min / 60.0;
    out.delay_drone_h = out.vehicles_drone * c.avg_delay_min / 60.0;
    out.hours_saved = (out.delay_traditional_h - out.delay_drone_h) * c.occupancy;
    out.value = out.hours_saved * vtts;
    return out;
}

double blended_inspection_cost(double count, double core_share, double core_rate,
                               double offhours_rate) {
    // Whole inspections: the first floor(share * count) fall in core hours.
    const double core_count = std::floor(count * core_share + 1e-9);
    return core_count * core_rate + (count - core_count) * offhours_rate;
}

InspectionCosts inspection_cost_savings(const InspectionConstants& c) {
    InspectionCosts out;
    out.snooper_only =
        blended_inspection_cost(c.inspections, c.core_share, c.snooper_core, c.snooper_offhours);
    out.drone_share =
        blended_inspection_cost(c.drone_capable, c.core_share, c.drone_core, c.drone_offhours);
    out.snooper_share = blended_inspection_cost(c.inspections - c.drone_capable, c.core_share,
                                                c.snooper_core, c.snooper_offhours);
    out.savings = out.snooper_only - (out.drone_share + out.snooper_share);
    return out;
}

const CostRateTable& snooper_cost_table() {
    static const CostRateTable t{
        "snooper",
        {{"bridge specialist", 3, 8.0, 37.0, 0.45, 854.0},
         {"highway technician", 3, 8.0, 21.0, 0.45, 727.0}},
        2018.0,
        {{"snooper truck", 625.0}, {"other equipment", 500.0}},
        4152.0};
    return t;
}

const CostRateTable& drone_cost_table() {
    static const CostRateTable t{"drone",
                                 {{"bridge specialist", 2, 4.0, 37.0, 0.45, 427.0}},
                                 427.0,
                                 {{"drone, software, tablet and pickups", 95.0}},
                                 735.0};
    return t;
}

double equipment_total(const CostRateTable& t) {
    double b = 0.0;
    for (const auto& e : t.equipment) b += e.rate;
    return b;
}

double core_cost_rate(const CostRateTable& t) { return t.payroll + equipment_total(t); }

double labor_line_cost(const LaborLine& l) {
    return l.employees * l.hours * l.hourly_rate * (1.0 + l.fringe);
}

}  // namespace aamcba::bf
