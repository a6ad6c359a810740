#pragma once

#include <string>
#include <vector>

namespace aamcba::bf {

/// Bridge inspection volumes and per-inspection cost rates (BF-5).
struct InspectionConstants {
    double inspections = 400.0;             // I
    double lane_volume = 1200.0;            // alpha, vehicles/h/lane
    double traditional_closure_h = 8.0;     // TLCT
    double reduced_closure_h = 4.0;         // RLCT
    double avg_delay_min = 10.0;            // ADV, per vehicle
    double snooper_core = 3143.0;
    double snooper_offhours = 4152.0;
    double drone_core = 522.0;
    double drone_offhours = 735.0;
    double core_share = 0.80;
    double drone_capable = 200.0;
    double occupancy = 1.0;

    void validate() const;
};

struct DelayResult {
    double vehicles_traditional = 0.0;  // P1
    double vehicles_drone = 0.0;        // P2
    double delay_traditional_h = 0.0;   // D_T
    double delay_drone_h = 0.0;         // D_D
    double hours_saved = 0.0;
    double value = 0.0;
};
DelayResult delay_time_value(const InspectionConstants& c, double vtts);

struct InspectionCosts {
    double snooper_only = 0.0;    // C1
    double drone_share = 0.0;     // C2
    double snooper_share = 0.0;   // C3
    double savings = 0.0;         // C1 - (C2 + C3)
};
InspectionCosts inspection_cost_savings(const InspectionConstants& c);

/// Blended cost of `count` inspections split between core and off-hours rates.
/// The core-hour count is rounded down to a whole inspection.
double blended_inspection_cost(double count, double core_share, double core_rate,
                               double offhours_rate);

// Cost breakdown of a single inspection, as tabulated.
struct LaborLine {
    std::string role;
    int employees = 0;
    double hours = 0.0;
    double hourly_rate = 0.0;
    double fringe = 0.0;
    double printed_total = 0.0;
};

struct EquipmentLine {
    std::string item;
    double rate = 0.0;
};

struct CostRateTable {
    std::string method;
    std::vector<LaborLine> labor;
    double payroll = 0.0;  // A, as tabulated
    std::vector<EquipmentLine> equipment;
    double offhours_rate = 0.0;
};

const CostRateTable& snooper_cost_table();
const CostRateTable& drone_cost_table();

double equipment_total(const CostRateTable& t);
/// A + B.
double core_cost_rate(const CostRateTable& t);
/// employees * hours * rate * (1 + fringe), for auditing the tabulated line totals.
double labor_line_cost(const LaborLine& l);

}  // namespace aamcba::bf
