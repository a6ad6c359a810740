#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "aamcba/bf/inspection.hpp"

using namespace aamcba::bf;

namespace {

// Adds one inspection at a time; the first floor(share * count) are core hours.
double brute_force_cost(int count, double share, double core, double off) {
    const int n_core = static_cast<int>(std::floor(share * count + 1e-9));
    double total = 0.0;
    for (int k = 0; k < count; ++k) total += k < n_core ? core : off;
    return total;
}

}  // namespace

TEST_CASE("cost tables reproduce the per-inspection rates") {
    const auto& s = snooper_cost_table();
    const auto& d = drone_cost_table();
    CHECK(s.payroll == 2018.0);
    CHECK(equipment_total(s) == 1125.0);
    CHECK(core_cost_rate(s) == 3143.0);
    CHECK(s.offhours_rate == 4152.0);
    CHECK(core_cost_rate(d) == 522.0);
    CHECK(d.offhours_rate == 735.0);
    const InspectionConstants c;
    CHECK(c.snooper_core == core_cost_rate(s));
    CHECK(c.drone_core == core_cost_rate(d));
}

TEST_CASE("tabulated labor lines do not follow from hours times rate") {
    const auto& s = snooper_cost_table();
    REQUIRE(s.labor.size() >= 2);
    const auto& inspector = s.labor[0];
    CHECK(inspector.printed_total == 854.0);
    CHECK(labor_line_cost(inspector) != doctest::Approx(inspector.printed_total).epsilon(0.01));
}

TEST_CASE("bridge inspection costs, frozen example") {
    const InspectionConstants c;
    const auto r = inspection_cost_savings(c);
    CHECK(r.snooper_only == 1337920.0);
    CHECK(r.drone_share == 112920.0);
    CHECK(r.snooper_share == 668960.0);
    CHECK(r.savings == 556040.0);
}

TEST_CASE("property: blended cost matches the per-inspection loop") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> n(0, 2000);
    std::uniform_int_distribution<int> pct(0, 10);
    for (int i = 0; i < 200; ++i) {
        const int count = n(rng);
        const double share = pct(rng) / 10.0;
        CHECK(blended_inspection_cost(count, share, 3143, 4152) == brute_force_cost(count, share, 3143, 4152));
    }
}

TEST_CASE("delay time value, frozen example") {
    const InspectionConstants c;
    const auto d = delay_time_value(c, 17.25);
    CHECK(d.value == doctest::Approx(5520000.0).epsilon(1e-12));
    CHECK(d.hours_saved == doctest::Approx(320000.0).epsilon(1e-12));
    CHECK(d.delay_traditional_h > d.delay_drone_h);
}

TEST_CASE("inspection validation") {
    InspectionConstants c;
    c.reduced_closure_h = 9.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.drone_capable = 500;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("inspection edge cases") {
    const InspectionConstants base;
    const auto d = delay_time_value(base, 17.25);
    CHECK(d.vehicles_traditional == 3840000.0);
    CHECK(d.vehicles_drone == 1920000.0);

    InspectionConstants same = base;
    same.reduced_closure_h = same.traditional_closure_h;
    CHECK(delay_time_value(same, 17.25).value == 0.0);

    InspectionConstants none = base;
    none.drone_capable = 0.0;
    const auto r = inspection_cost_savings(none);
    CHECK(r.drone_share == 0.0);
    CHECK(r.snooper_share == r.snooper_only);
    CHECK(r.savings == 0.0);

    InspectionConstants equal = base;
    equal.drone_core = equal.snooper_core;
    equal.drone_offhours = equal.snooper_offhours;
    CHECK(inspection_cost_savings(equal).savings == 0.0);
}
