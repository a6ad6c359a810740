#include <doctest.h>

#include <random>
#include <stdexcept>

#include "aamcba/bf/mobility.hpp"

using namespace aamcba::bf;

TEST_CASE("passenger time value, frozen example") {
    const auto r = passenger_time_value(120000, 50, 17.25);
    CHECK(r.hours_saved == doctest::Approx(100000.0));
    CHECK(r.value == doctest::Approx(1725000.0).epsilon(1e-12));
}

TEST_CASE("VTTS scales with household income") {
    CHECK(vtts_scaled(46603.32, 46603.32, 17.25) == doctest::Approx(17.25));
    CHECK(vtts_scaled(2 * 46603.32, 46603.32, 17.25) == doctest::Approx(34.5));
    CHECK_THROWS_AS(vtts_scaled(1.0, 0.0, 17.25), std::invalid_argument);
}

TEST_CASE("regional VMT and safety, frozen example") {
    const double vmt = vmt_smco(3.2e12, 3.35e8, 4e6);
    CHECK(vmt == doctest::Approx(38208955223.8806).epsilon(1e-12));
    MobilityConstants c;
    const auto s = safety_cost_reduction(vmt, 120000, c, 12.5e6);
    CHECK(s.fatalities == doctest::Approx(114.6268656716418).epsilon(1e-12));
    CHECK(s.reduction == doctest::Approx(0.018).epsilon(1e-12));
    CHECK(s.value == doctest::Approx(225000.0).epsilon(1e-12));
    CHECK(s.passenger_trips == doctest::Approx(30000.0));

    c.use_trip_miles = true;
    CHECK(safety_cost_reduction(vmt, 120000, c, 12.5e6).reduction == doctest::Approx(0.0045).epsilon(1e-12));
}

TEST_CASE("property: BF1 and BF2 are linear in demand") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(1.0, 1e7), k(0.1, 10.0);
    MobilityConstants c;
    const double vmt = vmt_smco(3.2e12, 3.35e8, 4e6);
    for (int i = 0; i < 200; ++i) {
        const double d = u(rng), a = k(rng);
        CHECK(passenger_time_value(a * d, 50, 17.25).value ==
              doctest::Approx(a * passenger_time_value(d, 50, 17.25).value).epsilon(1e-12));
        CHECK(safety_cost_reduction(vmt, a * d, c, 1e7).value ==
              doctest::Approx(a * safety_cost_reduction(vmt, d, c, 1e7).value).epsilon(1e-12));
    }
}

TEST_CASE("equal fatality rates give no safety benefit") {
    MobilityConstants c;
    c.air_fatality_rate = c.ground_fatality_rate;
    CHECK(safety_cost_reduction(1e10, 1e5, c, 1e7).value == 0.0);
}

TEST_CASE("mobility errors") {
    MobilityConstants c;
    CHECK_THROWS_AS(safety_cost_reduction(0.0, 1.0, c, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(vmt_smco(1.0, 0.0, 1.0), std::invalid_argument);
    c.air_fatality_rate = 0.9;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("mobility edge cases") {
    CHECK(vtts_scaled(0.0, 46603.32, 17.25) == 0.0);
    CHECK(passenger_time_value(0, 50, 17.25).value == 0.0);
    CHECK(passenger_time_value(60, 60, 10).value == doctest::Approx(600.0));
    CHECK(vmt_smco(3.2e12, 3.35e8, 0.0) == 0.0);
    CHECK(vmt_smco(3.2e12, 3.35e8, 3.35e8) == doctest::Approx(3.2e12));
}
