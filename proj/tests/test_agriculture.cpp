#include <doctest.h>

#include <random>
#include <stdexcept>

#include "aamcba/bf/agriculture.hpp"

using namespace aamcba::bf;

namespace {

CropInputs uniform_inputs(double area, double yield, double price) {
    CropYear y{area, yield, price};
    return {y, y, y};
}

}  // namespace

TEST_CASE("adoption factor") {
    CHECK(adoption_factor(13893, 77805) == doctest::Approx(0.17856178908810488).epsilon(1e-14));
    CHECK(CropConstants{}.adoption == doctest::Approx(0.1786).epsilon(5e-4 / 0.1786));
    CHECK_THROWS_AS(adoption_factor(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(adoption_factor(5, 4), std::invalid_argument);
}

TEST_CASE("crop production value, frozen example") {
    CropConstants c;
    c.adoption = 0.18;
    const auto in = uniform_inputs(5e6, 50, 10);
    const auto p = crop_production_value(Crop::Corn, in, c);
    CHECK(p.production == doctest::Approx(256250000.0).epsilon(1e-12));
    CHECK(p.value == doctest::Approx(461250000.0).epsilon(1e-12));
}

TEST_CASE("property: incremental value equals total minus baseline") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> a(1e5, 1e8), y(10, 200), pr(1, 20);
    for (int i = 0; i < 200; ++i) {
        CropInputs in{{a(rng), y(rng), pr(rng)}, {a(rng), y(rng), pr(rng)}, {a(rng), y(rng), pr(rng)}};
        CropConstants full;
        CropConstants inc;
        inc.incremental = true;
        for (Crop crop : kCrops) {
            const auto& cy = in.get(crop);
            const double baseline = cy.yield * cy.area * cy.price * full.adoption;
            CHECK(crop_production_value(crop, in, inc).value ==
                  doctest::Approx(crop_production_value(crop, in, full).value - baseline).epsilon(1e-9));
        }
    }
}

TEST_CASE("crop cost savings, frozen example") {
    CropConstants c;
    c.adoption = 0.18;
    CropInputs in = uniform_inputs(3.3e6, 50, 10);
    CHECK(crop_cost_saving(Crop::Corn, in, c) == doctest::Approx(6878520.0).epsilon(1e-12));

    in.soybean.area = 1e6;
    c.matching_area = false;
    CHECK(crop_cost_saving(Crop::Corn, in, c) == doctest::Approx(1e6 * 11.58 * 0.18));
    CHECK(crop_cost_savings(in, c) ==
          doctest::Approx(1e6 * 11.58 * 0.18 + 1e6 * 2.28 * 0.18 + 3.3e6 * 2.57 * 0.18));
}

TEST_CASE("livestock savings, frozen example") {
    const LivestockConstants c;
    CHECK(labor_saving_per_animal(c) == doctest::Approx(1.8478571428571429).epsilon(1e-14));
    CHECK(livestock_savings(1e6, c, 0.18) == doctest::Approx(332614.28571428574).epsilon(1e-12));
}

TEST_CASE("crop names") {
    for (Crop c : kCrops) CHECK(parse_crop(crop_name(c)) == c);
    CHECK_THROWS_AS(parse_crop("rice"), std::invalid_argument);
    CropConstants bad;
    bad.adoption = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("agriculture edge cases") {
    CropConstants inc;
    inc.incremental = true;
    inc.uplift_soy_corn = 0.0;
    inc.uplift_wheat = 0.0;
    const auto in = uniform_inputs(5e6, 50, 10);
    CHECK(total_production_value(in, inc) == 0.0);

    const CropConstants c;
    CHECK(total_production_value(uniform_inputs(0, 50, 10), c) == 0.0);
    CHECK(crop_cost_savings(uniform_inputs(0, 50, 10), c) == 0.0);
    CHECK(livestock_savings(0.0, LivestockConstants{}, 0.18) == 0.0);

    CropConstants low;
    low.adoption = 0.18;
    CropConstants full;
    full.adoption = 1.0;
    CHECK(crop_cost_savings(in, full) == doctest::Approx(crop_cost_savings(in, low) / 0.18));
    CHECK(total_production_value(in, full) == doctest::Approx(total_production_value(in, low) / 0.18));
}
