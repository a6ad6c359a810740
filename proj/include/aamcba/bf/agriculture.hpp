#pragma once

#include <array>
#include <string>
#include <string_view>

namespace aamcba::bf {

enum class Crop { Soybean, Corn, Wheat };
inline constexpr std::array<Crop, 3> kCrops{Crop::Soybean, Crop::Corn, Crop::Wheat};

std::string_view crop_name(Crop c);
Crop parse_crop(std::string_view name);

struct CropYear {
    double area = 0.0;   // harvested acres
    double yield = 0.0;  // bushels/acre
    double price = 0.0;  // $/bushel
};

struct CropInputs {
    CropYear soybean;
    CropYear corn;
    CropYear wheat;

    const CropYear& get(Crop c) const;
};

struct CropConstants {
    double uplift_soy_corn = 0.025;
    double uplift_wheat = 0.033;
    double saving_corn = 11.58;
    double saving_soy = 2.28;
    double saving_wheat = 2.57;
    double adoption = 13893.0 / 77805.0;  // F_ag
    /// Value only the uplift Y*u*A rather than the boosted total (Y + Y*u)*A.
    bool incremental = false;
    /// Each crop's saving uses its own area; false applies the soybean area to corn.
    bool matching_area = true;

    double uplift(Crop c) const;
    double saving(Crop c) const;
    void validate() const;
};

double adoption_factor(double farms_large, double farms_total);

struct CropProduction {
    double production = 0.0;  // IP, bushels
    double value = 0.0;
};
CropProduction crop_production_value(Crop crop, const CropInputs& in, const CropConstants& c);
/// Sum over the three crops (VIP^T).
double total_production_value(const CropInputs& in, const CropConstants& c);

double crop_cost_saving(Crop crop, const CropInputs& in, const CropConstants& c);
double crop_cost_savings(const CropInputs& in, const CropConstants& c);

struct LivestockConstants {
    double monitoring_hours = 26.0;   // ST1
    double feeding_hours = 104.0;     // ST2
    double herd_size = 980.0;         // l_c
    double farm_wage = 13.93;         // FL, $/h

    void validate() const;
};

/// E = (ST1 + ST2) * FL / l_c, $ per animal-year.
double labor_saving_per_animal(const LivestockConstants& c);
double livestock_savings(double animals, const LivestockConstants& c, double adoption);

}  // namespace aamcba::bf
