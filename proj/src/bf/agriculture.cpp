#include "aamcba/bf/agriculture.hpp"

#include <stdexcept>
#include <string>

namespace aamcba::bf {

std::string_view crop_name(Crop c) {
    switch (c) {
        case Crop::Soybean: return "soybean";
        case Crop::Corn: return "corn";
        case Crop::Wheat: return "wheat";
    }
    return "unknown";
}

Crop parse_crop(std::string_view name) {
    for (Crop c : kCrops)
        if (crop_name(c) == name) return c;
    throw std::invalid_argument("unknown crop '" + std::string(name) + "'");
}

const CropYear& CropInputs::get(Crop c) const {
    switch (c) {
        case Crop::Soybean: return soybean;
        case Crop::Corn: return corn;
        case Crop::Wheat: return wheat;
    }
    throw std::invalid_argument("unknown crop");
}

double CropConstants::uplift(Crop c) const {
    return c == Crop::Wheat ? uplift_wheat : uplift_soy_corn;
}

double CropConstants::saving(Crop c) const {
    switch (c) {
        case Crop::Soybean: return saving_soy;
        case Crop::Corn: return saving_corn;
        case Crop::Wheat: return saving_wheat;
    }
    throw std::invalid_argument("unknown crop");
}

void CropConstants::validate() const {
    if (adoption < 0.0 || adoption > 1.0) throw std::invalid_argument("F_ag must lie in [0, 1]");
    for (double u : {uplift_soy_corn, uplift_wheat})
        if (u < 0.0 || u > 0.1) throw std::invalid_argument("yield uplift must lie in [0, 0.1]");
    for (double d : {saving_corn, saving_soy, saving_wheat})
        if (d < 0.0) throw std::invalid_argument("per-acre saving must be non-negative");
}

double adoption_factor(double farms_large, double farms_total) {
    if (!(farms_total > 0.0)) throw std::invalid_argument("adoption_factor: farm total must be positive");
    if (farms_large < 0.0 || farms_large > farms_total)
        throw std::invalid_argument("adoption_factor: large-farm count must lie in [0, total]");
    return farms_large / farms_total;
}

CropProduction crop_production_value(Crop crop, const CropInputs& in, const CropConstants& c) {
    const CropYear& y = in.get(crop);
    const double boost = y.yield * c.uplift(crop);
    CropProduction out;
    out.production = (c.incremental ? boost : y.yield + boost) * y.area;
    out.value = out.production * y.price * c.adoption;
    return out;
}

double total_production_value(const CropInputs& in, const CropConstants& c) {
    double total = 0.0;
    for (Crop crop : kCrops) total += crop_production_value(crop, in, c).value;
    return total;
}

double crop_cost_saving(Crop crop, const CropInputs& in, const CropConstants& c) {
    const double area = (!c.matching_area && crop == Crop::Corn) ? in.soybean.area
                                                                 : in.get(crop).area;
    return area * c.saving(crop) * c.adoption;
}

double crop_cost_savings(const CropInputs& in, const CropConstants& c) {
    double total = 0.0;
    for (Crop crop : kCrops) total += crop_cost_saving(crop, in, c);
    return total;
}

void LivestockConstants::validate() const {
    if (!(herd_size > 0.0)) throw std::invalid_argument("l_c must be positive");
    if (monitoring_hours < 0.0 || feeding_hours < 0.0 || farm_wage < 0.0)
        throw std::invalid_argument("livestock hours and wage must be non-negative");
}

double labor_saving_per_animal(const LivestockConstants& c) {
    if (!(c.herd_size > 0.0)) throw std::invalid_argument("labor_saving_per_animal: l_c must be positive");
    return (c.monitoring_hours + c.feeding_hours) * c.farm_wage / c.herd_size;
}

double livestock_savings(double animals, const LivestockConstants& c, double adoption) {
    return labor_saving_per_animal(c) * animals * adoption;
}

}  // namespace aamcba::bf
