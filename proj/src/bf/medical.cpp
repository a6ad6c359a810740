#include "aamcba/bf/medical.hpp"

#include <stdexcept>

namespace aamcba::bf {

void MedicalConstants::validate() const {
    const std::size_t n = stations.size();
    if (n < 2 || survival.size() != n || cost_per_survivor.size() != n)
        throw std::invalid_argument("DSN, p_s and CAS must have equal length >= 2");
    if (stations[0] != 0.0) throw std::invalid_argument("DSN must start at 0");
    for (std::size_t j = 1; j < n; ++j) {
        if (!(stations[j] > stations[j - 1])) throw std::invalid_argument("DSN must be strictly increasing");
        if (!(survival[j] > survival[j - 1])) throw std::invalid_argument("p_s must be strictly increasing");
        if (cost_per_survivor[j] < cost_per_survivor[j - 1])
            throw std::invalid_argument("CAS must be non-decreasing");
    }
    if (ohca_per_100k < 0.0) throw std::invalid_argument("OHCA rate must be non-negative");
}

double ohca_count(double pop, double per_100k) {
    if (pop < 0.0) throw std::invalid_argument("ohca_count: negative population");
    return per_100k / 100000.0 * pop;
}

SurvivorMatrices survivor_matrices(std::span<const double> ohca, const MedicalConstants& c) {
    const std::size_t cols = c.survival.size();
    if (cols < 2) throw std::invalid_argument("survivor_matrices: need at least two cases");
    SurvivorMatrices out;
    out.survivors.reserve(ohca.size());
    out.increase.reserve(ohca.size());
    for (double u : ohca) {
        std::vector<double> row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = u * c.survival[j];
        std::vector<double> inc(cols - 1);
        for (std::size_t k = 0; k + 1 < cols; ++k) inc[k] = row[k + 1] - row[0];
        out.survivors.push_back(std::move(row));
        out.increase.push_back(std::move(inc));
    }
    return out;
}

Matrix life_saving_value(const Matrix& increase, std::span<const double> vsl,
                         std::span<const double> cas) {
    if (increase.size() != vsl.size())
        throw std::invalid_argument("life_saving_value: VSL length does not match survivor rows");
    Matrix out;
    out.reserve(increase.size());
    for (std::size_t i = 0; i < increase.size(); ++i) {
        if (increase[i].size() + 1 != cas.size())
            throw std::invalid_argument("life_saving_value: CAS length does not match survivor columns");
        std::vector<double> row(increase[i].size());
        for (std::size_t k = 0; k < row.size(); ++k)
            row[k] = (vsl[i] - cas[k + 1]) * increase[i][k];
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace aamcba::bf
