#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aamcba::bf {

using Matrix = std::vector<std::vector<double>>;

/// Drone-station network cases for AED delivery (BF-7). Index 0 is the no-drone baseline.
struct MedicalConstants {
    double ohca_per_100k = 55.0;
    std::vector<double> stations{0, 50, 200, 500, 750, 1015};                   // DSN
    std::vector<double> survival{0.123, 0.129, 0.133, 0.138, 0.140, 0.144};     // p_s
    std::vector<double> cost_per_survivor{0, 14752, 31905, 55792, 73160, 76495};  // CAS

    std::size_t cases() const { return stations.empty() ? 0 : stations.size() - 1; }
    void validate() const;
};

double ohca_count(double pop, double per_100k = 55.0);

struct SurvivorMatrices {
    Matrix survivors;  // N_S: years x (cases + 1)
    Matrix increase;   // dN_S: years x cases
};
SurvivorMatrices survivor_matrices(std::span<const double> ohca, const MedicalConstants& c);

/// TVSL[i][k] = (VSL_i - CAS[k+1]) * dN_S[i][k].
Matrix life_saving_value(const Matrix& increase, std::span<const double> vsl,
                         std::span<const double> cas);

}  // namespace aamcba::bf
