#pragma once

#include <string>

namespace aamcba::forecast {

inline constexpr int kMaxAr = 5;
inline constexpr int kMaxDiff = 2;
inline constexpr int kMaxMa = 5;

struct ArimaOrder {
    int p = 0;
    int d = 0;
    int q = 0;

    /// Throws std::invalid_argument when an order is negative or above its cap.
    void validate() const;
    std::string str() const;

    friend bool operator==(const ArimaOrder&, const ArimaOrder&) = default;
};

}  // namespace aamcba::forecast
