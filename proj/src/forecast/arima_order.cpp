#include "aamcba/forecast/arima_order.hpp"

#include <stdexcept>

namespace aamcba::forecast {

void ArimaOrder::validate() const {
    if (p < 0 || d < 0 || q < 0) throw std::invalid_argument("ARIMA orders must be non-negative");
    if (p > kMaxAr || d > kMaxDiff || q > kMaxMa)
        throw std::invalid_argument("ARIMA order " + str() + " exceeds the (5,2,5) cap");
}

std::string ArimaOrder::str() const {
    return "(" + std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(q) + ")";
}

}  // namespace aamcba::forecast
