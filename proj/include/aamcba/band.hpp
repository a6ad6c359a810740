#pragma once

#include <algorithm>

namespace aamcba {

/// A quantity evaluated on the lower, mean and upper channel of a 95% band.
struct BandValue {
    double lower = 0.0;
    double mean = 0.0;
    double upper = 0.0;

    static BandValue point(double v) { return {v, v, v}; }

    /// Orders the three channel results so that lower <= mean <= upper.
    /// The mean channel keeps its value whenever it already lies in range.
    static BandValue from_channels(double a, double m, double b) {
        const double lo = std::min({a, m, b});
        const double hi = std::max({a, m, b});
        return {lo, m, hi};
    }

    bool ordered() const { return lower <= mean && mean <= upper; }

    BandValue& operator+=(const BandValue& o) {
        lower += o.lower;
        mean += o.mean;
        upper += o.upper;
        return *this;
    }
    BandValue& operator-=(double c) {
        lower -= c;
        mean -= c;
        upper -= c;
        return *this;
    }
    friend bool operator==(const BandValue&, const BandValue&) = default;
};

/// Channel selector used when a formula is evaluated once per band channel.
enum class Channel { Lower, Mean, Upper };

inline constexpr Channel kChannels[] = {Channel::Lower, Channel::Mean, Channel::Upper};

}  // namespace aamcba
