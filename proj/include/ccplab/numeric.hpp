#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ccplab {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Tolerance for unit-norm and unit-sum checks on states and distributions.
inline constexpr double kNormTol = 1e-12;

// Floor modulus: result is always in [0, m).
inline long long mod_floor(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

// Clamp a computed probability to [0, 1]. Excursions beyond floating-point
// noise indicate a logic error and are rejected rather than masked.
inline double clamp_probability(double p) {
    if (p < 0.0) {
        if (p < -1e-12) {
            throw std::logic_error("probability " + std::to_string(p) +
                                   " below tolerance window");
        }
        return 0.0;
    }
    if (p > 1.0) {
        if (p > 1.0 + 1e-9) {
            throw std::logic_error("probability " + std::to_string(p) +
                                   " above tolerance window");
        }
        return 1.0;
    }
    return p;
}

}  // namespace ccplab
