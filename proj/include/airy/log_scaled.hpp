#pragma once

#include <cmath>
#include <limits>

namespace airy {

// Sign + natural-log-magnitude representation of a real number.
// Keeps factorially growing factors (gamma functions of large argument)
// out of the binary64 exponent range until final assembly.
struct LogScaled {
    int sign = 0;          // -1, 0, +1
    double log_mag = 0.0;  // ln|value|; meaningless when sign == 0

    static LogScaled zero() { return {0, 0.0}; }

    static LogScaled from_log(double lm, int s = +1) {
        return s == 0 ? zero() : LogScaled{s < 0 ? -1 : +1, lm};
    }

    static LogScaled from_value(double v) {
        if (v == 0.0) return zero();
        return {v < 0.0 ? -1 : +1, std::log(std::fabs(v))};
    }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_mag);
    }

    bool is_zero() const { return sign == 0; }

    friend LogScaled operator*(LogScaled a, LogScaled b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.log_mag + b.log_mag};
    }

    friend LogScaled operator/(LogScaled a, LogScaled b) {
        // division by zero is the caller's bug; propagate an infinity
        if (a.sign == 0) return zero();
        return {a.sign * b.sign, a.log_mag - b.log_mag};
    }

    LogScaled& operator*=(LogScaled b) { *this = *this * b; return *this; }

    // log-sum-exp with signs
    friend LogScaled operator+(LogScaled a, LogScaled b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        if (a.log_mag < b.log_mag) std::swap(a, b);
        const double d = b.log_mag - a.log_mag; // <= 0
        if (a.sign == b.sign)
            return {a.sign, a.log_mag + std::log1p(std::exp(d))};
        const double w = -std::expm1(d); // 1 - e^d in (0,1]
        if (w == 0.0) return zero();
        return {a.sign, a.log_mag + std::log(w)};
    }

    friend LogScaled operator-(LogScaled a, LogScaled b) {
        b.sign = -b.sign;
        return a + b;
    }

    LogScaled abs() const { return {sign == 0 ? 0 : 1, log_mag}; }
};

// |a/b - 1| for two nonzero LogScaled values, computed in log space.
inline double relative_difference(LogScaled a, LogScaled b) {
    if (a.sign == 0 && b.sign == 0) return 0.0;
    if (a.sign == 0 || b.sign == 0) return std::numeric_limits<double>::infinity();
    const double ratio = (a.sign * b.sign) * std::exp(a.log_mag - b.log_mag);
    return std::fabs(ratio - 1.0);
}

} // namespace airy
