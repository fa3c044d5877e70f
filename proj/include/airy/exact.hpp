#pragma once

#include "airy/errors.hpp"
#include "airy/log_scaled.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace airy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 512-bit binary significand; enough headroom for the alternating
// coefficient sums, which cancel by roughly 1.5^m (~88 decimal digits at m=500).
using WideFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<512, boost::multiprecision::backends::digit_base_2>>;

// Exact complex rationals for the series-inversion oracle.
struct RatComplex {
    Rational re{0}, im{0};

    friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    RatComplex& operator+=(const RatComplex& b) { *this = *this + b; return *this; }
    friend bool operator==(const RatComplex& a, const RatComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Falling factorial (x)_p = x(x-1)...(x-p+1); the convention used throughout.
template <typename T>
T falling_factorial(T x, int p) {
    T r(1);
    for (int j = 0; j < p; ++j) r *= (x - j);
    return r;
}

inline double to_double(const Rational& q) {
    return static_cast<double>(static_cast<WideFloat>(q));
}

inline LogScaled rational_to_log(const Rational& q) {
    if (q == 0) return LogScaled::zero();
    const WideFloat w = static_cast<WideFloat>(q);
    const int sign = w < 0 ? -1 : +1;
    return LogScaled::from_log(static_cast<double>(log(abs(w))), sign);
}

// Guard for runaway exact arithmetic.
inline void check_digit_budget(const Rational& q, long max_bits, const char* where) {
    const long bits = static_cast<long>(msb(abs(numerator(q)) + 1)) +
                      static_cast<long>(msb(abs(denominator(q)) + 1));
    if (bits > max_bits)
        throw resource_error(std::string(where) + ": exact arithmetic digit budget exceeded");
}

} // namespace airy
