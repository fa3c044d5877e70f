#pragma once

#include "airy/log_scaled.hpp"

namespace airy {

// Iteration policy shared by every routine in this kernel.
struct GammaKernelConfig {
    double tol = 1e-16;
    int max_iter = 10000;
};

inline constexpr GammaKernelConfig kGammaConfig{};

// ln Gamma(x) for x > 0.
double ln_gamma(double x);

// Regularized lower incomplete gamma P(a,x) = gamma(a,x)/Gamma(a), a > 0, x >= 0.
// Lower series for x < a+1, complement of the upper continued fraction otherwise.
// May underflow to 0 in binary64; the log form below does not.
double regularized_lower_P(double a, double x);

// Upper incomplete gamma Gamma(a,x) for x > 0 and any finite real a
// (including the negative non-integer family a = +-1/3 - n), via the
// Legendre continued fraction in even-contracted form. Always positive.
LogScaled upper_incomplete(double a, double x);

// Lower incomplete gamma gamma(a,x) as LogScaled, a > 0, x >= 0.
LogScaled lower_incomplete_log(double a, double x);

} // namespace airy
