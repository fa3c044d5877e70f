#pragma once

#include "airy/exact.hpp"
#include "airy/log_scaled.hpp"

#include <complex>
#include <memory>
#include <vector>

namespace airy {

// Expansion coefficients of the outer-segment series.
//
// Conventions:
//   a_exact[m] : chi^{(3m)}(0)            in units of 6^{1/3}   (rational part)
//   b_exact[m] : b_{3m}                   in units of 6^{-1/3}
//   a_ratio[m] : a_{3m}/(3m)! * 6^{1/3}   (LogScaled, unit folded in)
//   b_ratio[m] : b_{3m}/(3m)! * 6^{-1/3}
//   a_float[m] : binary64 view of a_{3m} including the unit (inf once (3m)! overflows)
// Exact views are retained through exact_depth; ratio views cover all m <= m_max.
struct CoefficientTable {
    int m_max = 0;
    int exact_depth = 0;
    std::vector<Rational> a_exact, b_exact;
    std::vector<LogScaled> a_ratio, b_ratio;
    std::vector<double> a_float, b_float;
};

// chi^{(n)}(0)/n! in units of 6^{1/3} via the closed-form triple sum;
// exactly zero unless n is a multiple of 3.
Rational chi_derivative_ratio(int n);

// chi^{(n)}(0) in units of 6^{1/3}; domain error for n <= 0.
Rational chi_derivative(int n);

// b_{3m}/(3m)! in units of 6^{-1/3} via the closed-form triple sum
// (includes the delta_{m0} term).
Rational b_coefficient_ratio(int m);

// Build the table. Entries with m <= exact_depth come from the exact
// closed forms; deeper ratio views are computed in 512-bit floating
// arithmetic with closed-form spot checks. exact_depth = -1 picks the
// default min(m_max, 200).
CoefficientTable build_ab_table(int m_max, int exact_depth = -1);

// The closed-form triple sum evaluated in 512-bit floating arithmetic,
// for dual-route spot checks beyond the exact depth.
double deep_ratio_closed_form(int m, bool plus_family);

// Process-wide immutable table of at least the requested depth.
std::shared_ptr<const CoefficientTable> shared_ab_table(int m_max);

// Coefficient of s^n in the saddle-point inversion series,
// (i^n/n!) Gamma(3n/2-1)/Gamma(n/2) w^{-3n/4+1/2} 3^{-(n-1)}, principal branch.
std::complex<double> middle_coeff(int n, std::complex<double> w);

// Same at w=1 in exact arithmetic: i^n * rational.
RatComplex middle_coeff_exact(int n);

// Phi^{(2n)}(0) = i^{2n+1} Gamma(3n+1/2)/Gamma(n+1/2) 3^{-2n}.
// The value is purely imaginary; the returned LogScaled is its imaginary
// part, sign (-1)^n, finite far beyond where Gamma(3n+1/2) overflows.
LogScaled phi_even_derivative(int n);

// Brute-force exact oracles, independent of the closed forms above.
struct OracleCoefficients {
    // inversion[n]: coefficient of s^n in the inversion of the saddle-point
    // change of variable at w=1, from undetermined coefficients (n >= 1).
    std::vector<RatComplex> inversion;
    // chi_ratio[m]   = [t^{3m}] chi(t)  / 6^{1/3}  by power-series composition
    // invchi_ratio[m]= [t^{3m}] 1/chi(t)* 6^{1/3}  (i.e. in units of 6^{-1/3})
    std::vector<Rational> chi_ratio, invchi_ratio;
};

OracleCoefficients oracle_invert(int n_max);

} // namespace airy
