#include "airy/coefficients.hpp"
#include "airy/errors.hpp"
#include "airy/gamma_kernel.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

namespace airy {

namespace {

constexpr long kDigitBudgetBits = 4'000'000;
constexpr int kExactDepthCap = 200;

// ---------------------------------------------------------------------------
// Closed-form triple sums (the Bell-polynomial collapse), in ratio form
//   ratio(m) = delta_{m0} + sum_{k,i,l} (-1)^{k-i-l} 2^{i-k} (x)_k h_{m-i}(l/2)
//                           / (3^i i! (m-i)! l! (k-i-l)!)
// with x = +1/3 for the a-family, x = -1/3 for the b-family, and
// h_p(y) = (4/3)^p (y)_p (falling factorial).
//
// Exact path: accumulate cpp_int numerators over the common denominator
// (m!)^2 3^{2m}. With P_k = prod_{j<k}(3x - 3j)  ((x)_k = P_k / 3^k) and
// H_{p,l} = prod_{j<p}(l - 2j)      (h_p(l/2) = 2^p H_{p,l} / 3^p),
// each term contributes the integer
//   (-1)^{k-i-l} 6^{m-k} P_k C(m,i) (m!/(k-i)!) C(k-i,l) H_{m-i,l}.
// h_p(l/2) vanishes for even l < 2p, which removes every even l except the
// single i=m (p=0, l=0) term, so only odd l are visited.
// ---------------------------------------------------------------------------

struct ExactTripleTables {
    int depth = -1;
    std::vector<BigInt> fact;                 // j!
    std::vector<std::vector<BigInt>> binom;   // C(n,k)
    std::vector<BigInt> six_pow, three_pow;
    std::vector<BigInt> pa, pb;               // P_k for x = +1/3 and -1/3
    std::vector<std::vector<BigInt>> H;       // H[p][l], odd l only

    void ensure(int d) {
        if (d <= depth) return;
        fact.assign(d + 1, 1);
        for (int j = 1; j <= d; ++j) fact[j] = fact[j - 1] * j;
        binom.assign(d + 1, {});
        for (int n = 0; n <= d; ++n) {
            binom[n].assign(n + 1, 1);
            for (int k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
        }
        six_pow.assign(d + 1, 1);
        three_pow.assign(2 * d + 1, 1);
        for (int j = 1; j <= d; ++j) six_pow[j] = six_pow[j - 1] * 6;
        for (int j = 1; j <= 2 * d; ++j) three_pow[j] = three_pow[j - 1] * 3;
        pa.assign(d + 1, 1);
        pb.assign(d + 1, 1);
        for (int k = 1; k <= d; ++k) {
            pa[k] = pa[k - 1] * (1 - 3 * (k - 1));
            pb[k] = pb[k - 1] * (-1 - 3 * (k - 1));
        }
        H.assign(d + 1, {});
        H[0].assign(d + 1, 1);
        for (int p = 1; p <= d; ++p) {
            H[p].assign(d + 1, 0);
            for (int l = 1; l <= d; l += 2)
                H[p][l] = H[p - 1][l] * (l - 2 * (p - 1));
        }
        depth = d;
    }
};

ExactTripleTables& exact_tables() {
    static ExactTripleTables t;
    return t;
}

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

Rational closed_form_ratio_exact(int m, bool plus_family) {
    if (m == 0) return Rational(1);
    auto& T = exact_tables();
    T.ensure(m);
    const auto& P = plus_family ? T.pa : T.pb;
    std::vector<BigInt> m_over_j(m + 1); // m!/j!
    m_over_j[m] = 1;
    for (int j = m - 1; j >= 0; --j) m_over_j[j] = m_over_j[j + 1] * (j + 1);
    BigInt acc = 0;
    for (int k = 1; k <= m; ++k) {
        for (int i = 0; i <= k; ++i) {
            const int p = m - i;
            const int lmax = k - i;
            if (p == 0) { // i == m forces k == m and l == 0
                acc += P[k] * T.fact[m];
                continue;
            }
            BigInt lsum = 0;
            for (int l = 1; l <= lmax; l += 2) {
                BigInt t = T.binom[lmax][l] * T.H[p][l];
                if (((k - i - l) & 1) != 0) t = -t;
                lsum += t;
            }
            if (lsum == 0) continue;
            acc += T.six_pow[m - k] * P[k] * T.binom[m][i] * m_over_j[k - i] * lsum;
        }
    }
    Rational r(acc, T.fact[m] * T.fact[m] * T.three_pow[2 * m]);
    check_digit_budget(r, kDigitBudgetBits, "coefficient closed form");
    return r;
}

// Same sum in 512-bit floating point for depths where exact arithmetic is
// too slow. The alternating terms cancel by roughly 1.5^m (~10^88 at m=500),
// well inside the 154 decimal digits carried.
WideFloat closed_form_ratio_wide(int m, bool plus_family) {
    if (m == 0) return WideFloat(1);
    const WideFloat x = WideFloat(plus_family ? 1 : -1) / 3;
    std::vector<WideFloat> inv_fact(m + 1);
    inv_fact[0] = 1;
    for (int j = 1; j <= m; ++j) inv_fact[j] = inv_fact[j - 1] / j;
    std::vector<WideFloat> poch(m + 1);
    poch[0] = 1;
    for (int k = 1; k <= m; ++k) poch[k] = poch[k - 1] * (x - (k - 1));
    std::vector<WideFloat> inv3(m + 1);
    inv3[0] = 1;
    for (int j = 1; j <= m; ++j) inv3[j] = inv3[j - 1] / 3;
    const WideFloat fourthirds = WideFloat(4) / 3;
    std::vector<std::vector<WideFloat>> h(m + 1);
    h[0].assign(m + 1, WideFloat(1));
    for (int p = 1; p <= m; ++p) {
        h[p].assign(m + 1, WideFloat(0));
        for (int l = 1; l <= m; l += 2)
            h[p][l] = h[p - 1][l] * fourthirds * (WideFloat(l) / 2 - (p - 1));
    }
    WideFloat acc = 0;
    for (int k = 1; k <= m; ++k) {
        for (int i = 0; i <= k; ++i) {
            const int p = m - i;
            const int lmax = k - i;
            if (p == 0) {
                acc += poch[k] * inv3[i] * inv_fact[i]; // l = 0, sign +1
                continue;
            }
            WideFloat lsum = 0;
            for (int l = 1; l <= lmax; l += 2) {
                WideFloat t = h[p][l] * inv_fact[l] * inv_fact[lmax - l];
                if (((k - i - l) & 1) != 0) t = -t;
                lsum += t;
            }
            if (lsum == 0) continue;
            acc += lsum * poch[k] * ldexp(WideFloat(1), i - k) * inv3[i] *
                   inv_fact[i] * inv_fact[p];
        }
    }
    return acc;
}

// Coefficients u_k of u(v), where 3 + 2v + sqrt(3)*eta(v) = 6(1 + u(v)), v = t^3.
template <typename S>
std::vector<S> u_series(int M) {
    std::vector<S> u(M + 1, S(0));
    S binom_half(1); // binom(1/2,k) built incrementally
    S pw(1);
    const S fourthirds = S(4) / 3;
    for (int k = 1; k <= M; ++k) {
        binom_half *= (S(1) / 2 - (k - 1));
        binom_half /= k;
        pw *= fourthirds;
        S num = 3 * binom_half * pw;
        if (k == 1) num += 2;
        u[k] = num / 6;
    }
    return u;
}

// y = (1+u)^c via y'(1+u) = c u' y, order by order.
template <typename S>
std::vector<S> binomial_composition(int M, const S& c, const std::vector<S>& u) {
    std::vector<S> y(M + 1, S(0));
    y[0] = 1;
    for (int m = 0; m < M; ++m) {
        S s(0);
        for (int k = 0; k <= m; ++k) s += S(k + 1) * u[k + 1] * y[m - k];
        s *= c;
        for (int k = 1; k <= m; ++k) s -= u[k] * S(m + 1 - k) * y[m + 1 - k];
        y[m + 1] = s / (m + 1);
    }
    return y;
}

LogScaled wide_to_log(const WideFloat& w, double unit_log) {
    if (w == 0) return LogScaled::zero();
    return LogScaled::from_log(static_cast<double>(log(abs(w))) + unit_log, w < 0 ? -1 : +1);
}

} // namespace

Rational chi_derivative_ratio(int n) {
    if (n < 1) throw domain_error("chi_derivative: need n >= 1");
    if (n % 3 != 0) return Rational(0);
    std::lock_guard<std::mutex> lock(table_mutex());
    return closed_form_ratio_exact(n / 3, true);
}

Rational chi_derivative(int n) {
    Rational r = chi_derivative_ratio(n);
    if (r == 0) return r;
    BigInt f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return r * Rational(f);
}

Rational b_coefficient_ratio(int m) {
    if (m < 0) throw domain_error("b_coefficient_ratio: need m >= 0");
    std::lock_guard<std::mutex> lock(table_mutex());
    return closed_form_ratio_exact(m, false);
}

CoefficientTable build_ab_table(int m_max, int exact_depth) {
    if (m_max < 0) throw domain_error("build_ab_table: need m_max >= 0");
    if (exact_depth < 0) exact_depth = std::min(m_max, kExactDepthCap);
    if (exact_depth > kExactDepthCap)
        throw domain_error("build_ab_table: exact_depth exceeds the 200 cap");
    exact_depth = std::min(exact_depth, m_max);

    CoefficientTable tab;
    tab.m_max = m_max;
    tab.exact_depth = exact_depth;
    tab.a_ratio.resize(m_max + 1);
    tab.b_ratio.resize(m_max + 1);
    tab.a_float.resize(m_max + 1);
    tab.b_float.resize(m_max + 1);
    tab.a_exact.resize(exact_depth + 1);
    tab.b_exact.resize(exact_depth + 1);

    const double unit_a = std::log(6.0) / 3.0; // ln 6^{1/3}
    const double unit_b = -unit_a;

    {
        std::lock_guard<std::mutex> lock(table_mutex());
        BigInt fact3m = 1; // (3m)!
        for (int m = 0; m <= exact_depth; ++m) {
            if (m > 0)
                for (int j = 3 * m - 2; j <= 3 * m; ++j) fact3m *= j;
            const Rational ra = closed_form_ratio_exact(m, true);
            const Rational rb = closed_form_ratio_exact(m, false);
            tab.a_exact[m] = ra * Rational(fact3m);
            tab.b_exact[m] = rb * Rational(fact3m);
            tab.a_ratio[m] = rational_to_log(ra) * LogScaled::from_log(unit_a);
            tab.b_ratio[m] = rational_to_log(rb) * LogScaled::from_log(unit_b);
            tab.a_float[m] = to_double(tab.a_exact[m]) * std::exp(unit_a);
            tab.b_float[m] = to_double(tab.b_exact[m]) * std::exp(unit_b);
        }
    }

    if (m_max > exact_depth) {
        const auto u = u_series<WideFloat>(m_max);
        const auto ya = binomial_composition<WideFloat>(m_max, WideFloat(1) / 3, u);
        const auto yb = binomial_composition<WideFloat>(m_max, WideFloat(-1) / 3, u);
        WideFloat fact3m = 1;
        for (int j = 2; j <= 3 * exact_depth; ++j) fact3m *= j;
        for (int m = exact_depth + 1; m <= m_max; ++m) {
            for (int j = 3 * m - 2; j <= 3 * m; ++j) fact3m *= j;
            tab.a_ratio[m] = wide_to_log(ya[m], unit_a);
            tab.b_ratio[m] = wide_to_log(yb[m], unit_b);
            tab.a_float[m] = static_cast<double>(ya[m] * fact3m) * std::exp(unit_a);
            tab.b_float[m] = static_cast<double>(yb[m] * fact3m) * std::exp(unit_b);
        }
    }
    return tab;
}

// Sparse dual-route check used by the test suite: the wide-float closed form
// at depths beyond the exact cap.
double deep_ratio_closed_form(int m, bool plus_family) {
    const WideFloat w = closed_form_ratio_wide(m, plus_family);
    return static_cast<double>(w);
}

std::shared_ptr<const CoefficientTable> shared_ab_table(int m_max) {
    static std::mutex mu;
    static std::shared_ptr<const CoefficientTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache || cache->m_max < m_max)
        cache = std::make_shared<const CoefficientTable>(
            build_ab_table(m_max, std::min(m_max, 128)));
    return cache;
}

std::complex<double> middle_coeff(int n, std::complex<double> w) {
    if (n < 1) throw domain_error("middle_coeff: need n >= 1");
    if (std::fabs(std::abs(w) - 1.0) > 1e-8)
        throw domain_error("middle_coeff: need |w| = 1");
    const double lm = ln_gamma(1.5 * n - 1.0) - ln_gamma(0.5 * n) - ln_gamma(n + 1.0) -
                      (n - 1) * std::log(3.0);
    const double theta_w = std::arg(w);
    const double phase = n * std::numbers::pi / 2 + (-0.75 * n + 0.5) * theta_w;
    return std::polar(std::exp(lm), phase);
}

RatComplex middle_coeff_exact(int n) {
    if (n < 1) throw domain_error("middle_coeff_exact: need n >= 1");
    // Gamma(3n/2-1)/Gamma(n/2) = prod_{j=0}^{n-2} (n/2 + j)
    Rational q(1);
    for (int j = 0; j <= n - 2; ++j) q *= (Rational(n, 2) + j);
    BigInt fact = 1, p3 = 1;
    for (int j = 2; j <= n; ++j) fact *= j;
    for (int j = 1; j <= n - 1; ++j) p3 *= 3;
    q /= Rational(fact * p3);
    switch (n % 4) {
        case 0: return {q, Rational(0)};
        case 1: return {Rational(0), q};
        case 2: return {-q, Rational(0)};
        default: return {Rational(0), -q};
    }
}

LogScaled phi_even_derivative(int n) {
    if (n < 0) throw domain_error("phi_even_derivative: need n >= 0");
    const double lm = ln_gamma(3.0 * n + 0.5) - ln_gamma(n + 0.5) - 2.0 * n * std::log(3.0);
    return LogScaled::from_log(lm, (n % 2 == 0) ? +1 : -1);
}

OracleCoefficients oracle_invert(int n_max) {
    if (n_max < 1) throw domain_error("oracle_invert: need n_max >= 1");
    OracleCoefficients out;

    // (i) Inversion of the saddle change of variable at w=1 by undetermined
    // coefficients: with alpha = -1 + beta, beta = sum_{n>=1} c_n s^n, the
    // defining cubic collapses to beta^2 - beta^3/3 = -s^2. The order-n
    // relation determines c_{n-1} from lower coefficients.
    std::vector<RatComplex> c(n_max + 1, RatComplex{});
    c[1] = {Rational(0), Rational(1)}; // +i fixes the orientation of s
    const RatComplex inv_2c1{Rational(0), Rational(-1, 2)};
    for (int n = 2; n <= n_max + 1; ++n) {
        if (n - 1 > n_max) break;
        RatComplex sq{};
        for (int a = 2; a <= n - 2; ++a) sq += c[a] * c[n - a];
        RatComplex cube{};
        for (int a = 1; a <= n - 2; ++a) {
            RatComplex s2{};
            for (int b = 1; b <= n - a - 1; ++b) s2 += c[b] * c[n - a - b];
            cube += s2 * c[a];
        }
        RatComplex rhs{};
        if (n == 2) rhs.re = Rational(-1);
        rhs = rhs - sq + RatComplex{cube.re / 3, cube.im / 3};
        c[n - 1] = rhs * inv_2c1;
        check_digit_budget(c[n - 1].re, kDigitBudgetBits, "oracle_invert");
        check_digit_budget(c[n - 1].im, kDigitBudgetBits, "oracle_invert");
    }
    out.inversion = std::move(c);

    // (ii) chi and 1/chi by power-series composition.
    const int M = n_max;
    const auto u = u_series<Rational>(M);
    out.chi_ratio = binomial_composition<Rational>(M, Rational(1, 3), u);
    out.invchi_ratio = binomial_composition<Rational>(M, Rational(-1, 3), u);
    for (const auto& q : out.chi_ratio) check_digit_budget(q, kDigitBudgetBits, "oracle_invert");
    return out;
}

} // namespace airy
