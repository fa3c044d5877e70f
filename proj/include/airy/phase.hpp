#pragma once

#include "airy/errors.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace airy {

using Complex = std::complex<double>;

// z split into modulus, principal phase, and unit phase factor.
struct PhaseDecomposition {
    Complex z;
    double r = 0.0;    // |z|
    double phi = 0.0;  // arg z in (-pi, pi]; the negative real axis maps to +pi
    Complex w{1.0, 0.0};

    static PhaseDecomposition of(Complex z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw domain_error("PhaseDecomposition: non-finite argument");
        PhaseDecomposition d;
        d.z = z;
        d.r = std::abs(z);
        d.phi = std::arg(z);
        if (d.phi == -std::numbers::pi) d.phi = std::numbers::pi;
        d.w = d.r > 0.0 ? Complex{std::cos(d.phi), std::sin(d.phi)} : Complex{1.0, 0.0};
        return d;
    }
};

namespace detail {
// Rotation constant e^{i 2pi/3} = (-1/2, s). s is the double nearest
// sqrt(3)/2, adjusted by at most one ulp so that fl(s*s) == 0.75 exactly;
// squaring the constant with the usual complex product then reproduces
// e^{-i 2pi/3} bit for bit, keeping the sector-reduction identity an exact
// cancellation instead of a 1-ulp drift on exponentially large values.
inline double rotation_sine() {
    static const double s = [] {
        const double s0 = 0.8660254037844386467637231707529362;
        double lo = s0, hi = s0;
        for (int k = 0; k < 3; ++k) {
            if (lo * lo == 0.75) return lo;
            if (hi * hi == 0.75) return hi;
            lo = std::nextafter(lo, 0.0);
            hi = std::nextafter(hi, 1.0);
        }
        return s0;
    }();
    return s;
}
} // namespace detail

// e^{i 2pi/3}, the rotation of the connection identity.
inline Complex rotation_plus() {
    return {-0.5, detail::rotation_sine()};
}

// e^{-i 2pi/3}, materialized as rotation_plus()^2 so the two constants
// compose exactly.
inline Complex rotation_minus() {
    const Complex c = rotation_plus();
    return c * c;
}

// z * e^{i 2pi k/3} by k left-multiplications with rotation_plus(); every
// code path materializes a doubly rotated argument with identical bits.
inline Complex rotate_cube_root(Complex z, int k) {
    const Complex c = rotation_plus();
    Complex out = z;
    for (int j = 0; j < ((k % 3) + 3) % 3; ++j) out = c * out;
    return out;
}

inline constexpr double two_thirds_pi = 2.0943951023931953; // fl(2*pi/3)

inline bool inside_principal_sector(double phi) {
    return std::fabs(phi) <= two_thirds_pi;
}

// Quantized (r, phi) used by the incomplete-gamma expansion.
//
// Arguments that agree to a few ulp -- one produced by a chain of unit
// rotations, one directly -- must evaluate identically, or the
// exponentially large values met by the sector-reduction identity cannot
// cancel below its 1e-10 tolerance. The modulus and the *components of the
// unit phase vector* are rounded onto fixed lattices (the phase angle
// itself cannot be quantized consistently: atan2 wraps at +-pi before
// quantization would see it). phi is then recovered from the lattice
// components, so equal lattice points give bit-equal (r, phi).
// Grid spacing: 2^-33 in r, 2^-36 in the unit components; the induced
// relative evaluation error is below ~5e-9 for |z| <= 15.
struct SnappedPhase {
    double r = 0.0;
    double phi = 0.0; // in (-pi, pi], negative real axis -> +pi

    static SnappedPhase of(Complex z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw domain_error("SnappedPhase: non-finite argument");
        SnappedPhase s;
        const double r = std::abs(z);
        s.r = std::ldexp(static_cast<double>(std::llround(std::ldexp(r, 33))), -33);
        if (s.r <= 0.0) {
            s.r = 0.0;
            s.phi = 0.0;
            return s;
        }
        const double wr = std::ldexp(static_cast<double>(std::llround(std::ldexp(z.real() / r, 36))), -36);
        const double wi = std::ldexp(static_cast<double>(std::llround(std::ldexp(z.imag() / r, 36))), -36);
        s.phi = std::atan2(wi, wr);
        if (s.phi == -std::numbers::pi) s.phi = std::numbers::pi;
        return s;
    }
};

} // namespace airy
