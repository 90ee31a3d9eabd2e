#pragma once

#include "gqed3/errors.hpp"
#include "gqed3/kinematics.hpp"

#include <array>
#include <complex>
#include <span>

namespace gqed3 {

using Complex = std::complex<double>;

/// Dense complex 2x2 matrix, row-major.
struct Mat2 {
    std::array<Complex, 4> a{};

    Complex& operator()(int r, int c) { return a[2 * r + c]; }
    const Complex& operator()(int r, int c) const { return a[2 * r + c]; }

    static Mat2 identity() { return {{Complex(1), Complex(0), Complex(0), Complex(1)}}; }
    static Mat2 zero() { return {}; }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    r.a[0] = x.a[0] * y.a[0] + x.a[1] * y.a[2];
    r.a[1] = x.a[0] * y.a[1] + x.a[1] * y.a[3];
    r.a[2] = x.a[2] * y.a[0] + x.a[3] * y.a[2];
    r.a[3] = x.a[2] * y.a[1] + x.a[3] * y.a[3];
    return r;
}
inline Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2], x.a[3] + y.a[3]}};
}
inline Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {{x.a[0] - y.a[0], x.a[1] - y.a[1], x.a[2] - y.a[2], x.a[3] - y.a[3]}};
}
inline Mat2 operator*(Complex c, const Mat2& x) {
    return {{c * x.a[0], c * x.a[1], c * x.a[2], c * x.a[3]}};
}

inline Complex trace(const Mat2& x) { return x.a[0] + x.a[3]; }
inline Complex det(const Mat2& x) { return x.a[0] * x.a[3] - x.a[1] * x.a[2]; }

inline double max_abs(const Mat2& x) {
    double m = 0.0;
    for (const auto& c : x.a) m = std::max(m, std::abs(c));
    return m;
}

/// The irreducible 2x2 gamma-matrix representation of the 2+1-D Dirac
/// algebra: gamma^0 = i sigma^3, gamma^1 = sigma^1, gamma^2 = sigma^2,
/// metric diag(-1,+1,+1). The product of two distinct matrices closes on
/// the third:
///     gamma^mu gamma^nu = g^{mu nu} 1 + epsilon_sign eps^{mu nu lam} gamma_lam
/// with the symbol normalized to eps^{012} = +1. epsilon_sign is measured
/// from the representation at construction, not assumed.
struct GammaRep {
    std::array<Mat2, 3> gamma;             ///< gamma^mu, upper index
    std::array<double, 3> metric{-1.0, 1.0, 1.0};
    double epsilon_sign = 0.0;             ///< measured orientation
};

/// The representation above with its measured epsilon_sign. Construction
/// verifies both algebra identities entrywise to 1e-14.
const GammaRep& gamma_rep();

/// Contraction gamma.p of the gamma triple with an energy-momentum
/// vector; the metric's time sign is carried by gamma^0 = i sigma^3, so
/// slash(p)^2 = minkowski_dot(p,p) * 1.
Mat2 slash(const GammaRep& rep, const LorentzVec3& p);

/// Trace of the ordered matrix product, by direct 2x2 multiplication.
/// Throws ValidationError for an empty sequence.
Complex trace_product(std::span<const Mat2> factors);

enum class Branch { particle, antiparticle };

/// Spin-sum matrix of one on-shell momentum: (i gamma.p - m)/(2E) for
/// particles, -(i gamma.p- - m)/(2E) for antiparticles with p- the
/// energy-reflected vector. Rank 1; annihilated by (i gamma.p +- m).
struct SpinProjector {
    Mat2 matrix;
    double energy = 0.0;
    double mass   = 0.0;
    Branch branch = Branch::particle;
};

SpinProjector projector(const GammaRep& rep, const LorentzVec3& p, double mass,
                        Branch branch);

using Spinor = std::array<Complex, 2>;

/// Positive-energy solution of (i gamma.p + m) u = 0, normalized so that
/// the outer product u ubar reproduces projector(p, m, particle) with
/// ubar = u^dag (i gamma^0). Phase fixed by making the first nonzero
/// component real positive. Throws DomainError for massless input.
Spinor spinor_u(const GammaRep& rep, const LorentzVec3& p, double mass);

/// Dirac adjoint row vector ubar = u^dag (i gamma^0).
Spinor spinor_ubar(const GammaRep& rep, const Spinor& u);

/// Outer product u ubar as a matrix, for checking the spin-sum contract.
Mat2 spinor_outer(const GammaRep& rep, const Spinor& u);

/// One factor of a symbolic gamma string: either a slashed vector or a
/// scalar multiple of the identity (a mass insertion).
struct GammaFactor {
    enum class Kind { slashed, scalar };
    Kind kind = Kind::slashed;
    LorentzVec3 vec{};
    Complex coeff{};

    static GammaFactor slashed(const LorentzVec3& v) { return {Kind::slashed, v, {}}; }
    static GammaFactor scalar(Complex c) { return {Kind::scalar, {}, c}; }
};

/// Independent symbolic trace oracle. Reduces the string recursively with
/// only Tr gamma = 0, Tr 1 = 2 and the two-factor closure of GammaRep;
/// never touches a 2x2 matrix. Strings longer than 12 factors throw
/// CapacityError.
Complex trace_reduce(const GammaRep& rep, std::span<const GammaFactor> factors);

} // namespace gqed3
