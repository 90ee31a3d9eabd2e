#pragma once

#include "gqed3/errors.hpp"

namespace gqed3 {

/// hbar*c in MeV*fm; the single unit-conversion constant of the library.
inline constexpr double kHbarC = 197.3269804;

/// Energy-momentum vector in 2+1 dimensions, components in MeV.
/// Metric signature (-,+,+): dot(p,p) = -m^2 on shell.
struct LorentzVec3 {
    double e  = 0.0; ///< time component (MeV)
    double px = 0.0; ///< spatial-1 component (MeV)
    double py = 0.0; ///< spatial-2 component (MeV)
};

inline LorentzVec3 operator+(const LorentzVec3& a, const LorentzVec3& b) {
    return {a.e + b.e, a.px + b.px, a.py + b.py};
}
inline LorentzVec3 operator-(const LorentzVec3& a, const LorentzVec3& b) {
    return {a.e - b.e, a.px - b.px, a.py - b.py};
}

/// Invariant scalar product, -a.e*b.e + a.px*b.px + a.py*b.py (MeV^2).
inline double minkowski_dot(const LorentzVec3& a, const LorentzVec3& b) {
    return -a.e * b.e + a.px * b.px + a.py * b.py;
}

/// Positive-energy on-shell vector with the given spatial momentum.
/// Throws DomainError for negative mass.
LorentzVec3 on_shell_momentum(double mass, double px, double py);

/// Mandelstam invariants (MeV^2) of e-e- -> e-e- together with the
/// electron mass that produced them. Physical scattering has
/// s <= -4m^2, t >= 0, u >= 0 and s + t + u = -4m^2.
struct MandelstamSet {
    double s = 0.0;
    double t = 0.0;
    double u = 0.0;
    double m = 0.0; ///< electron mass (MeV)
};

/// Center-of-mass configuration: per-beam energy E, scattering angle
/// theta and electron mass. Cross-section formulas require the open
/// interval 0 < theta < pi; pure kinematics also admits the endpoints.
struct CmState {
    double energy = 0.0; ///< per-beam energy E (MeV)
    double theta  = 0.0; ///< scattering angle (rad)
    double mass   = 0.0; ///< electron mass (MeV)
};

/// The four center-of-mass momenta of an elastic collision.
struct CmMomenta {
    LorentzVec3 p;     ///< incoming beam 1
    LorentzVec3 q;     ///< incoming beam 2
    LorentzVec3 p_out; ///< outgoing, deflected by theta
    LorentzVec3 q_out; ///< outgoing, back-to-back partner
};

/// p=(E,|p|,0), q=(E,-|p|,0), p'=(E,|p|cos,|p|sin), q'=(E,-|p|cos,-|p|sin)
/// with |p| = sqrt(E^2 - m^2). Throws DomainError for E < m or theta
/// outside [0, pi].
CmMomenta cm_kinematics(const CmState& state);

/// Invariants from explicit momenta. Validates that every vector is
/// on shell with mass m (1e-8 relative), that p+q = p'+q' (1e-8), and
/// that the difference-squared and dot-product routes to each invariant
/// agree to 1e-10 relative. Throws ValidationError naming the violated
/// constraint.
MandelstamSet mandelstam(const LorentzVec3& p, const LorentzVec3& q,
                         const LorentzVec3& p_out, const LorentzVec3& q_out,
                         double mass);

/// Closed-form CM invariants: s = -4E^2, t = 4p^2 sin^2(theta/2),
/// u = 4p^2 cos^2(theta/2).
MandelstamSet mandelstam_cm(const CmState& state);

/// Invariant relative velocity sqrt((p.q)^2 - m^4) / (E_p E_q).
/// Throws DomainError below threshold ((p.q)^2 < m^4) and
/// ValidationError for off-shell inputs.
double relative_velocity(const LorentzVec3& p, const LorentzVec3& q, double mass);

/// Cutoff mass equivalent to a minimal length: hbar*c / a (a in fm,
/// result in MeV). Throws DomainError for a <= 0.
double podolsky_mass_from_length(double a_fm);

} // namespace gqed3
