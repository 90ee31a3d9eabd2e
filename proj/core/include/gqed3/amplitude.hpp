#pragma once

#include "gqed3/clifford.hpp"
#include "gqed3/kinematics.hpp"
#include "gqed3/params.hpp"

namespace gqed3 {

enum class TraceSource { closed_form, brute_force };

/// Spin-summed squared-amplitude traces (MeV^4): direct and exchange
/// channel squares plus the interference term. t_channel(s,t,u) equals
/// u_channel(s,u,t); interference is symmetric under t <-> u.
struct TraceTriple {
    double t_channel    = 0.0; ///< squared direct-channel trace pair
    double u_channel    = 0.0; ///< squared exchange-channel trace pair
    double interference = 0.0; ///< cross-channel single trace, both conjugate orderings
    TraceSource source  = TraceSource::brute_force;
};

/// Closed-form polynomials in the invariants, transcribed verbatim.
double closed_t_channel(double s, double t, double u, double m);
double closed_u_channel(double s, double t, double u, double m);
double closed_interference(double s, double t, double u, double m);

TraceTriple trace_triple_closed(const MandelstamSet& ms);

/// Spin-sum traces evaluated by explicit 2x2 matrix products, the
/// mechanical oracle for the closed forms. The interference entry sums
/// both conjugate cross contractions, so all three outputs are real; the
/// imaginary residue must stay below 1e-8 relative or a NumericError is
/// raised. Validates on-shell and conservation constraints like
/// mandelstam().
TraceTriple trace_triple_bruteforce(const LorentzVec3& p, const LorentzVec3& q,
                                    const LorentzVec3& p_out, const LorentzVec3& q_out,
                                    double mass);

/// Massive-regulator propagator factor 1/(k2 (1 + k2/m_P^2)), equal to
/// the partial-fraction split 1/k2 - 1/(k2 + m_P^2). Throws PoleError at
/// k2 = 0 and k2 = -m_P^2. m_P = +inf gives exactly 1/k2.
double podolsky_factor(double k2, double m_P);

/// The three-term invariant bracket of the differential cross section:
///   A/(t f_t)^2-style direct term + exchange term + interference term,
/// with f_x = 1 + x/m_P^2 and A, B, C from the requested source.
/// Brute-force traces are reconstructed from CM momenta equivalent to ms.
/// Throws PoleError when t or u vanishes.
double msq_bracket(const MandelstamSet& ms, const PhysicalParams& params,
                   TraceSource source);

} // namespace gqed3
