#pragma once

#include "gqed3/amplitude.hpp"
#include "gqed3/kinematics.hpp"
#include "gqed3/params.hpp"

#include <string_view>

namespace gqed3 {

/// The differential-cross-section formulas exposed by the library. Each
/// one transcribes a printed expression verbatim; no cross-formula
/// normalization fixes are applied, disagreements between them are data
/// for the report layer.
enum class FormulaId {
    canonical,      ///< invariant dsigma/dt from traces and phase space
    high_energy,    ///< ultrarelativistic dsigma/dt
    leading_mP,     ///< first cutoff correction to the massless dsigma/dt
    cm,             ///< center-of-mass dsigma/dtheta
    cm_small_angle, ///< small-angle expansion of the CM form
    nonrel,         ///< nonrelativistic CM form
};

std::string_view formula_name(FormulaId id);
std::string_view formula_unit(FormulaId id); ///< "MeV^-3" or "MeV^-1 rad^-1"
FormulaId parse_formula(std::string_view name); ///< throws ValidationError

/// One evaluated differential-cross-section point with its provenance.
struct XsecSample {
    FormulaId formula = FormulaId::canonical;
    double energy = 0.0; ///< per-beam CM energy (MeV)
    double theta  = 0.0; ///< scattering angle (rad)
    double m_P    = 0.0; ///< cutoff mass (MeV)
    double alpha  = 0.0;
    double value  = 0.0; ///< in formula_unit(formula)
};

enum class RegimeTag { nonrelativistic, intermediate, podolsky_window, beyond_cutoff };
std::string_view regime_name(RegimeTag tag);

/// Lorentz-invariant phase-space factor 2m^2/(sqrt(-s) sqrt(tu)) gated to
/// zero outside t > 0, u > 0. Throws DomainError for s >= 0.
double phase_space_integral(const MandelstamSet& ms);

/// Canonical invariant cross section dsigma/dt (MeV^-3): classical-radius
/// prefactor, flux factor, invariant bracket from the requested trace
/// source, and the phase-space factor. ms.m must equal params.m_e.
double dsigma_dt(const MandelstamSet& ms, const PhysicalParams& params,
                 TraceSource source);

/// Ultrarelativistic dsigma/dt with massless numerators, as printed.
double dsigma_dt_high_energy(const MandelstamSet& ms, const PhysicalParams& params);

/// Massless dsigma/dt expanded to the first cutoff correction; requires
/// t, u < m_P^2.
double dsigma_dt_leading_mp(const MandelstamSet& ms, const PhysicalParams& params);

/// Center-of-mass dsigma/dtheta (MeV^-1 rad^-1):
///   alpha^2/(32 E^3) (7 + cos 2theta)^2 / sin^4 theta
///   - alpha^2/m_P^2 * 3/(8E) * (7 - 6 cos 2theta + cos^2 2theta) / sin^4 theta.
double dsigma_dtheta_cm(double energy, double theta, const PhysicalParams& params);

/// Relative deviation of the cutoff-corrected CM cross section from its
/// massless-photon part. The coupling cancels in the ratio, so the
/// evaluation is exactly alpha-independent.
double delta_deviation(double energy, double theta, const PhysicalParams& params);

/// Printed small-angle deviation -(s/m_P^2) (3/4) theta^2.
double delta_small_angle(double s, double theta, double m_P);

/// Small-angle CM cross section alpha^2/(8 E^3 theta^4) [1 - (1/2 + E^2/m_P^2) theta^2].
double dsigma_dtheta_small_angle(double energy, double theta, const PhysicalParams& params);

/// Nonrelativistic CM cross section in terms of the momentum magnitude,
/// transcribed verbatim (its angular bracket goes negative near
/// theta = pi/2, a documented anomaly of the printed coefficients).
double dsigma_dtheta_nonrel(double p_mag, double theta, const PhysicalParams& params);

/// |dt/dtheta| = 2 p^2 sin theta for t = 4 p^2 sin^2(theta/2).
double jacobian_dt_dtheta(double p2, double theta);

/// Bounded-angle integral of any formula (dsigma/dt formulas are folded
/// with the CM Jacobian), adaptive to 1e-8 relative. The Coulomb
/// endpoints are never integrable: requires 0 < theta_min < theta_max < pi.
double integrate_dsigma(FormulaId id, double energy, double theta_min,
                        double theta_max, const PhysicalParams& params);

/// Energy-scale bucket of a kinematic point relative to the electron
/// mass and the cutoff.
RegimeTag classify_regime(const MandelstamSet& ms, const PhysicalParams& params);

} // namespace gqed3
