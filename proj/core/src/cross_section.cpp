#include "gqed3/cross_section.hpp"

#include "gqed3/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gqed3 {

namespace {

void require_open_angle(double theta, const char* who) {
    if (!(theta > 0.0 && theta < M_PI))
        throw PoleError(std::string(who) +
                        ": theta at the Coulomb-divergent endpoints 0 or pi");
}

void require_transfer_domain(const MandelstamSet& ms, const char* who) {
    if (!(ms.s < 0.0))
        throw DomainError(std::string(who) + ": s must be negative");
    if (!(ms.t > 0.0 && ms.u > 0.0))
        throw PoleError(std::string(who) + ": t and u must be strictly positive");
}

} // namespace

std::string_view formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::canonical: return "canonical";
        case FormulaId::high_energy: return "high_energy";
        case FormulaId::leading_mP: return "leading_mP";
        case FormulaId::cm: return "cm";
        case FormulaId::cm_small_angle: return "cm_small_angle";
        case FormulaId::nonrel: return "nonrel";
    }
    return "?";
}

std::string_view formula_unit(FormulaId id) {
    switch (id) {
        case FormulaId::canonical:
        case FormulaId::high_energy:
        case FormulaId::leading_mP: return "MeV^-3";
        default: return "MeV^-1 rad^-1";
    }
}

FormulaId parse_formula(std::string_view name) {
    for (FormulaId id : {FormulaId::canonical, FormulaId::high_energy,
                         FormulaId::leading_mP, FormulaId::cm,
                         FormulaId::cm_small_angle, FormulaId::nonrel})
        if (name == formula_name(id)) return id;
    throw ValidationError("unknown formula id: " + std::string(name));
}

std::string_view regime_name(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::nonrelativistic: return "nonrelativistic";
        case RegimeTag::intermediate: return "intermediate";
        case RegimeTag::podolsky_window: return "podolsky_window";
        case RegimeTag::beyond_cutoff: return "beyond_cutoff";
    }
    return "?";
}

double phase_space_integral(const MandelstamSet& ms) {
    if (!(ms.s < 0.0))
        throw DomainError("phase_space_integral: s must be negative");
    if (!(ms.t > 0.0 && ms.u > 0.0)) return 0.0;
    return 2.0 * ms.m * ms.m / (std::sqrt(-ms.s) * std::sqrt(ms.t * ms.u));
}

double dsigma_dt(const MandelstamSet& ms, const PhysicalParams& params,
                 TraceSource source) {
    params.validate();
    const double m = ms.m;
    if (std::abs(m - params.m_e) > 1e-12 * std::max(m, params.m_e))
        throw ValidationError("dsigma_dt: MandelstamSet mass differs from params.m_e");
    if (!(ms.s < -4.0 * m * m))
        throw DomainError("dsigma_dt: s must lie below the threshold -4m^2");
    if (!(ms.t > 0.0 && ms.u > 0.0))
        throw PoleError("dsigma_dt: t and u must be strictly positive");

    const double bracket = msq_bracket(ms, params, source);
    const double phase   = phase_space_integral(ms);
    const double pq      = 0.5 * (ms.s + 2.0 * m * m);
    const double flux    = std::sqrt(pq * pq - m * m * m * m);
    const double r0      = params.alpha / m;
    return r0 * r0 / (32.0 * flux) * bracket * phase;
}

double dsigma_dt_high_energy(const MandelstamSet& ms, const PhysicalParams& params) {
    params.validate();
    require_transfer_domain(ms, "dsigma_dt_high_energy");
    const double s = ms.s, t = ms.t, u = ms.u;
    const double mp2 = params.m_P * params.m_P;
    const double ft = 1.0 + t / mp2;
    const double fu = 1.0 + u / mp2;
    const double bracket = (s * s + u * u - 0.5 * t * t) / (t * t * ft * ft) +
                           (s * s + t * t - 0.5 * u * u) / (u * u * fu * fu) +
                           (5.0 * s * s - u * u - t * t) / (u * t * ft * fu);
    const double root = 2.0 * std::sqrt(-s);
    return params.alpha * params.alpha / (root * root * root) / std::sqrt(t * u) * bracket;
}

double dsigma_dt_leading_mp(const MandelstamSet& ms, const PhysicalParams& params) {
    params.validate();
    require_transfer_domain(ms, "dsigma_dt_leading_mp");
    const double mp2 = params.m_P * params.m_P;
    if (!(ms.t < mp2 && ms.u < mp2))
        throw DomainError("dsigma_dt_leading_mp: expansion requires t, u < m_P^2");
    const double s = ms.s, t = ms.t, u = ms.u;
    const double bracket = (s * s + u * u - 0.5 * t * t) / (t * t) +
                           (s * s + t * t - 0.5 * u * u) / (u * u) +
                           (5.0 * s * s - u * u - t * t) / (u * t) -
                           3.0 / mp2 * ((3.0 * s * s + u * u - t * t) / t +
                                        (3.0 * s * s + t * t - u * u) / u);
    const double root = 2.0 * std::sqrt(-s);
    return params.alpha * params.alpha / (root * root * root) / std::sqrt(t * u) * bracket;
}

double dsigma_dtheta_cm(double energy, double theta, const PhysicalParams& params) {
    params.validate();
    if (!(energy > 0.0))
        throw DomainError("dsigma_dtheta_cm: energy must be positive");
    require_open_angle(theta, "dsigma_dtheta_cm");
    const double a2 = params.alpha * params.alpha;
    const double c  = std::cos(2.0 * theta);
    const double s4 = std::pow(std::sin(theta), 4);
    const double massless = a2 / (32.0 * energy * energy * energy) * (7.0 + c) * (7.0 + c) / s4;
    const double correction = a2 / (params.m_P * params.m_P) * 3.0 / (8.0 * energy) *
                              (7.0 - 6.0 * c + c * c) / s4;
    return massless - correction;
}

double delta_deviation(double energy, double theta, const PhysicalParams& params) {
    params.validate();
    // the coupling cancels in the ratio; evaluate both numerator and
    // denominator at unit coupling so the result is exactly alpha-free
    PhysicalParams unit = params;
    unit.alpha = 1.0;
    PhysicalParams massless_photon = unit;
    massless_photon.m_P = std::numeric_limits<double>::infinity();
    const double reference = dsigma_dtheta_cm(energy, theta, massless_photon);
    if (reference == 0.0)
        throw DomainError("delta_deviation: massless-photon cross section vanishes");
    const double full = dsigma_dtheta_cm(energy, theta, unit);
    return full / reference - 1.0;
}

double delta_small_angle(double s, double theta, double m_P) {
    if (!(m_P > 0.0))
        throw DomainError("delta_small_angle: cutoff mass must be positive");
    return -(s / (m_P * m_P)) * 0.75 * theta * theta;
}

double dsigma_dtheta_small_angle(double energy, double theta,
                                 const PhysicalParams& params) {
    params.validate();
    if (!(theta > 0.0))
        throw DomainError("dsigma_dtheta_small_angle: theta must be positive");
    if (!(energy > 0.0))
        throw DomainError("dsigma_dtheta_small_angle: energy must be positive");
    const double a2 = params.alpha * params.alpha;
    const double e3 = energy * energy * energy;
    const double t2 = theta * theta;
    return a2 / (8.0 * e3 * t2 * t2) *
           (1.0 - (0.5 + energy * energy / (params.m_P * params.m_P)) * t2);
}

double dsigma_dtheta_nonrel(double p_mag, double theta, const PhysicalParams& params) {
    params.validate();
    if (!(p_mag > 0.0))
        throw DomainError("dsigma_dtheta_nonrel: momentum must be positive");
    require_open_angle(theta, "dsigma_dtheta_nonrel");
    const double m  = params.m_e;
    const double r0 = params.alpha / m;
    const double c2 = std::pow(std::cos(0.5 * theta), 2);
    const double s2 = std::pow(std::sin(0.5 * theta), 2);
    const double coulomb = 4.0 / (c2 * c2) + 4.0 / (s2 * s2) - 11.0 / (c2 * s2);
    const double yukawa  = 3.0 * p_mag * p_mag / (params.m_P * params.m_P) *
                           (1.0 / c2 + 1.0 / s2);
    const double p4 = p_mag * p_mag * p_mag * p_mag;
    return r0 * r0 / 16.0 * m * m * m / p4 * (coulomb + yukawa);
}

double jacobian_dt_dtheta(double p2, double theta) {
    return 2.0 * p2 * std::sin(theta);
}

double integrate_dsigma(FormulaId id, double energy, double theta_min,
                        double theta_max, const PhysicalParams& params) {
    params.validate();
    if (!(theta_min > 0.0 && theta_min <= theta_max && theta_max < M_PI))
        throw ValidationError(
            "integrate_dsigma: need 0 < theta_min <= theta_max < pi");
    if (theta_min == theta_max) return 0.0;

    std::function<double(double)> integrand;
    switch (id) {
        case FormulaId::cm:
            integrand = [&](double th) { return dsigma_dtheta_cm(energy, th, params); };
            break;
        case FormulaId::cm_small_angle:
            integrand = [&](double th) {
                return dsigma_dtheta_small_angle(energy, th, params);
            };
            break;
        case FormulaId::nonrel: {
            if (!(energy > params.m_e))
                throw DomainError("integrate_dsigma: energy at or below m_e leaves no momentum");
            const double p = std::sqrt(energy * energy - params.m_e * params.m_e);
            integrand = [&, p](double th) { return dsigma_dtheta_nonrel(p, th, params); };
            break;
        }
        default: {
            // fold the invariant forms with |dt/dtheta|
            if (!(energy > params.m_e))
                throw DomainError("integrate_dsigma: energy at or below m_e leaves no momentum");
            const double p2 = energy * energy - params.m_e * params.m_e;
            integrand = [&, id, p2](double th) {
                const MandelstamSet ms = mandelstam_cm({energy, th, params.m_e});
                double v = 0.0;
                if (id == FormulaId::canonical)
                    v = dsigma_dt(ms, params, TraceSource::brute_force);
                else if (id == FormulaId::high_energy)
                    v = dsigma_dt_high_energy(ms, params);
                else
                    v = dsigma_dt_leading_mp(ms, params);
                return v * jacobian_dt_dtheta(p2, th);
            };
            break;
        }
    }
    return integrate_adaptive(integrand, theta_min, theta_max, 1e-8);
}

RegimeTag classify_regime(const MandelstamSet& ms, const PhysicalParams& params) {
    params.validate();
    const double m2  = ms.m * ms.m;
    const double mp2 = params.m_P * params.m_P;
    const double lo  = std::min(std::abs(ms.s), std::min(ms.t, ms.u));
    const double hi  = std::max(std::abs(ms.s), std::max(ms.t, ms.u));
    if (m2 <= lo && hi < mp2) return RegimeTag::podolsky_window;
    if (hi >= mp2) return RegimeTag::beyond_cutoff;
    if (std::abs(ms.s) - 4.0 * m2 < m2) return RegimeTag::nonrelativistic;
    return RegimeTag::intermediate;
}

} // namespace gqed3
