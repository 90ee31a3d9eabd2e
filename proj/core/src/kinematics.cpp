#include "gqed3/kinematics.hpp"

#include <cmath>
#include <string>

namespace gqed3 {

namespace {

constexpr double kOnShellTol  = 1e-8;
constexpr double kRouteTol    = 1e-10;

void require_on_shell(const LorentzVec3& v, double mass, const char* name) {
    const double p2    = minkowski_dot(v, v);
    const double scale = mass * mass + v.e * v.e;
    if (std::abs(p2 + mass * mass) > kOnShellTol * scale)
        throw ValidationError(std::string(name) +
                              " is off shell: p^2 + m^2 = " +
                              std::to_string(p2 + mass * mass));
}

} // namespace

LorentzVec3 on_shell_momentum(double mass, double px, double py) {
    if (mass < 0.0)
        throw DomainError("on_shell_momentum: negative mass");
    return {std::sqrt(mass * mass + px * px + py * py), px, py};
}

CmMomenta cm_kinematics(const CmState& state) {
    const double E = state.energy;
    const double m = state.mass;
    if (E < m)
        throw DomainError("cm_kinematics: beam energy below electron mass");
    if (!(state.theta >= 0.0 && state.theta <= M_PI))
        throw DomainError("cm_kinematics: scattering angle outside [0, pi]");
    const double k = std::sqrt(E * E - m * m);
    const double c = std::cos(state.theta);
    const double s = std::sin(state.theta);
    return {{E, k, 0.0}, {E, -k, 0.0}, {E, k * c, k * s}, {E, -k * c, -k * s}};
}

MandelstamSet mandelstam(const LorentzVec3& p, const LorentzVec3& q,
                         const LorentzVec3& p_out, const LorentzVec3& q_out,
                         double mass) {
    require_on_shell(p, mass, "p");
    require_on_shell(q, mass, "q");
    require_on_shell(p_out, mass, "p'");
    require_on_shell(q_out, mass, "q'");

    const LorentzVec3 in  = p + q;
    const LorentzVec3 out = p_out + q_out;
    const double cons_scale = std::abs(p.e) + std::abs(q.e);
    if (std::abs(in.e - out.e) > kOnShellTol * cons_scale ||
        std::abs(in.px - out.px) > kOnShellTol * cons_scale ||
        std::abs(in.py - out.py) > kOnShellTol * cons_scale)
        throw ValidationError("mandelstam: energy-momentum conservation violated");

    const double m2 = mass * mass;
    const double s_dot  = -2.0 * m2 + 2.0 * minkowski_dot(p, q);
    const double t_dot  = -2.0 * m2 - 2.0 * minkowski_dot(p, p_out);
    const double u_dot  = -2.0 * m2 - 2.0 * minkowski_dot(p_out, q);

    const LorentzVec3 dpp = p - p_out;
    const LorentzVec3 dpq = p_out - q;
    const double s_sq = minkowski_dot(in, in);
    const double t_sq = minkowski_dot(dpp, dpp);
    const double u_sq = minkowski_dot(dpq, dpq);

    const double scale = std::abs(s_dot) + 4.0 * m2;
    if (std::abs(s_dot - s_sq) > kRouteTol * scale)
        throw ValidationError("mandelstam: two routes to s disagree");
    if (std::abs(t_dot - t_sq) > kRouteTol * scale)
        throw ValidationError("mandelstam: two routes to t disagree");
    if (std::abs(u_dot - u_sq) > kRouteTol * scale)
        throw ValidationError("mandelstam: two routes to u disagree");

    return {s_dot, t_dot, u_dot, mass};
}

MandelstamSet mandelstam_cm(const CmState& state) {
    const double E = state.energy;
    const double m = state.mass;
    if (E < m)
        throw DomainError("mandelstam_cm: beam energy below electron mass");
    if (!(state.theta >= 0.0 && state.theta <= M_PI))
        throw DomainError("mandelstam_cm: scattering angle outside [0, pi]");
    const double p2 = E * E - m * m;
    const double sh = std::sin(0.5 * state.theta);
    const double ch = std::cos(0.5 * state.theta);
    return {-4.0 * E * E, 4.0 * p2 * sh * sh, 4.0 * p2 * ch * ch, m};
}

double relative_velocity(const LorentzVec3& p, const LorentzVec3& q, double mass) {
    require_on_shell(p, mass, "p");
    require_on_shell(q, mass, "q");
    const double pq = minkowski_dot(p, q);
    const double m4 = mass * mass * mass * mass;
    const double arg = pq * pq - m4;
    if (arg < 0.0)
        throw DomainError("relative_velocity: (p.q)^2 < m^4, below threshold");
    return std::sqrt(arg) / (p.e * q.e);
}

double podolsky_mass_from_length(double a_fm) {
    if (a_fm <= 0.0)
        throw DomainError("podolsky_mass_from_length: length must be positive");
    return kHbarC / a_fm;
}

} // namespace gqed3
