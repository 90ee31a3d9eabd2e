#include "gqed3/amplitude.hpp"

#include <array>
#include <cmath>

namespace gqed3 {

namespace {

constexpr Complex I{0.0, 1.0};

Mat2 numerator(const GammaRep& rep, const LorentzVec3& v, double m) {
    return I * slash(rep, v) - Complex(m) * Mat2::identity();
}

/// Sum over both vertex indices of Tr[g_lam X1 g_nu X2] Tr[g^lam Y1 g^nu Y2],
/// indices raised and lowered with the metric.
Complex paired_trace(const GammaRep& rep, const Mat2& x1, const Mat2& x2,
                     const Mat2& y1, const Mat2& y2) {
    Complex total(0.0);
    for (int lam = 0; lam < 3; ++lam)
        for (int nu = 0; nu < 3; ++nu) {
            const double w = rep.metric[lam] * rep.metric[nu];
            const std::array<Mat2, 4> f1{rep.gamma[lam], x1, rep.gamma[nu], x2};
            const std::array<Mat2, 4> f2{rep.gamma[lam], y1, rep.gamma[nu], y2};
            total += Complex(w) * trace_product(f1) * trace_product(f2);
        }
    return total;
}

/// Single cross trace Tr[g_lam X1 g_nu X2 g^lam X3 g^nu X4].
Complex cross_trace(const GammaRep& rep, const Mat2& x1, const Mat2& x2,
                    const Mat2& x3, const Mat2& x4) {
    Complex total(0.0);
    for (int lam = 0; lam < 3; ++lam)
        for (int nu = 0; nu < 3; ++nu) {
            const double w = rep.metric[lam] * rep.metric[nu];
            const std::array<Mat2, 8> f{rep.gamma[lam], x1, rep.gamma[nu], x2,
                                        rep.gamma[lam], x3, rep.gamma[nu], x4};
            total += Complex(w) * trace_product(f);
        }
    return total;
}

double require_real(Complex z, const char* what) {
    const double scale = std::max(std::abs(z.real()), 1.0);
    if (std::abs(z.imag()) > 1e-8 * scale)
        throw NumericError(std::string("trace_triple_bruteforce: ") + what +
                           " has an imaginary residue above tolerance", z.real());
    return z.real();
}

} // namespace

double closed_t_channel(double s, double t, double u, double m) {
    const double m2 = m * m;
    return 2.0 * (s * s + u * u - 0.5 * t * t) + 16.0 * m2 * (s + u - 0.5 * t) +
           48.0 * m2 * m2;
}

double closed_u_channel(double s, double t, double u, double m) {
    const double m2 = m * m;
    return 2.0 * (s * s + t * t - 0.5 * u * u) + 16.0 * m2 * (s + t - 0.5 * u) +
           48.0 * m2 * m2;
}

double closed_interference(double s, double t, double u, double m) {
    const double m2 = m * m;
    // grouped so the printed t <-> u symmetry is exact in floating point
    return (5.0 * s * s - (u * u + t * t)) + 8.0 * m2 * (5.0 * s - (u + t)) +
           36.0 * m2 * m2;
}

TraceTriple trace_triple_closed(const MandelstamSet& ms) {
    return {closed_t_channel(ms.s, ms.t, ms.u, ms.m),
            closed_u_channel(ms.s, ms.t, ms.u, ms.m),
            closed_interference(ms.s, ms.t, ms.u, ms.m),
            TraceSource::closed_form};
}

TraceTriple trace_triple_bruteforce(const LorentzVec3& p, const LorentzVec3& q,
                                    const LorentzVec3& p_out, const LorentzVec3& q_out,
                                    double mass) {
    mandelstam(p, q, p_out, q_out, mass); // reuse its validation

    const GammaRep& rep = gamma_rep();
    const Mat2 xp  = numerator(rep, p, mass);
    const Mat2 xq  = numerator(rep, q, mass);
    const Mat2 xpo = numerator(rep, p_out, mass);
    const Mat2 xqo = numerator(rep, q_out, mass);

    const Complex a = paired_trace(rep, xp, xpo, xq, xqo);
    const Complex b = paired_trace(rep, xp, xqo, xq, xpo);
    // both conjugate orderings of the cross term; their sum is real
    const Complex c1 = cross_trace(rep, xp, xqo, xq, xpo);
    const Complex c2 = cross_trace(rep, xp, xpo, xq, xqo);
    const Complex c  = -(c1 + c2);

    return {require_real(a, "direct channel"), require_real(b, "exchange channel"),
            require_real(c, "interference"), TraceSource::brute_force};
}

double podolsky_factor(double k2, double m_P) {
    if (!(m_P > 0.0))
        throw DomainError("podolsky_factor: cutoff mass must be positive");
    if (k2 == 0.0)
        throw PoleError("podolsky_factor: k^2 = 0, forward Coulomb singularity");
    const double f = 1.0 + k2 / (m_P * m_P);
    if (f == 0.0)
        throw PoleError("podolsky_factor: k^2 = -m_P^2, massive-mode pole");
    return 1.0 / (k2 * f);
}

double msq_bracket(const MandelstamSet& ms, const PhysicalParams& params,
                   TraceSource source) {
    params.validate();
    if (ms.t == 0.0 || ms.u == 0.0)
        throw PoleError("msq_bracket: momentum transfer vanishes, Coulomb pole");
    if (ms.t < 0.0 || ms.u < 0.0)
        throw DomainError("msq_bracket: t and u must be positive for physical scattering");

    TraceTriple tr;
    if (source == TraceSource::closed_form) {
        tr = trace_triple_closed(ms);
    } else {
        // reconstruct a CM configuration carrying these invariants
        if (!(ms.s < -4.0 * ms.m * ms.m))
            throw DomainError("msq_bracket: s must lie below -4m^2 to reconstruct CM momenta");
        const double identity = ms.s + ms.t + ms.u + 4.0 * ms.m * ms.m;
        if (std::abs(identity) > 1e-8 * std::abs(ms.s))
            throw ValidationError("msq_bracket: s + t + u + 4m^2 != 0");
        const double E  = 0.5 * std::sqrt(-ms.s);
        const double p2 = E * E - ms.m * ms.m;
        const double sin2_half = ms.t / (4.0 * p2);
        if (sin2_half < 0.0 || sin2_half > 1.0 + 1e-12)
            throw ValidationError("msq_bracket: t is outside the physical range [0, 4p^2]");
        const double theta = 2.0 * std::asin(std::sqrt(std::min(sin2_half, 1.0)));
        const CmMomenta mom = cm_kinematics({E, theta, ms.m});
        tr = trace_triple_bruteforce(mom.p, mom.q, mom.p_out, mom.q_out, ms.m);
    }

    const double ft = 1.0 + ms.t / (params.m_P * params.m_P);
    const double fu = 1.0 + ms.u / (params.m_P * params.m_P);
    return tr.t_channel / (ms.t * ms.t * ft * ft) +
           tr.u_channel / (ms.u * ms.u * fu * fu) +
           tr.interference / (ms.u * ms.t * ft * fu);
}

} // namespace gqed3
