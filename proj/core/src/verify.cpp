#include "gqed3/verify.hpp"

#include "gqed3/amplitude.hpp"
#include "gqed3/clifford.hpp"
#include "gqed3/cross_section.hpp"
#include "gqed3/io.hpp"
#include "gqed3/kinematics.hpp"

#include <array>
#include <cmath>
#include <random>

namespace gqed3 {

namespace {

struct Suite {
    std::vector<InvariantResult> results;

    void record(std::string name, double measured, double threshold,
                std::string detail = {}) {
        results.push_back({std::move(name), measured <= threshold, measured,
                           threshold, std::move(detail)});
    }
};

LorentzVec3 random_onshell(std::mt19937_64& rng, double mass, double span) {
    std::uniform_real_distribution<double> comp(-span, span);
    return on_shell_momentum(mass, comp(rng), comp(rng));
}

CmState random_cm_state(std::mt19937_64& rng, double mass) {
    std::uniform_real_distribution<double> ef(0.0, 3.0);
    std::uniform_real_distribution<double> th(1e-3, M_PI - 1e-3);
    return {mass * (1.0 + std::pow(10.0, ef(rng)) - 1.0), th(rng), mass};
}

void gamma_identities(Suite& s) {
    const GammaRep& rep = gamma_rep();
    auto eps = [](int i, int j, int k) { return 0.5 * (i - j) * (j - k) * (k - i); };
    double worst_anti = 0.0, worst_comm = 0.0, worst_traceless = 0.0;
    for (int mu = 0; mu < 3; ++mu) {
        worst_traceless = std::max(worst_traceless, std::abs(trace(rep.gamma[mu])));
        for (int nu = 0; nu < 3; ++nu) {
            const Mat2 anti = rep.gamma[mu] * rep.gamma[nu] + rep.gamma[nu] * rep.gamma[mu];
            const Mat2 want_anti = (mu == nu)
                                       ? Complex(2.0 * rep.metric[mu]) * Mat2::identity()
                                       : Mat2::zero();
            worst_anti = std::max(worst_anti, max_abs(anti - want_anti));

            Mat2 want_comm = Mat2::zero();
            for (int lam = 0; lam < 3; ++lam)
                want_comm = want_comm +
                            Complex(2.0 * rep.epsilon_sign * eps(mu, nu, lam) *
                                    rep.metric[lam]) * rep.gamma[lam];
            const Mat2 comm = rep.gamma[mu] * rep.gamma[nu] - rep.gamma[nu] * rep.gamma[mu];
            worst_comm = std::max(worst_comm, max_abs(comm - want_comm));
        }
    }
    s.record("gamma_anticommutator", worst_anti, 1e-14,
             "{g^mu,g^nu} = 2 g^{mu nu}, all 9 pairs entrywise");
    s.record("gamma_commutator_closure", worst_comm, 1e-14,
             "[g^mu,g^nu] = 2 eps_sign eps^{mu nu lam} g_lam, eps_sign = " +
                 format_double(rep.epsilon_sign));
    s.record("gamma_traceless", worst_traceless, 1e-14, "Tr g^mu = 0");
}

void dual_oracle(Suite& s, int strings) {
    const GammaRep& rep = gamma_rep();
    std::mt19937_64 rng(0xD0A1ULL);
    std::uniform_real_distribution<double> comp(-2.0, 2.0);
    std::uniform_int_distribution<int> len(1, 8);
    double worst = 0.0;
    for (int i = 0; i < strings; ++i) {
        const int n = len(rng);
        std::vector<GammaFactor> fs;
        std::vector<Mat2> ms;
        double scale = 1.0;
        for (int k = 0; k < n; ++k) {
            const LorentzVec3 v{comp(rng), comp(rng), comp(rng)};
            fs.push_back(GammaFactor::slashed(v));
            ms.push_back(slash(rep, v));
            scale *= std::max({std::abs(v.e), std::abs(v.px), std::abs(v.py), 1.0});
        }
        const Complex a = trace_product(ms);
        const Complex b = trace_reduce(rep, fs);
        worst = std::max(worst,
                         std::abs(a - b) / std::max({std::abs(a), std::abs(b), scale}));
    }
    s.record("dual_oracle_traces", worst, 1e-10,
             std::to_string(strings) + " random gamma strings of length <= 8");
}

void trace_cyclicity(Suite& s) {
    std::mt19937_64 rng(0xC1CULL);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Mat2> ms(5);
        for (auto& m : ms)
            for (auto& c : m.a) c = Complex(comp(rng), comp(rng));
        const Complex base = trace_product(ms);
        std::rotate(ms.begin(), ms.begin() + 1, ms.end());
        const Complex rot = trace_product(ms);
        worst = std::max(worst, std::abs(base - rot) / std::max(std::abs(base), 1.0));
    }
    s.record("trace_cyclicity", worst, 1e-12, "trace invariant under cyclic rotation");
}

void projector_contracts(Suite& s, int draws) {
    const GammaRep& rep = gamma_rep();
    std::mt19937_64 rng(0x9407ULL);
    double worst_ann = 0.0, worst_rank = 0.0, worst_outer = 0.0, worst_idem = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double m = 0.25 + 2.0 * (i % 7) / 7.0;
        const LorentzVec3 p = random_onshell(rng, m, 3.0);
        const SpinProjector proj = projector(rep, p, m, Branch::particle);
        const Mat2 plus = Complex(0, 1) * slash(rep, p) + Complex(m) * Mat2::identity();
        const Mat2 minus = Complex(0, 1) * slash(rep, p) - Complex(m) * Mat2::identity();
        worst_ann = std::max(worst_ann, max_abs(proj.matrix * plus) / (m * m));
        worst_rank = std::max(worst_rank, std::abs(det(proj.matrix)));
        const Mat2 idem = minus * minus - Complex(-2.0 * m) * minus;
        worst_idem = std::max(worst_idem, max_abs(idem) / (m * m));
        const Spinor u = spinor_u(rep, p, m);
        worst_outer = std::max(worst_outer, max_abs(spinor_outer(rep, u) - proj.matrix));
    }
    s.record("projector_annihilation", worst_ann, 1e-10,
             "(i g.p - m)(i g.p + m) = 0 on shell");
    s.record("projector_rank1", worst_rank, 1e-12, "det of the spin-sum matrix");
    s.record("projector_idempotency_scale", worst_idem, 1e-10,
             "(i g.p - m)^2 = -2m (i g.p - m)");
    s.record("spinor_outer_product", worst_outer, 1e-10,
             "u ubar reproduces the spin-sum matrix");
}

void mandelstam_identities(Suite& s, int draws) {
    std::mt19937_64 rng(0x3A57ULL);
    double worst_sum = 0.0, worst_cm = 0.0, worst_swap = 0.0, worst_vel = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double m = 0.51;
        const CmState st = random_cm_state(rng, m);
        const MandelstamSet closed = mandelstam_cm(st);
        worst_sum = std::max(worst_sum,
                             std::abs(closed.s + closed.t + closed.u + 4 * m * m) /
                                 std::abs(closed.s));
        const CmMomenta mom = cm_kinematics(st);
        const MandelstamSet direct = mandelstam(mom.p, mom.q, mom.p_out, mom.q_out, m);
        const double scale = std::abs(closed.s) + 4 * m * m;
        worst_cm = std::max({worst_cm, std::abs(direct.s - closed.s) / scale,
                             std::abs(direct.t - closed.t) / scale,
                             std::abs(direct.u - closed.u) / scale});
        const MandelstamSet swapped =
            mandelstam(mom.p, mom.q, mom.q_out, mom.p_out, m);
        worst_swap = std::max({worst_swap, std::abs(swapped.t - direct.u) / scale,
                               std::abs(swapped.u - direct.t) / scale,
                               std::abs(swapped.s - direct.s) / scale});
        // the flux velocity is bounded by 1 in the rest frame of either beam
        const LorentzVec3 rest{m, 0.0, 0.0};
        const double v = relative_velocity(mom.p, rest, m);
        worst_vel = std::max(worst_vel, (v >= 0.0 && v < 1.0) ? 0.0 : 1.0);
    }
    s.record("mandelstam_sum_identity", worst_sum, 1e-10, "s + t + u = -4m^2");
    s.record("mandelstam_cm_consistency", worst_cm, 1e-12,
             "momentum route equals the closed CM form");
    s.record("mandelstam_exchange_swap", worst_swap, 1e-12,
             "p' <-> q' swaps t and u, fixes s");
    s.record("relative_velocity_range", worst_vel, 0.0,
             "v in [0, 1) against a beam at rest");
}

void propagator_identities(Suite& s, int draws) {
    // the identity depends only on k2/mP^2; sample that ratio over six
    // decades and the overall scale independently
    std::mt19937_64 rng(0xB0D0ULL);
    std::uniform_real_distribution<double> lr(-3.0, 3.0);
    std::uniform_real_distribution<double> lm(-2.0, 6.0);
    std::uniform_real_distribution<double> sign(0.0, 1.0);
    double worst_pf = 0.0, worst_limit = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double mp = std::pow(10.0, lm(rng));
        const double r = (sign(rng) < 0.3 ? -1.0 : 1.0) * std::pow(10.0, lr(rng));
        if (std::abs(1.0 + r) < 1e-3) continue; // keep clear of the massive pole
        const double k2 = r * mp * mp;
        const double lhs = podolsky_factor(k2, mp);
        const double rhs = 1.0 / k2 - 1.0 / (k2 + mp * mp);
        worst_pf = std::max(worst_pf, std::abs(lhs - rhs) / std::abs(lhs));

        const double big = 1e12 * std::sqrt(std::abs(k2));
        const double lim = podolsky_factor(k2, big);
        worst_limit = std::max(worst_limit, std::abs(lim - 1.0 / k2) * std::abs(k2) /
                                                (std::abs(k2) / (big * big) + 1e-30));
    }
    s.record("podolsky_partial_fraction", worst_pf, 1e-12,
             "1/(k2(1+k2/mP^2)) = 1/k2 - 1/(k2+mP^2)");
    s.record("podolsky_massless_limit", worst_limit, 2.0,
             "factor -> 1/k2 with error bounded by k2/mP^2 as mP -> inf");
}

void cross_section_symmetries(Suite& s, int draws) {
    std::mt19937_64 rng(0xCE55ULL);
    std::uniform_real_distribution<double> th(0.05, M_PI - 0.05);
    std::uniform_real_distribution<double> ef(0.1, 2.5);
    PhysicalParams params;
    params.m_e = 0.51;
    params.m_P = 250.0;

    double worst_reflect = 0.0, worst_alpha = 0.0, worst_tu = 0.0,
           worst_decouple = 0.0, worst_gate = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double theta = th(rng);
        const double E = params.m_e * (1.0 + std::pow(10.0, ef(rng)));

        const double a = dsigma_dtheta_cm(E, theta, params);
        const double b = dsigma_dtheta_cm(E, M_PI - theta, params);
        worst_reflect =
            std::max(worst_reflect, std::abs(a - b) / std::max(std::abs(a), 1e-300));
        const double pmag = std::sqrt(E * E - params.m_e * params.m_e);
        const double na = dsigma_dtheta_nonrel(pmag, theta, params);
        const double nb = dsigma_dtheta_nonrel(pmag, M_PI - theta, params);
        worst_reflect = std::max(worst_reflect,
                                 std::abs(na - nb) / std::max(std::abs(na), 1e-300));

        PhysicalParams doubled = params;
        doubled.alpha = 2.0 * params.alpha;
        worst_alpha = std::max(
            worst_alpha,
            std::abs(dsigma_dtheta_cm(E, theta, doubled) - 4.0 * a) /
                std::max(std::abs(4.0 * a), 1e-300));

        const MandelstamSet ms = mandelstam_cm({E, theta, params.m_e});
        const MandelstamSet tu{ms.s, ms.u, ms.t, ms.m};
        const double d1 = dsigma_dt(ms, params, TraceSource::closed_form);
        const double d2 = dsigma_dt(tu, params, TraceSource::closed_form);
        worst_tu = std::max(worst_tu, std::abs(d1 - d2) / std::abs(d1));
        const double h1 = dsigma_dt_high_energy(ms, params);
        const double h2 = dsigma_dt_high_energy(tu, params);
        worst_tu = std::max(worst_tu, std::abs(h1 - h2) / std::abs(h1));

        PhysicalParams heavy = params;
        heavy.m_P = 1e10 * E;
        worst_decouple =
            std::max(worst_decouple, std::abs(delta_deviation(E, theta, heavy)));

        const MandelstamSet gate{ms.s, -ms.t, ms.u, ms.m};
        const double I = phase_space_integral(gate);
        worst_gate = std::max(worst_gate, std::abs(I));
    }
    s.record("theta_reflection_symmetry", worst_reflect, 1e-12,
             "CM and nonrelativistic forms even about pi/2");
    s.record("alpha_squared_scaling", worst_alpha, 0.0,
             "doubling alpha exactly quadruples every cross section");
    s.record("bracket_tu_invariance", worst_tu, 1e-12,
             "dsigma/dt invariant under t <-> u");
    s.record("mp_decoupling", worst_decouple, 1e-12,
             "|delta| at m_P = 1e10 E");
    s.record("phase_space_heaviside", worst_gate, 0.0,
             "phase-space factor is exactly 0 outside t, u > 0");
}

void brute_force_properties(Suite& s, int draws) {
    std::mt19937_64 rng(0xF00DULL);
    std::uniform_real_distribution<double> th(0.1, M_PI - 0.1);
    std::uniform_real_distribution<double> ef(0.05, 2.0);
    std::uniform_real_distribution<double> rot(0.0, 2.0 * M_PI);
    const double m = 0.51;
    double worst_ab = 0.0, worst_rot = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double E = m * (1.0 + std::pow(10.0, ef(rng)));
        const CmMomenta mom = cm_kinematics({E, th(rng), m});
        const TraceTriple t1 =
            trace_triple_bruteforce(mom.p, mom.q, mom.p_out, mom.q_out, m);
        const TraceTriple t2 =
            trace_triple_bruteforce(mom.p, mom.q, mom.q_out, mom.p_out, m);
        const double scale = std::abs(t1.t_channel) + std::abs(t1.u_channel);
        worst_ab = std::max({worst_ab, std::abs(t1.t_channel - t2.u_channel) / scale,
                             std::abs(t1.u_channel - t2.t_channel) / scale,
                             std::abs(t1.interference - t2.interference) / scale});

        const double phi = rot(rng);
        auto rotate = [phi](const LorentzVec3& v) {
            return LorentzVec3{v.e, v.px * std::cos(phi) - v.py * std::sin(phi),
                               v.px * std::sin(phi) + v.py * std::cos(phi)};
        };
        const TraceTriple t3 = trace_triple_bruteforce(
            rotate(mom.p), rotate(mom.q), rotate(mom.p_out), rotate(mom.q_out), m);
        worst_rot = std::max({worst_rot,
                              std::abs(t1.t_channel - t3.t_channel) / scale,
                              std::abs(t1.u_channel - t3.u_channel) / scale,
                              std::abs(t1.interference - t3.interference) / scale});
    }
    s.record("bruteforce_exchange_relabeling", worst_ab, 1e-12,
             "swapping outgoing momenta swaps the channel traces");
    s.record("bruteforce_rotation_invariance", worst_rot, 1e-10,
             "traces are scalars under spatial rotations");
}

} // namespace

std::vector<InvariantResult> run_invariant_suite() {
    Suite s;
    gamma_identities(s);
    dual_oracle(s, 10000);
    trace_cyclicity(s);
    projector_contracts(s, 1000);
    mandelstam_identities(s, 100000);
    propagator_identities(s, 1000000);
    cross_section_symmetries(s, 2000);
    brute_force_properties(s, 300);
    return s.results;
}

} // namespace gqed3
