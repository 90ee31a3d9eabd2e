#include "gqed3/clifford.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gqed3 {

namespace {

constexpr Complex I{0.0, 1.0};

GammaRep build_rep() {
    GammaRep rep;
    rep.gamma[0] = {{I, Complex(0), Complex(0), -I}};                    // i sigma^3
    rep.gamma[1] = {{Complex(0), Complex(1), Complex(1), Complex(0)}};   // sigma^1
    rep.gamma[2] = {{Complex(0), -I, I, Complex(0)}};                    // sigma^2

    // anticommutators: {g^mu, g^nu} = 2 g^{mu nu}
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu) {
            Mat2 anti = rep.gamma[mu] * rep.gamma[nu] + rep.gamma[nu] * rep.gamma[mu];
            Mat2 want = (mu == nu) ? Complex(2.0 * rep.metric[mu]) * Mat2::identity()
                                   : Mat2::zero();
            if (max_abs(anti - want) > 1e-14)
                throw std::logic_error("gamma_rep: anticommutator identity violated");
        }

    // measure the orientation from gamma^0 gamma^1 = epsilon_sign * gamma^2
    const Mat2 p01 = rep.gamma[0] * rep.gamma[1];
    if (max_abs(p01 - rep.gamma[2]) < 1e-14)
        rep.epsilon_sign = 1.0;
    else if (max_abs(p01 + rep.gamma[2]) < 1e-14)
        rep.epsilon_sign = -1.0;
    else
        throw std::logic_error("gamma_rep: product of gammas does not close on the algebra");

    // full closure with the measured sign:
    //   g^mu g^nu = g^{mu nu} 1 + epsilon_sign eps^{mu nu lam} g_lam
    auto eps = [](int i, int j, int k) -> double {
        return 0.5 * (i - j) * (j - k) * (k - i);
    };
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu) {
            Mat2 rhs = (mu == nu) ? Complex(rep.metric[mu]) * Mat2::identity()
                                  : Mat2::zero();
            for (int lam = 0; lam < 3; ++lam)
                rhs = rhs + Complex(rep.epsilon_sign * eps(mu, nu, lam) *
                                    rep.metric[lam]) * rep.gamma[lam];
            if (max_abs(rep.gamma[mu] * rep.gamma[nu] - rhs) > 1e-14)
                throw std::logic_error("gamma_rep: commutator closure violated");
        }
    return rep;
}

/// Spatial cross contraction W^lam = eps^{mu nu lam} a^mu b^nu with the
/// time component of the result lowered, so that
///   slash(a) slash(b) = (a.b) 1 + epsilon_sign * slash(cross_lowered(a,b)).
LorentzVec3 cross_lowered(const LorentzVec3& a, const LorentzVec3& b) {
    const double w0 = a.px * b.py - a.py * b.px;
    const double w1 = a.py * b.e - a.e * b.py;
    const double w2 = a.e * b.px - a.px * b.e;
    return {-w0, w1, w2};
}

Complex reduce_slashed(const GammaRep& rep, const std::vector<LorentzVec3>& vs,
                       std::size_t begin) {
    const std::size_t n = vs.size() - begin;
    if (n == 0) return Complex(2.0);
    if (n == 1) return Complex(0.0);
    const LorentzVec3& a = vs[begin];
    const LorentzVec3& b = vs[begin + 1];

    std::vector<LorentzVec3> tail(vs.begin() + static_cast<long>(begin) + 2, vs.end());
    const Complex head = Complex(minkowski_dot(a, b)) * reduce_slashed(rep, tail, 0);

    std::vector<LorentzVec3> merged;
    merged.reserve(tail.size() + 1);
    merged.push_back(cross_lowered(a, b));
    merged.insert(merged.end(), tail.begin(), tail.end());
    return head + Complex(rep.epsilon_sign) * reduce_slashed(rep, merged, 0);
}

} // namespace

const GammaRep& gamma_rep() {
    static const GammaRep rep = build_rep();
    return rep;
}

Mat2 slash(const GammaRep& rep, const LorentzVec3& p) {
    return Complex(p.e) * rep.gamma[0] + Complex(p.px) * rep.gamma[1] +
           Complex(p.py) * rep.gamma[2];
}

Complex trace_product(std::span<const Mat2> factors) {
    if (factors.empty())
        throw ValidationError("trace_product: empty factor sequence");
    Mat2 acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
    return trace(acc);
}

SpinProjector projector(const GammaRep& rep, const LorentzVec3& p, double mass,
                        Branch branch) {
    const double p2    = minkowski_dot(p, p);
    const double scale = mass * mass + p.e * p.e;
    if (std::abs(p2 + mass * mass) > 1e-8 * scale)
        throw ValidationError("projector: momentum is off shell");
    const double E = p.e;
    SpinProjector out;
    out.energy = E;
    out.mass   = mass;
    out.branch = branch;
    if (branch == Branch::particle) {
        out.matrix = Complex(1.0 / (2.0 * E)) *
                     (I * slash(rep, p) - Complex(mass) * Mat2::identity());
    } else {
        const LorentzVec3 reflected{-p.e, p.px, p.py};
        out.matrix = Complex(-1.0 / (2.0 * E)) *
                     (I * slash(rep, reflected) - Complex(mass) * Mat2::identity());
    }
    return out;
}

Spinor spinor_u(const GammaRep& rep, const LorentzVec3& p, double mass) {
    if (mass <= 0.0)
        throw DomainError("spinor_u: massless spinors are unsupported, the projector degenerates");
    const SpinProjector proj = projector(rep, p, mass, Branch::particle);

    // kernel vector of K = i gamma.p + m (singular on shell)
    const Mat2 K = I * slash(rep, p) + Complex(mass) * Mat2::identity();
    const double r0 = std::abs(K(0, 0)) + std::abs(K(0, 1));
    const double r1 = std::abs(K(1, 0)) + std::abs(K(1, 1));
    Spinor u0;
    if (r0 >= r1)
        u0 = {-K(0, 1), K(0, 0)};
    else
        u0 = {-K(1, 1), K(1, 0)};

    // normalize so that u ubar equals the projector matrix
    const Mat2 outer0 = spinor_outer(rep, u0);
    int best = 0;
    for (int k = 1; k < 4; ++k)
        if (std::abs(outer0.a[k]) > std::abs(outer0.a[best])) best = k;
    const Complex ratio = proj.matrix.a[best] / outer0.a[best];
    if (std::abs(ratio.imag()) > 1e-10 * std::abs(ratio) || ratio.real() <= 0.0)
        throw NumericError("spinor_u: projector is not an outer product under the adjoint convention",
                           ratio.real());
    const double norm = std::sqrt(ratio.real());
    Spinor u{norm * u0[0], norm * u0[1]};

    // phase: first nonzero component real positive
    const int lead = (std::abs(u[0]) > 1e-14 * (std::abs(u[0]) + std::abs(u[1]))) ? 0 : 1;
    const Complex phase = std::abs(u[lead]) / u[lead];
    u = {phase * u[0], phase * u[1]};
    return u;
}

Spinor spinor_ubar(const GammaRep& rep, const Spinor& u) {
    const Mat2 adj = I * rep.gamma[0];
    return {std::conj(u[0]) * adj(0, 0) + std::conj(u[1]) * adj(1, 0),
            std::conj(u[0]) * adj(0, 1) + std::conj(u[1]) * adj(1, 1)};
}

Mat2 spinor_outer(const GammaRep& rep, const Spinor& u) {
    const Spinor ub = spinor_ubar(rep, u);
    return {{u[0] * ub[0], u[0] * ub[1], u[1] * ub[0], u[1] * ub[1]}};
}

Complex trace_reduce(const GammaRep& rep, std::span<const GammaFactor> factors) {
    if (factors.size() > 12)
        throw CapacityError("trace_reduce: gamma string longer than 12 factors");
    Complex scalar(1.0);
    std::vector<LorentzVec3> vs;
    vs.reserve(factors.size());
    for (const auto& f : factors) {
        if (f.kind == GammaFactor::Kind::scalar)
            scalar *= f.coeff;
        else
            vs.push_back(f.vec);
    }
    return scalar * reduce_slashed(rep, vs, 0);
}

} // namespace gqed3
