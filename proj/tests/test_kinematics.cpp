#include "gqed3/kinematics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gqed3;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_CASE("minkowski dot") {
    const LorentzVec3 p = on_shell_momentum(1.0, kSqrt3, 0.0);
    CHECK(minkowski_dot(p, p) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(minkowski_dot({0, 1, 0}, {0, 0, 1}) == 0.0);
    CHECK(minkowski_dot({2, kSqrt3, 0}, {1, 0, 0}) == doctest::Approx(-2.0));
}

TEST_CASE("on-shell construction") {
    const LorentzVec3 a = on_shell_momentum(1.0, kSqrt3, 0.0);
    CHECK(a.e == doctest::Approx(2.0).epsilon(1e-14));
    const LorentzVec3 b = on_shell_momentum(0.0, 1.0, 0.0);
    CHECK(b.e == 1.0);
    const LorentzVec3 rest = on_shell_momentum(0.510, 0.0, 0.0);
    CHECK(rest.e == 0.510);
    CHECK_THROWS_AS(on_shell_momentum(-1.0, 0, 0), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> c(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const double m = std::abs(c(rng));
        const LorentzVec3 v = on_shell_momentum(m, c(rng), c(rng));
        CHECK(std::abs(minkowski_dot(v, v) + m * m) <= 1e-12 * (m * m + v.e * v.e));
    }
}

TEST_CASE("cm kinematics") {
    const CmMomenta mom = cm_kinematics({2.0, M_PI / 2.0, 1.0});
    CHECK(mom.p.e == 2.0);
    CHECK(mom.p.px == doctest::Approx(kSqrt3).epsilon(1e-14));
    CHECK(mom.p_out.px == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(mom.p_out.py == doctest::Approx(kSqrt3).epsilon(1e-14));

    const CmMomenta rest = cm_kinematics({1.0, 0.3, 1.0});
    CHECK(rest.p.px == 0.0);
    CHECK(rest.q_out.py == 0.0);

    const CmMomenta back = cm_kinematics({2.0, M_PI, 1.0});
    CHECK(back.p_out.px == doctest::Approx(-kSqrt3).epsilon(1e-12));

    CHECK_THROWS_AS(cm_kinematics({0.5, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(cm_kinematics({2.0, -0.1, 1.0}), DomainError);

    // exact conservation
    const LorentzVec3 in = mom.p + mom.q;
    const LorentzVec3 out = mom.p_out + mom.q_out;
    CHECK(in.e == out.e);
    CHECK(in.px == doctest::Approx(out.px).epsilon(1e-15));
}

TEST_CASE("mandelstam from momenta") {
    const CmMomenta mom = cm_kinematics({2.0, M_PI / 2.0, 1.0});
    const MandelstamSet ms = mandelstam(mom.p, mom.q, mom.p_out, mom.q_out, 1.0);
    CHECK(ms.s == doctest::Approx(-16.0).epsilon(1e-12));
    CHECK(ms.t == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(ms.u == doctest::Approx(6.0).epsilon(1e-12));

    // forward limit
    const CmMomenta fwd = cm_kinematics({2.0, 1e-9, 1.0});
    const MandelstamSet f = mandelstam(fwd.p, fwd.q, fwd.p_out, fwd.q_out, 1.0);
    CHECK(std::abs(f.t) < 1e-14);

    // violated constraints are named
    CHECK_THROWS_WITH_AS(mandelstam({2, 0, 0}, mom.q, mom.p_out, mom.q_out, 1.0),
                         doctest::Contains("off shell"), ValidationError);
    CHECK_THROWS_WITH_AS(mandelstam(mom.p, mom.q, mom.p_out, mom.p_out, 1.0),
                         doctest::Contains("conservation"), ValidationError);
}

TEST_CASE("mandelstam closed CM form") {
    const MandelstamSet ms = mandelstam_cm({2.0, M_PI / 2.0, 1.0});
    CHECK(ms.s == -16.0);
    CHECK(ms.t == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(ms.u == doctest::Approx(6.0).epsilon(1e-14));

    const MandelstamSet fwd = mandelstam_cm({2.0, 0.0, 1.0});
    CHECK(fwd.t == 0.0);
    CHECK(fwd.u == doctest::Approx(12.0).epsilon(1e-14));

    const MandelstamSet thr = mandelstam_cm({1.0, M_PI / 2.0, 1.0});
    CHECK(thr.s == -4.0);
    CHECK(thr.t == 0.0);
    CHECK(thr.u == 0.0);
}

TEST_CASE("mandelstam properties over random states") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> th(1e-3, M_PI - 1e-3);
    std::uniform_real_distribution<double> le(0.0, 3.0);
    const double m = 0.510;
    for (int i = 0; i < 10000; ++i) {
        const CmState st{m * std::pow(10.0, le(rng)), th(rng), m};
        const MandelstamSet closed = mandelstam_cm(st);
        CHECK(std::abs(closed.s + closed.t + closed.u + 4 * m * m) <=
              1e-10 * std::abs(closed.s));

        const CmMomenta mom = cm_kinematics(st);
        const MandelstamSet direct = mandelstam(mom.p, mom.q, mom.p_out, mom.q_out, m);
        const double scale = std::abs(closed.s);
        CHECK(std::abs(direct.s - closed.s) <= 1e-12 * scale);
        CHECK(std::abs(direct.t - closed.t) <= 1e-12 * scale);
        CHECK(std::abs(direct.u - closed.u) <= 1e-12 * scale);

        const MandelstamSet swapped = mandelstam(mom.p, mom.q, mom.q_out, mom.p_out, m);
        CHECK(swapped.t == direct.u);
        CHECK(swapped.u == direct.t);
        CHECK(swapped.s == direct.s);
    }
}

TEST_CASE("relative velocity") {
    const LorentzVec3 p{2.0, kSqrt3, 0.0};
    const LorentzVec3 q{1.0, 0.0, 0.0};
    const double v = relative_velocity(p, q, 1.0);
    CHECK(v == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-12));
    // rest-frame definition |p|/E_p
    CHECK(v == doctest::Approx(kSqrt3 / p.e).epsilon(1e-12));

    CHECK(relative_velocity(q, q, 1.0) == 0.0);
    CHECK_THROWS_AS(relative_velocity({2, 0, 0}, q, 1.0), ValidationError);
}

TEST_CASE("cutoff mass from length") {
    CHECK(podolsky_mass_from_length(3.0) == doctest::Approx(65.77).epsilon(5e-4));
    CHECK(podolsky_mass_from_length(1.0) == kHbarC);
    CHECK(podolsky_mass_from_length(kHbarC) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(podolsky_mass_from_length(0.0), DomainError);
    CHECK_THROWS_AS(podolsky_mass_from_length(-2.0), DomainError);
}
