#include "gqed3/quadrature.hpp"

#include <cmath>

namespace gqed3 {

namespace {

struct Panel {
    double value;
    bool converged;
};

Panel simpson_step(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double abs_tol,
                   int depth) {
    const double m  = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left  = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    const double err = (refined - whole) / 15.0;
    if (std::abs(err) <= abs_tol)
        return {refined + err, true};
    if (depth <= 0)
        return {refined + err, false};
    const Panel l = simpson_step(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, depth - 1);
    const Panel r = simpson_step(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, depth - 1);
    return {l.value + r.value, l.converged && r.converged};
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth) {
    if (a == b) return 0.0;

    // coarse estimate to set the absolute target
    const int n = 64;
    const double h = (b - a) / n;
    double coarse = 0.5 * (std::abs(f(a)) + std::abs(f(b)));
    for (int i = 1; i < n; ++i) coarse += std::abs(f(a + i * h));
    coarse *= std::abs(h);
    const double abs_tol = rel_tol * std::max(coarse, 1e-300);

    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const Panel res = simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
    if (!res.converged)
        throw NumericError("integrate_adaptive: depth cap reached before convergence",
                           res.value);
    return res.value;
}

} // namespace gqed3
