#pragma once

#include "gqed3/errors.hpp"

#include <functional>

namespace gqed3 {

/// Adaptive Simpson quadrature to the requested relative tolerance.
/// Deterministic for fixed inputs. Throws NumericError carrying the
/// partial estimate if the recursion depth cap is exhausted anywhere.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-8, int max_depth = 48);

} // namespace gqed3
