#pragma once

#include "gqed3/errors.hpp"
#include "gqed3/kinematics.hpp"

#include <limits>

namespace gqed3 {

/// Physical inputs of the cross-section formulas. m_P = +infinity is the
/// exact massless-photon (pure QED3) limit and is fully supported: every
/// Podolsky correction then evaluates to exactly zero.
struct PhysicalParams {
    double m_e   = 0.510;                                   ///< electron mass (MeV)
    double alpha = 1.0 / 137.0;                             ///< fine-structure constant
    double m_P   = std::numeric_limits<double>::infinity(); ///< Podolsky mass (MeV)
    static constexpr double hbar_c = kHbarC;                ///< MeV*fm

    void validate() const {
        if (!(m_e > 0.0)) throw ValidationError("params: electron mass must be positive");
        if (!(alpha > 0.0)) throw ValidationError("params: alpha must be positive");
        if (!(m_P > 0.0)) throw ValidationError("params: Podolsky mass must be positive");
    }
};

} // namespace gqed3
