#pragma once

#include <string>
#include <vector>

namespace gqed3 {

/// One named hard invariant with its measured worst-case deviation.
struct InvariantResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;  ///< worst deviation found
    double threshold = 0.0; ///< pass bound
    std::string detail;
};

/// Runs every hard invariant of the library with fixed seeds:
/// algebra identities, dual-oracle traces, projector and spinor
/// contracts, kinematic identities, propagator partial fractions,
/// symmetries and decoupling limits. Deterministic.
std::vector<InvariantResult> run_invariant_suite();

} // namespace gqed3
