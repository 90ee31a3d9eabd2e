#pragma once

#include <stdexcept>
#include <string>

namespace gqed3 {

/// Input lies outside the physical domain of a formula.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation requested exactly on a pole of a formula (forward/backward
/// Coulomb singularity, propagator pole). Poles raise instead of returning
/// non-finite values.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Input violates a stated precondition (off-shell momentum, broken
/// energy-momentum conservation, malformed grid). The message names the
/// violated constraint.
class ValidationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Symbolic machinery asked to handle more factors than it supports.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical procedure failed to converge; carries the partial estimate.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double partial_estimate)
        : std::runtime_error(what), partial(partial_estimate) {}
    double partial;
};

} // namespace gqed3
