#pragma once

#include <stdexcept>
#include <string>

namespace qsim {

/// Argument outside the operation's documented domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Register would exceed the configured qubit budget.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an API precondition that valid pipelines never hit
/// (non-unitary gate, oracle applied to a dirty output register, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Measurement requested on a branch with (numerically) zero total weight.
class DegenerateStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qsim
