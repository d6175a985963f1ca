#pragma once

#include "qsim/state_vector.hpp"

#include <cstdint>

namespace qsim::qft {

/// Forward carries the kernel exp(-2*pi*i*x*y/Q); Inverse carries the
/// conjugate. Composing the two is the identity.
enum class Direction { Forward, Inverse };

/// Fourier-transforms the basis values of `range` in place:
///   |x> -> Q^{-1/2} * sum_y exp(sign * 2*pi*i * x*y / Q) |y>,  Q = 2^count.
/// Implemented as the Hadamard / controlled-phase ladder with a final
/// qubit-order reversal. Returns the number of primitive gate applications
/// performed (Hadamards + controlled rotations + swaps).
std::size_t apply_qft(StateVector& state, const QubitRange& range, Direction direction);

/// Primitive count of the circuit above: L(L+1)/2 + floor(L/2).
/// Quadratic in the register width, matching what apply_qft executes.
std::uint64_t gate_count(std::size_t range_count);

} // namespace qsim::qft
