#pragma once

#include <complex>

namespace qsim {

using Amplitude = std::complex<double>;

/// Elementwise tolerance for the unitarity check U * U^dagger = I.
inline constexpr double kUnitaryTolerance = 1e-12;

/// Single-qubit unitary, row-major:
///   | m00  m01 |
///   | m10  m11 |
struct Gate2x2 {
    Amplitude m00;
    Amplitude m01;
    Amplitude m10;
    Amplitude m11;
};

enum class PauliAxis { X, Y, Z };

namespace gates {

Gate2x2 identity();
Gate2x2 hadamard();
Gate2x2 pauli(PauliAxis axis);
Gate2x2 pauli_x();
Gate2x2 pauli_y();
Gate2x2 pauli_z();

/// diag(1, exp(2*pi*i / 2^k)), k >= 1. k=1 is Z, k=2 is the S gate.
/// The sign of the exponent is fixed here; circuits that need the
/// conjugate direction (e.g. the Fourier transform) apply adjoint().
Gate2x2 phase_rotation(unsigned k);

Gate2x2 adjoint(const Gate2x2& g);
bool is_unitary(const Gate2x2& g);

} // namespace gates
} // namespace qsim
