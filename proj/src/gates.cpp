#include "qsim/gates.hpp"

#include "qsim/errors.hpp"

#include <cmath>
#include <numbers>

namespace qsim::gates {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

Gate2x2 identity() {
    return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
}

Gate2x2 hadamard() {
    return {{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, {-kInvSqrt2, 0.0}};
}

Gate2x2 pauli_x() {
    return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
}

Gate2x2 pauli_y() {
    return {{0.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {0.0, 0.0}};
}

Gate2x2 pauli_z() {
    return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}};
}

Gate2x2 pauli(PauliAxis axis) {
    switch (axis) {
    case PauliAxis::X:
        return pauli_x();
    case PauliAxis::Y:
        return pauli_y();
    case PauliAxis::Z:
        return pauli_z();
    }
    throw DomainError("pauli: invalid axis");
}

Gate2x2 phase_rotation(unsigned k) {
    if (k < 1) {
        throw DomainError("phase_rotation: k must be >= 1");
    }
    const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(k));
    return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, std::polar(1.0, angle)};
}

Gate2x2 adjoint(const Gate2x2& g) {
    return {std::conj(g.m00), std::conj(g.m10), std::conj(g.m01), std::conj(g.m11)};
}

bool is_unitary(const Gate2x2& g) {
    // U * U^dagger, checked elementwise against the identity.
    const Amplitude p00 = g.m00 * std::conj(g.m00) + g.m01 * std::conj(g.m01);
    const Amplitude p01 = g.m00 * std::conj(g.m10) + g.m01 * std::conj(g.m11);
    const Amplitude p10 = g.m10 * std::conj(g.m00) + g.m11 * std::conj(g.m01);
    const Amplitude p11 = g.m10 * std::conj(g.m10) + g.m11 * std::conj(g.m11);
    return std::abs(p00 - 1.0) < kUnitaryTolerance && std::abs(p01) < kUnitaryTolerance &&
           std::abs(p10) < kUnitaryTolerance && std::abs(p11 - 1.0) < kUnitaryTolerance;
}

} // namespace qsim::gates
