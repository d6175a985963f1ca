#include "qsim/qft.hpp"

#include "qsim/errors.hpp"
#include "qsim/gates.hpp"

namespace qsim::qft {

std::size_t apply_qft(StateVector& state, const QubitRange& range, Direction direction) {
    if (range.count < 1 || range.start + range.count > state.num_qubits()) {
        throw DomainError("apply_qft: invalid qubit range");
    }
    const std::size_t n = range.count;
    const Gate2x2 h = gates::hadamard();
    std::size_t applied = 0;

    // Hadamard / controlled-R_k ladder, most significant range qubit first.
    // Conjugating every rotation flips the transform's sign, so one circuit
    // serves both directions.
    for (std::size_t j = n; j-- > 0;) {
        state.apply_1q(h, range.start + j);
        ++applied;
        for (std::size_t c = 0; c < j; ++c) {
            Gate2x2 rot = gates::phase_rotation(static_cast<unsigned>(j - c + 1));
            if (direction == Direction::Forward) {
                rot = gates::adjoint(rot);
            }
            state.apply_controlled(rot, range.start + c, range.start + j);
            ++applied;
        }
    }

    // Bit-reversal of the range finishes the transform.
    for (std::size_t k = 0; k < n / 2; ++k) {
        state.swap_qubits(range.start + k, range.start + n - 1 - k);
        ++applied;
    }
    return applied;
}

std::uint64_t gate_count(std::size_t range_count) {
    if (range_count < 1) {
        throw DomainError("gate_count: range must hold at least one qubit");
    }
    const std::uint64_t n = range_count;
    return n * (n + 1) / 2 + n / 2;
}

} // namespace qsim::qft
