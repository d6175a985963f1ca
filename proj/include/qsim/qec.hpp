#pragma once

#include "qsim/random.hpp"
#include "qsim/state_vector.hpp"

#include <cstdint>
#include <span>

namespace qsim::qec {

/// Three-qubit repetition codes. PhaseFlip is BitFlip conjugated by
/// Hadamards on all three physical qubits.
enum class CodeKind { BitFlip, PhaseFlip };

enum class ErrorLocation { None, Qubit0, Qubit1, Qubit2 };

/// Two stabilizer parities and the single-error location they imply:
/// (0,0) -> None, (1,0) -> Qubit0, (1,1) -> Qubit1, (0,1) -> Qubit2.
struct SyndromeResult {
    bool s1 = false; // parity of qubits 0,1
    bool s2 = false; // parity of qubits 1,2
    ErrorLocation inferred = ErrorLocation::None;
};

ErrorLocation infer_location(bool s1, bool s2);

/// Spreads one logical qubit onto three physical qubits:
/// BitFlip: a|0> + b|1> -> a|000> + b|111> (two controlled-X);
/// PhaseFlip: the same followed by H on every physical qubit.
StateVector encode(const StateVector& logical, CodeKind kind);

/// Projectively measures the two stabilizer parities (Z0Z1/Z1Z2 for BitFlip,
/// the X-basis counterparts for PhaseFlip) in place. The parities commute
/// with the logical operators, so the stored superposition survives.
SyndromeResult measure_syndrome(StateVector& state, CodeKind kind, RandomEngine& rng);

/// Reapplies the inferred Pauli (X for BitFlip, Z for PhaseFlip) on the
/// flagged qubit; a second application of the same error reverts it.
void recover(StateVector& state, const SyndromeResult& syndrome, CodeKind kind);

/// Classical redundancy baseline: majority of exactly three bits.
int majority_vote(std::span<const int> bits);

/// Monte-Carlo estimate of the code's failure rate: encode |0>, inject the
/// code's own error type with probability p per qubit, run syndrome +
/// recovery, count trajectories whose fidelity drops below 1 - 1e-9.
/// The analytic reference is 3p^2 - 2p^3 (two or more hits).
double logical_error_rate(CodeKind kind, double p, std::uint64_t trials, RandomEngine& rng);

} // namespace qsim::qec
