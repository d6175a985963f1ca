#include "qsim/qec.hpp"

#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/noise.hpp"

#include <cmath>
#include <vector>

namespace qsim::qec {

namespace {

/// Projective measurement of the Z-parity of two qubits. Returns the parity
/// bit and collapses the state onto the matching subspace.
bool measure_z_parity(StateVector& state, std::size_t qubit_a, std::size_t qubit_b,
                      RandomEngine& rng) {
    const std::uint64_t mask_a = std::uint64_t(1) << qubit_a;
    const std::uint64_t mask_b = std::uint64_t(1) << qubit_b;
    std::vector<Amplitude>& amps = state.raw_amplitudes();

    double weight[2] = {0.0, 0.0};
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const int parity = ((i & mask_a) != 0) ^ ((i & mask_b) != 0);
        weight[parity] += std::norm(amps[i]);
    }
    const double total = weight[0] + weight[1];
    if (total < kCollapseEpsilon) {
        throw DegenerateStateError("measure_z_parity: state has zero weight");
    }

    int outcome;
    if (weight[1] <= kCollapseEpsilon) {
        outcome = 0;
    } else if (weight[0] <= kCollapseEpsilon) {
        outcome = 1;
    } else {
        outcome = uniform_double(rng) * total < weight[0] ? 0 : 1;
    }

    const double scale = 1.0 / std::sqrt(weight[outcome]);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const int parity = ((i & mask_a) != 0) ^ ((i & mask_b) != 0);
        amps[i] = parity == outcome ? amps[i] * scale : Amplitude(0.0, 0.0);
    }
    return outcome == 1;
}

void hadamard_all(StateVector& state) {
    const Gate2x2 h = gates::hadamard();
    for (std::size_t qubit = 0; qubit < state.num_qubits(); ++qubit) {
        state.apply_1q(h, qubit);
    }
}

void check_code_state(const StateVector& state) {
    if (state.num_qubits() != 3) {
        throw DomainError("repetition code states have exactly 3 qubits");
    }
}

} // namespace

ErrorLocation infer_location(bool s1, bool s2) {
    if (s1 && !s2) {
        return ErrorLocation::Qubit0;
    }
    if (s1 && s2) {
        return ErrorLocation::Qubit1;
    }
    if (!s1 && s2) {
        return ErrorLocation::Qubit2;
    }
    return ErrorLocation::None;
}

StateVector encode(const StateVector& logical, CodeKind kind) {
    if (logical.num_qubits() != 1) {
        throw DomainError("encode: logical input must be a single qubit");
    }
    std::vector<Amplitude> amps(8, Amplitude(0.0, 0.0));
    amps[0] = logical.amplitude(0);
    amps[1] = logical.amplitude(1);
    StateVector state = StateVector::from_amplitudes(std::move(amps));

    const Gate2x2 x = gates::pauli_x();
    state.apply_controlled(x, 0, 1);
    state.apply_controlled(x, 0, 2);
    if (kind == CodeKind::PhaseFlip) {
        hadamard_all(state);
    }
    return state;
}

SyndromeResult measure_syndrome(StateVector& state, CodeKind kind, RandomEngine& rng) {
    check_code_state(state);
    if (kind == CodeKind::PhaseFlip) {
        hadamard_all(state); // X-basis parities = Hadamard-conjugated Z parities
    }
    SyndromeResult result;
    result.s1 = measure_z_parity(state, 0, 1, rng);
    result.s2 = measure_z_parity(state, 1, 2, rng);
    result.inferred = infer_location(result.s1, result.s2);
    if (kind == CodeKind::PhaseFlip) {
        hadamard_all(state);
    }
    return result;
}

void recover(StateVector& state, const SyndromeResult& syndrome, CodeKind kind) {
    check_code_state(state);
    if (syndrome.inferred == ErrorLocation::None) {
        return;
    }
    const std::size_t qubit = syndrome.inferred == ErrorLocation::Qubit0 ? 0
                            : syndrome.inferred == ErrorLocation::Qubit1 ? 1
                                                                         : 2;
    state.apply_1q(kind == CodeKind::BitFlip ? gates::pauli_x() : gates::pauli_z(), qubit);
}

int majority_vote(std::span<const int> bits) {
    if (bits.size() != 3) {
        throw DomainError("majority_vote: exactly three bits expected");
    }
    int ones = 0;
    for (int bit : bits) {
        if (bit != 0 && bit != 1) {
            throw DomainError("majority_vote: bits must be 0 or 1");
        }
        ones += bit;
    }
    return ones >= 2 ? 1 : 0;
}

double logical_error_rate(CodeKind kind, double p, std::uint64_t trials, RandomEngine& rng) {
    if (p < 0.0 || p > 0.5) {
        throw DomainError("logical_error_rate: p must lie in [0, 0.5]");
    }
    if (trials < 1) {
        throw DomainError("logical_error_rate: trials must be >= 1");
    }

    const StateVector clean = encode(StateVector::basis_state(1, 0), kind);
    noise::NoiseModel model;
    if (kind == CodeKind::BitFlip) {
        model.p_x = p;
    } else {
        model.p_z = p;
    }

    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        StateVector state = clean;
        noise::apply_pauli_noise(state, model, QubitRange{0, 3}, rng);
        const SyndromeResult syndrome = measure_syndrome(state, kind, rng);
        recover(state, syndrome, kind);
        if (fidelity(state, clean) < 1.0 - 1e-9) {
            ++failures;
        }
    }
    return static_cast<double>(failures) / static_cast<double>(trials);
}

} // namespace qsim::qec
