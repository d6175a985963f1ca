#pragma once

#include "qsim/random.hpp"
#include "qsim/state_vector.hpp"

#include <vector>

namespace qsim::noise {

/// Per-gate, per-qubit Pauli error probabilities. p_x + p_y + p_z <= 1;
/// the remainder is the identity (no error).
struct NoiseModel {
    double p_x = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;
};

/// Per-gate error budget from the operating-time / decoherence-time ratio,
/// clamped to 1. The proportionality constant is fixed at 1.
double error_rate_estimate(double gate_time, double t2_time);

struct InjectedError {
    std::size_t qubit = 0;
    PauliAxis axis = PauliAxis::X;
};

/// Samples one stochastic Pauli trajectory: independently per qubit in the
/// range, applies X/Y/Z with the model's probabilities. The returned record
/// of what was injected makes trajectories auditable in tests.
std::vector<InjectedError> apply_pauli_noise(StateVector& state, const NoiseModel& model,
                                             const QubitRange& range, RandomEngine& rng);

} // namespace qsim::noise
