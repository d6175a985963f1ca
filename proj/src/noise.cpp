#include "qsim/noise.hpp"

#include "qsim/errors.hpp"
#include "qsim/gates.hpp"

namespace qsim::noise {

double error_rate_estimate(double gate_time, double t2_time) {
    if (!(gate_time > 0.0) || !(t2_time > 0.0)) {
        throw DomainError("error_rate_estimate: times must be positive");
    }
    const double ratio = gate_time / t2_time;
    return ratio < 1.0 ? ratio : 1.0;
}

std::vector<InjectedError> apply_pauli_noise(StateVector& state, const NoiseModel& model,
                                             const QubitRange& range, RandomEngine& rng) {
    if (model.p_x < 0.0 || model.p_y < 0.0 || model.p_z < 0.0 ||
        model.p_x + model.p_y + model.p_z > 1.0) {
        throw DomainError("apply_pauli_noise: invalid error probabilities");
    }
    if (range.count < 1 || range.start + range.count > state.num_qubits()) {
        throw DomainError("apply_pauli_noise: qubit range out of range");
    }

    std::vector<InjectedError> injected;
    for (std::size_t offset = 0; offset < range.count; ++offset) {
        const std::size_t qubit = range.start + offset;
        const double draw = uniform_double(rng);
        PauliAxis axis;
        if (draw < model.p_x) {
            axis = PauliAxis::X;
        } else if (draw < model.p_x + model.p_y) {
            axis = PauliAxis::Y;
        } else if (draw < model.p_x + model.p_y + model.p_z) {
            axis = PauliAxis::Z;
        } else {
            continue;
        }
        state.apply_1q(gates::pauli(axis), qubit);
        injected.push_back(InjectedError{qubit, axis});
    }
    return injected;
}

} // namespace qsim::noise
