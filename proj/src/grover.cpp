#include "qsim/grover.hpp"

#include "qsim/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qsim::grover {

namespace {

bool is_power_of_two(std::uint64_t x) {
    return x != 0 && (x & (x - 1)) == 0;
}

double success_after(std::uint64_t iterations, double theta) {
    const double angle = (2.0 * static_cast<double>(iterations) + 1.0) * theta;
    const double s = std::sin(angle);
    return s * s;
}

} // namespace

StateVector prepare_uniform(std::size_t num_qubits) {
    if (num_qubits < 1) {
        throw DomainError("prepare_uniform: register needs at least one qubit");
    }
    if (num_qubits > max_qubits()) {
        throw CapacityError("prepare_uniform: register exceeds the qubit guard");
    }
    const std::uint64_t dim = std::uint64_t(1) << num_qubits;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    return StateVector::from_amplitudes(std::vector<Amplitude>(dim, Amplitude(amp, 0.0)));
}

void apply_phase_oracle(StateVector& state, std::uint64_t marked) {
    if (marked >= state.dimension()) {
        throw DomainError("apply_phase_oracle: marked index out of range");
    }
    state.raw_amplitudes()[marked] = -state.raw_amplitudes()[marked];
}

void apply_diffusion(StateVector& state) {
    std::vector<Amplitude>& amps = state.raw_amplitudes();
    Amplitude mean(0.0, 0.0);
    for (const Amplitude& a : amps) {
        mean += a;
    }
    mean /= static_cast<double>(amps.size());
    const Amplitude twice_mean = 2.0 * mean;
    for (Amplitude& a : amps) {
        a = twice_mean - a;
    }
}

GroverPlan optimal_iterations(std::uint64_t space_size, std::uint64_t marked) {
    if (space_size < 2 || !is_power_of_two(space_size)) {
        throw DomainError("optimal_iterations: space size must be a power of two >= 2");
    }
    if (marked >= space_size) {
        throw DomainError("optimal_iterations: marked index out of range");
    }
    GroverPlan plan;
    plan.space_size = space_size;
    plan.marked = marked;
    while ((std::uint64_t(1) << plan.num_qubits) < space_size) {
        ++plan.num_qubits;
    }
    plan.theta = std::asin(1.0 / std::sqrt(static_cast<double>(space_size)));
    const double ideal = 0.25 * (std::numbers::pi / plan.theta - 2.0);
    plan.iterations = ideal <= 0.0 ? 0 : static_cast<std::uint64_t>(std::llround(ideal));
    plan.predicted_success = success_after(plan.iterations, plan.theta);
    return plan;
}

SearchResult search(std::size_t num_qubits, std::uint64_t marked, std::uint64_t shots,
                    RandomEngine& rng, std::optional<std::uint64_t> iterations_override) {
    if (shots < 1) {
        throw DomainError("search: shots must be >= 1");
    }
    StateVector state = prepare_uniform(num_qubits);
    GroverPlan plan = optimal_iterations(state.dimension(), marked);
    if (iterations_override) {
        plan.iterations = *iterations_override;
        plan.predicted_success = success_after(plan.iterations, plan.theta);
    }
    for (std::uint64_t i = 0; i < plan.iterations; ++i) {
        apply_phase_oracle(state, marked);
        apply_diffusion(state);
    }
    return SearchResult{plan, state.sample_counts(shots, rng)};
}

} // namespace qsim::grover
