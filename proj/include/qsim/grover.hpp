#pragma once

#include "qsim/random.hpp"
#include "qsim/state_vector.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace qsim::grover {

/// Iteration schedule for a single-match search over 2^L entries.
/// theta satisfies sin(theta) = 1/sqrt(N); every oracle+diffusion round
/// rotates the state by 2*theta toward the marked entry.
struct GroverPlan {
    std::size_t num_qubits = 0;
    std::uint64_t space_size = 0; // 2^num_qubits
    std::uint64_t marked = 0;
    double theta = 0.0;
    std::uint64_t iterations = 0; // round((pi/theta - 2) / 4)
    double predicted_success = 0.0; // sin^2((2r+1) theta)
};

/// |s> = sum_x |x> / sqrt(N).
StateVector prepare_uniform(std::size_t num_qubits);

/// Flips the sign of the marked basis amplitude, leaving the rest alone.
void apply_phase_oracle(StateVector& state, std::uint64_t marked);

/// Inversion about the mean: a_x -> 2*mean(a) - a_x. Algebraic form of
/// the reflection 2|s><s| - I.
void apply_diffusion(StateVector& state);

/// Schedule for a search space of `space_size` = 2^L >= 2 entries.
GroverPlan optimal_iterations(std::uint64_t space_size, std::uint64_t marked = 0);

struct SearchResult {
    GroverPlan plan;
    std::map<std::uint64_t, std::uint64_t> counts;
};

/// Prepares |s>, runs the scheduled number of oracle+diffusion iterations
/// (or an explicit override) and samples `shots` measurements.
SearchResult search(std::size_t num_qubits, std::uint64_t marked, std::uint64_t shots,
                    RandomEngine& rng,
                    std::optional<std::uint64_t> iterations_override = std::nullopt);

} // namespace qsim::grover
