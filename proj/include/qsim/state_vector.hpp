#pragma once

#include "qsim/gates.hpp"
#include "qsim/random.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace qsim {

/// Normalization drift allowed after construction, gate application and collapse.
inline constexpr double kNormTolerance = 1e-10;

/// Branch weights at or below this are treated as zero during collapse.
inline constexpr double kCollapseEpsilon = 1e-15;

/// Hard cap on register width (2^L amplitudes are allocated up front).
/// Defaults to 30; the QSIM_MAX_QUBITS environment variable overrides it.
std::size_t max_qubits();

/// Contiguous run of qubits. Qubit k is bit k of the basis index
/// (little-endian), so a range's basis value is plain integer arithmetic.
struct QubitRange {
    std::size_t start = 0;
    std::size_t count = 1;
};

/// Full state of an L-qubit register: 2^L complex amplitudes.
class StateVector {
public:
    static StateVector basis_state(std::size_t num_qubits, std::uint64_t index);

    /// Adopts an amplitude vector. Length must be a power of two and the
    /// norm must already be 1 within kNormTolerance; entries must be finite.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t dimension() const { return std::uint64_t(1) << num_qubits_; }
    const Amplitude& amplitude(std::uint64_t index) const { return amps_[index]; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    double probability(std::uint64_t index) const { return std::norm(amps_[index]); }
    double norm() const;

    /// Applies a single-qubit unitary to `target`. The gate must pass the
    /// unitarity check; everything downstream relies on norm preservation.
    void apply_1q(const Gate2x2& gate, std::size_t target);

    /// Applies the gate to `target` on the subspace where `control` is 1.
    void apply_controlled(const Gate2x2& gate, std::size_t control, std::size_t target);

    /// Exchanges two qubit labels (basis-index bit swap).
    void swap_qubits(std::size_t a, std::size_t b);

    /// Projective measurement of a qubit range. Samples an outcome from the
    /// marginal distribution, zeroes every non-matching amplitude and
    /// renormalizes by the square root of the branch probability.
    /// Returns the measured basis value of the range.
    std::uint64_t measure(const QubitRange& range, RandomEngine& rng);

    /// Full-register measurement: measure({0, L}).
    std::uint64_t measure_all(RandomEngine& rng);

    /// Non-destructive repeated sampling from the |amplitude|^2 distribution.
    std::map<std::uint64_t, std::uint64_t> sample_counts(std::uint64_t shots,
                                                         RandomEngine& rng) const;

    /// Extracts the range's basis value from a global basis index.
    static std::uint64_t range_bits(std::uint64_t index, const QubitRange& range) {
        return (index >> range.start) & ((std::uint64_t(1) << range.count) - 1);
    }

    // Raw mutable access for module-internal kernels (oracle permutations,
    // mean inversion). Callers are responsible for restoring the invariants.
    std::vector<Amplitude>& raw_amplitudes() { return amps_; }

private:
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    void check_target(std::size_t target) const;
    void check_range(const QubitRange& range) const;

    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

struct MeasurementOutcome {
    std::uint64_t bits = 0;
    StateVector collapsed;
};

/// Value-returning form of StateVector::measure: collapses a copy.
MeasurementOutcome measure_range(StateVector state, const QubitRange& range, RandomEngine& rng);

/// <a|b>. Both states must have the same width.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

} // namespace qsim
