#pragma once

#include "qsim/random.hpp"
#include "qsim/state_vector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsim::shor {

/// Greatest common divisor by the Euclidean algorithm. a = b = 0 is invalid.
std::uint64_t euclid_gcd(std::uint64_t a, std::uint64_t b);

/// Step before period finding: gcd(a, n) != 1 already hands us a factor.
/// Returns that factor, or nullopt when a is coprime and a period is needed.
/// Requires 1 < a < n.
std::optional<std::uint64_t> classify_candidate(std::uint64_t a, std::uint64_t n);

/// Irreducible fraction (gcd(numerator, denominator) = 1 by construction).
struct Fraction {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
};

/// Convergents of y/q with denominator <= bound, best approximation last.
/// The final convergent's denominator is the period candidate r'.
std::vector<Fraction> continued_fraction_denominators(std::uint64_t y, std::uint64_t q,
                                                      std::uint64_t bound);

/// Probability of measuring input value y together with f(x0) after the
/// transform, for exact period r over a q-dimensional input register:
///   q^{-2} * |sum_b exp(-2*pi*i*r*b*y/q)|^2,  b over the values with x0+rb < q.
/// Evaluated in closed form (geometric sum). When r divides q this is 1/r^2
/// for every y with y*r/q integral, independent of x0.
double predicted_measurement_prob(std::uint64_t y, std::uint64_t r, std::uint64_t q,
                                  std::uint64_t x0 = 0);

/// True iff a^r = 1 (mod n). r must be >= 1.
bool verify_period(std::uint64_t a, std::uint64_t n, std::uint64_t r_candidate);

/// Fallback candidates when r' fails verification: multiples k*r' for
/// k = 2..ceil(log2 n), then convergent denominators of the measured values
/// y+-1 and y+-2. Deduplicated, everything capped at n.
std::vector<std::uint64_t> expand_candidates(std::uint64_t y, std::uint64_t q,
                                             std::uint64_t r_prime, std::uint64_t n);

/// Even r with a^{r/2} != -1 (mod n) splits n into gcd(a^{r/2} -+ 1, n).
struct FactorPair {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
};

/// Requires a^r = 1 (mod n). Returns nullopt (retry with a new base) when r
/// is odd or a^{r/2} = +-1 (mod n); otherwise both factors are nontrivial.
std::optional<FactorPair> extract_factors(std::uint64_t a, std::uint64_t n, std::uint64_t r);

struct ShorConfig {
    /// Input register of ceil(log2 n) qubits as described, instead of the
    /// reliable 2*ceil(log2 n) that makes continued fractions sound.
    bool paper_mode = false;
    std::uint64_t max_attempts = 32;
    std::uint64_t shots_per_attempt = 8;
    std::uint64_t seed = 0;
};

/// Geometry of the period-finding circuit for a given modulus.
struct PeriodRegisters {
    std::size_t input_qubits = 0;
    std::size_t output_qubits = 0;
    std::uint64_t q = 0; // 2^input_qubits
    QubitRange input() const { return {0, input_qubits}; }
    QubitRange output() const { return {input_qubits, output_qubits}; }
};

PeriodRegisters period_registers(std::uint64_t n, bool paper_mode);

/// Uniform superposition over the input register with the modular
/// exponentiation oracle already applied: sum_x |x>|a^x mod n> / sqrt(q).
StateVector prepare_period_state(std::uint64_t a, std::uint64_t n, const PeriodRegisters& regs);

/// One subroutine shot on a copy of the prepared state: measure the output
/// register, Fourier-transform the input register, measure y.
std::uint64_t sample_measured_y(const StateVector& prepared, const PeriodRegisters& regs,
                                RandomEngine& rng);

/// Runs the subroutine up to shots_per_attempt times and returns the period
/// candidates recovered by continued fractions, most plausible first,
/// deduplicated across shots.
std::vector<std::uint64_t> quantum_period_find(std::uint64_t a, std::uint64_t n,
                                               const ShorConfig& config, RandomEngine& rng);

/// Trace of one factoring run.
struct ShorRun {
    std::uint64_t n = 0;
    std::uint64_t base = 0; // last a tried
    std::uint64_t q = 0;    // input-register modulus of the last quantum stage
    std::vector<std::uint64_t> measured_y;
    std::vector<std::uint64_t> candidate_periods;
    std::optional<std::uint64_t> resolved_period;
    std::optional<FactorPair> factors; // p <= q, p*q = n
    std::uint64_t attempts = 0;
    std::string failure_reason; // empty on success
};

/// Full pipeline: classical pre-checks (even n, prime, perfect power), then
/// repeated random-base attempts of quantum period finding plus factor
/// extraction. n must be >= 4.
ShorRun factor(std::uint64_t n, const ShorConfig& config, RandomEngine& rng);

} // namespace qsim::shor
