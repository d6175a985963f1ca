#pragma once

#include "qsim/state_vector.hpp"

#include <cstdint>

namespace qsim::modexp {

/// a^x mod m by repeated squaring, O(log x) multiplications. m >= 2.
std::uint64_t modpow(std::uint64_t a, std::uint64_t x, std::uint64_t m);

/// Smallest r >= 1 with a^r = 1 (mod n), found by brute-force iteration.
/// Requires gcd(a, n) = 1 and n >= 3. Serves as the classical reference
/// for the quantum period-finding pipeline.
std::uint64_t classical_period(std::uint64_t a, std::uint64_t n);

/// Quantum oracle |x>|0> -> |x>|a^x mod n> over two disjoint registers.
struct ModExpOracle {
    std::uint64_t base = 0;
    std::uint64_t modulus = 0;
    QubitRange input;
    QubitRange output;
};

/// Permutes basis amplitudes according to the oracle. Every amplitude-bearing
/// basis state must have a cleared output register; amplitudes are moved,
/// never mixed, so the norm is untouched.
void apply_modexp_oracle(StateVector& state, const ModExpOracle& oracle);

} // namespace qsim::modexp
