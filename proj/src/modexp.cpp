#include "qsim/modexp.hpp"

#include "qsim/errors.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace qsim::modexp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

} // namespace

std::uint64_t modpow(std::uint64_t a, std::uint64_t x, std::uint64_t m) {
    if (m < 2) {
        throw DomainError("modpow: modulus must be >= 2");
    }
    std::uint64_t result = 1;
    std::uint64_t square = a % m;
    while (x > 0) {
        if (x & 1) {
            result = mulmod(result, square, m);
        }
        square = mulmod(square, square, m);
        x >>= 1;
    }
    return result;
}

std::uint64_t classical_period(std::uint64_t a, std::uint64_t n) {
    if (n < 3) {
        throw DomainError("classical_period: modulus must be >= 3");
    }
    if (std::gcd(a, n) != 1) {
        throw DomainError("classical_period: base and modulus must be coprime");
    }
    std::uint64_t value = a % n;
    std::uint64_t r = 1;
    while (value != 1) {
        value = mulmod(value, a % n, n);
        ++r;
    }
    return r;
}

void apply_modexp_oracle(StateVector& state, const ModExpOracle& oracle) {
    const QubitRange& in = oracle.input;
    const QubitRange& out = oracle.output;
    if (in.start + in.count > state.num_qubits() || out.start + out.count > state.num_qubits()) {
        throw DomainError("apply_modexp_oracle: register out of range");
    }
    const bool disjoint = in.start + in.count <= out.start || out.start + out.count <= in.start;
    if (!disjoint) {
        throw DomainError("apply_modexp_oracle: input and output registers overlap");
    }
    if (oracle.modulus < 2 || std::gcd(oracle.base, oracle.modulus) != 1) {
        throw DomainError("apply_modexp_oracle: base must be coprime to the modulus");
    }
    if (out.count >= 64 || (std::uint64_t(1) << out.count) <= oracle.modulus) {
        throw DomainError("apply_modexp_oracle: output register cannot hold every residue");
    }

    // f(x) table for every input value, built by iterated multiplication.
    const std::uint64_t input_values = std::uint64_t(1) << in.count;
    std::vector<std::uint64_t> table(input_values);
    std::uint64_t value = 1 % oracle.modulus;
    for (std::uint64_t x = 0; x < input_values; ++x) {
        table[x] = value;
        value = static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(value) * (oracle.base % oracle.modulus)) % oracle.modulus);
    }

    const std::uint64_t dim = state.dimension();
    std::vector<Amplitude>& amps = state.raw_amplitudes();
    std::vector<Amplitude> next(dim, Amplitude(0.0, 0.0));
    for (std::uint64_t i = 0; i < dim; ++i) {
        const Amplitude a = amps[i];
        if (a == Amplitude(0.0, 0.0)) {
            continue;
        }
        if (StateVector::range_bits(i, out) != 0) {
            throw ContractViolation("apply_modexp_oracle: output register not cleared");
        }
        const std::uint64_t x = StateVector::range_bits(i, in);
        next[i | (table[x] << out.start)] = a;
    }
    amps = std::move(next);
}

} // namespace qsim::modexp
