#include "qsim/errors.hpp"
#include "qsim/modexp.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace qsim;

namespace {

/// Reference: plain iterated multiplication.
std::uint64_t slow_modpow(std::uint64_t a, std::uint64_t x, std::uint64_t m) {
    std::uint64_t value = 1 % m;
    for (std::uint64_t i = 0; i < x; ++i) {
        value = static_cast<std::uint64_t>((static_cast<__uint128_t>(value) * (a % m)) % m);
    }
    return value;
}

} // namespace

TEST_CASE("modpow") {
    CHECK(modexp::modpow(42, 0, 15) == 1);
    CHECK(modexp::modpow(7, 4, 15) == 1);  // 7 -> 4 -> 13 -> 1
    CHECK(modexp::modpow(7, 3, 15) == 13); // 7*7 = 49 = 4; 4*7 = 28 = 13
    CHECK(modexp::modpow(2, 63, 100) == slow_modpow(2, 63, 100));
    CHECK_THROWS_AS(modexp::modpow(3, 4, 1), DomainError);

    SUBCASE("matches iterated multiplication") {
        for (std::uint64_t a = 2; a <= 9; ++a) {
            for (std::uint64_t x = 0; x <= 40; ++x) {
                CHECK(modexp::modpow(a, x, 97) == slow_modpow(a, x, 97));
            }
        }
    }
}

TEST_CASE("classical_period") {
    CHECK(modexp::classical_period(7, 15) == 4);
    CHECK(modexp::classical_period(4, 15) == 2); // 4^2 = 16 = 1
    CHECK(modexp::classical_period(2, 21) == 6); // 2,4,8,16,11,1
    CHECK_THROWS_AS(modexp::classical_period(6, 15), DomainError);
    CHECK_THROWS_AS(modexp::classical_period(2, 2), DomainError);

    SUBCASE("minimality and group-order divisibility, exhaustively") {
        for (std::uint64_t n : {15ULL, 21ULL, 33ULL, 35ULL}) {
            std::uint64_t group_order = 0; // phi(n)
            for (std::uint64_t a = 1; a < n; ++a) {
                if (std::gcd(a, n) == 1) {
                    ++group_order;
                }
            }
            for (std::uint64_t a = 2; a < n; ++a) {
                if (std::gcd(a, n) != 1) {
                    continue;
                }
                const std::uint64_t r = modexp::classical_period(a, n);
                CHECK(modexp::modpow(a, r, n) == 1);
                for (std::uint64_t shorter = 1; shorter < r; ++shorter) {
                    CHECK(modexp::modpow(a, shorter, n) != 1);
                }
                CHECK(group_order % r == 0);
            }
        }
    }
}

TEST_CASE("modular exponentiation oracle") {
    const QubitRange input{0, 4};
    const QubitRange output{4, 4};

    SUBCASE("basis states map to |x>|a^x mod n>") {
        StateVector zero = StateVector::basis_state(8, 0);
        modexp::apply_modexp_oracle(zero, {7, 15, input, output});
        CHECK(zero.probability(0 | (1 << 4)) == doctest::Approx(1.0)); // |0>|1>

        StateVector three = StateVector::basis_state(8, 3);
        modexp::apply_modexp_oracle(three, {7, 15, input, output});
        CHECK(three.probability(3 | (13 << 4)) == doctest::Approx(1.0)); // |3>|13>
    }

    SUBCASE("uniform input cycles through 1, 7, 4, 13") {
        StateVector state = StateVector::basis_state(8, 0);
        const Gate2x2 h = gates::hadamard();
        for (std::size_t q = 0; q < 4; ++q) {
            state.apply_1q(h, q);
        }
        modexp::apply_modexp_oracle(state, {7, 15, input, output});
        const std::uint64_t cycle[4] = {1, 7, 4, 13};
        for (std::uint64_t x = 0; x < 16; ++x) {
            const std::uint64_t idx = x | (cycle[x % 4] << 4);
            CHECK(state.probability(idx) == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
        }
        CHECK(std::abs(state.norm() - 1.0) < 1e-12);
    }

    SUBCASE("agreement with modpow, exhaustive over the input register") {
        const QubitRange wide_input{0, 8};
        const QubitRange wide_output{8, 4};
        for (std::uint64_t x = 0; x < 256; x += 7) { // stride keeps it quick
            StateVector state = StateVector::basis_state(12, x);
            modexp::apply_modexp_oracle(state, {7, 15, wide_input, wide_output});
            const std::uint64_t expected = x | (modexp::modpow(7, x, 15) << 8);
            CHECK(state.probability(expected) == doctest::Approx(1.0));
        }
    }

    SUBCASE("permutation: distinct inputs land on distinct outputs") {
        StateVector state = StateVector::basis_state(8, 0);
        const Gate2x2 h = gates::hadamard();
        for (std::size_t q = 0; q < 4; ++q) {
            state.apply_1q(h, q);
        }
        modexp::apply_modexp_oracle(state, {2, 15, input, output});
        std::set<std::uint64_t> occupied;
        for (std::uint64_t i = 0; i < state.dimension(); ++i) {
            if (state.probability(i) > 1e-12) {
                occupied.insert(i);
            }
        }
        CHECK(occupied.size() == 16);
    }

    SUBCASE("contract and domain errors") {
        StateVector dirty = StateVector::basis_state(8, 1 << 4); // output already |1>
        CHECK_THROWS_AS(modexp::apply_modexp_oracle(dirty, {7, 15, input, output}),
                        ContractViolation);

        StateVector state = StateVector::basis_state(8, 0);
        CHECK_THROWS_AS(modexp::apply_modexp_oracle(state, {7, 15, {0, 5}, {4, 4}}),
                        DomainError); // overlap
        CHECK_THROWS_AS(modexp::apply_modexp_oracle(state, {6, 15, input, output}),
                        DomainError); // gcd != 1
        CHECK_THROWS_AS(modexp::apply_modexp_oracle(state, {7, 15, input, {4, 3}}),
                        DomainError); // 2^3 < 15
    }
}
