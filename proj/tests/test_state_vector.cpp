#include "qsim/errors.hpp"
#include "qsim/state_vector.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>

using namespace qsim;

namespace {
const Amplitude kZero(0.0, 0.0);
const Amplitude kOne(1.0, 0.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector bell_pair() {
    std::vector<Amplitude> amps(4, kZero);
    amps[0] = Amplitude(kInvSqrt2, 0.0);
    amps[3] = Amplitude(kInvSqrt2, 0.0);
    return StateVector::from_amplitudes(std::move(amps));
}
} // namespace

TEST_CASE("basis state construction") {
    const StateVector s1 = StateVector::basis_state(1, 0);
    CHECK(s1.amplitude(0) == kOne);
    CHECK(s1.amplitude(1) == kZero);

    const StateVector s2 = StateVector::basis_state(2, 3);
    CHECK(s2.amplitude(3) == kOne);
    CHECK(s2.probability(0) == 0.0);

    CHECK_THROWS_AS(StateVector::basis_state(35, 0), CapacityError);
    CHECK_THROWS_AS(StateVector::basis_state(2, 4), DomainError);
    CHECK_THROWS_AS(StateVector::basis_state(0, 0), DomainError);
}

TEST_CASE("QSIM_MAX_QUBITS overrides the capacity guard") {
    REQUIRE(setenv("QSIM_MAX_QUBITS", "5", 1) == 0);
    CHECK(max_qubits() == 5);
    CHECK_THROWS_AS(StateVector::basis_state(6, 0), CapacityError);
    REQUIRE(unsetenv("QSIM_MAX_QUBITS") == 0);
    CHECK(max_qubits() == 30);
}

TEST_CASE("from_amplitudes validates its input") {
    CHECK_THROWS_AS(StateVector::from_amplitudes({kOne, kZero, kZero}), DomainError);
    CHECK_THROWS_AS(StateVector::from_amplitudes({Amplitude(0.5, 0.0), kZero}), DomainError);
    const StateVector ok = StateVector::from_amplitudes({Amplitude(0.6, 0.0), Amplitude(0.0, 0.8)});
    CHECK(ok.num_qubits() == 1);
}

TEST_CASE("single-qubit gate application") {
    SUBCASE("Z on qubit 1 of a Bell pair flips the |11> sign") {
        StateVector state = bell_pair();
        state.apply_1q(gates::pauli_z(), 1);
        CHECK(test_util::close(state.amplitude(0), Amplitude(kInvSqrt2, 0.0), 1e-15));
        CHECK(test_util::close(state.amplitude(3), Amplitude(-kInvSqrt2, 0.0), 1e-15));
    }
    SUBCASE("X on |1> returns |0>") {
        StateVector state = StateVector::basis_state(1, 1);
        state.apply_1q(gates::pauli_x(), 0);
        CHECK(state.amplitude(0) == kOne);
    }
    SUBCASE("errors") {
        StateVector state = StateVector::basis_state(2, 0);
        CHECK_THROWS_AS(state.apply_1q(gates::hadamard(), 2), DomainError);
        const Gate2x2 bad{kOne, kZero, kZero, Amplitude(2.0, 0.0)};
        CHECK_THROWS_AS(state.apply_1q(bad, 0), ContractViolation);
    }
}

TEST_CASE("controlled gate application") {
    SUBCASE("CNOT truth table") {
        StateVector state = StateVector::basis_state(2, 0b10); // control qubit 1 set
        state.apply_controlled(gates::pauli_x(), 1, 0);
        CHECK(state.amplitude(0b11) == kOne);

        StateVector idle = StateVector::basis_state(2, 0b01); // control clear
        idle.apply_controlled(gates::pauli_x(), 1, 0);
        CHECK(idle.amplitude(0b01) == kOne);
    }
    SUBCASE("entangles a superposed control") {
        std::vector<Amplitude> amps(4, kZero);
        amps[0b00] = Amplitude(kInvSqrt2, 0.0);
        amps[0b10] = Amplitude(kInvSqrt2, 0.0);
        StateVector state = StateVector::from_amplitudes(std::move(amps));
        state.apply_controlled(gates::pauli_x(), 1, 0);
        CHECK(test_util::close(state.amplitude(0b00), Amplitude(kInvSqrt2, 0.0), 1e-15));
        CHECK(test_util::close(state.amplitude(0b11), Amplitude(kInvSqrt2, 0.0), 1e-15));
    }
    SUBCASE("control must differ from target") {
        StateVector state = StateVector::basis_state(2, 0);
        CHECK_THROWS_AS(state.apply_controlled(gates::pauli_x(), 0, 0), DomainError);
    }
}

TEST_CASE("strided kernels agree with dense tensor-product operators") {
    RandomEngine rng(777);
    for (std::size_t num_qubits = 2; num_qubits <= 4; ++num_qubits) {
        for (int trial = 0; trial < 40; ++trial) {
            const StateVector original = test_util::random_state(num_qubits, rng);
            const Gate2x2 gate = test_util::random_unitary(rng);
            const auto target = static_cast<std::size_t>(
                uniform_u64(rng, 0, num_qubits - 1));

            StateVector fast = original;
            fast.apply_1q(gate, target);
            const auto dense =
                test_util::dense_apply(test_util::dense_1q_operator(num_qubits, gate, target),
                                       original);
            for (std::uint64_t i = 0; i < original.dimension(); ++i) {
                CHECK(test_util::close(fast.amplitude(i), dense[i], 1e-12));
            }

            // Gate locality: every other qubit keeps its marginal.
            for (std::size_t q = 0; q < num_qubits; ++q) {
                if (q == target) {
                    continue;
                }
                CHECK(std::abs(test_util::qubit_marginal(fast, q) -
                               test_util::qubit_marginal(original, q)) < 1e-12);
            }

            std::size_t control = target;
            while (control == target) {
                control = static_cast<std::size_t>(uniform_u64(rng, 0, num_qubits - 1));
            }
            StateVector fast_controlled = original;
            fast_controlled.apply_controlled(gate, control, target);
            const auto dense_controlled = test_util::dense_apply(
                test_util::dense_controlled_operator(num_qubits, gate, control, target),
                original);
            for (std::uint64_t i = 0; i < original.dimension(); ++i) {
                CHECK(test_util::close(fast_controlled.amplitude(i), dense_controlled[i], 1e-12));
            }
        }
    }
}

TEST_CASE("unitarity preserves the norm") {
    RandomEngine rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        StateVector state = test_util::random_state(4, rng);
        state.apply_1q(test_util::random_unitary(rng), uniform_u64(rng, 0, 3));
        CHECK(std::abs(state.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("measurement of a basis state is deterministic") {
    RandomEngine rng(5);
    StateVector state = StateVector::basis_state(2, 0);
    CHECK(state.measure_all(rng) == 0);
    CHECK(state.amplitude(0) == kOne);
}

TEST_CASE("partial measurement of a Bell pair collapses both qubits") {
    RandomEngine rng(99);
    int seen[2] = {0, 0};
    for (int trial = 0; trial < 200; ++trial) {
        StateVector state = bell_pair();
        const std::uint64_t bit = state.measure(QubitRange{0, 1}, rng);
        REQUIRE(bit <= 1);
        ++seen[bit];
        const StateVector expected = StateVector::basis_state(2, bit == 0 ? 0b00 : 0b11);
        CHECK(fidelity(state, expected) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
}

TEST_CASE("collapse outcome frequencies match the marginal (chi-square)") {
    RandomEngine rng(2024);
    const Gate2x2 h = gates::hadamard();
    StateVector uniform = StateVector::basis_state(3, 0);
    for (std::size_t q = 0; q < 3; ++q) {
        uniform.apply_1q(h, q);
    }
    const std::uint64_t trials = 100000;
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t t = 0; t < trials; ++t) {
        StateVector copy = uniform;
        ++counts[copy.measure_all(rng)];
    }
    const double stat =
        test_util::chi_square(counts, std::vector<double>(8, 1.0 / 8.0), trials);
    CHECK(stat < test_util::chi_square_critical_999(7));
}

TEST_CASE("degenerate states are rejected by measurement") {
    RandomEngine rng(1);
    StateVector state = StateVector::basis_state(2, 0);
    for (auto& a : state.raw_amplitudes()) {
        a = kZero;
    }
    CHECK_THROWS_AS(state.measure_all(rng), DegenerateStateError);
}

TEST_CASE("measure_range returns the collapsed copy") {
    RandomEngine rng(7);
    const StateVector bell = bell_pair();
    const MeasurementOutcome outcome = measure_range(bell, QubitRange{1, 1}, rng);
    CHECK(outcome.bits <= 1);
    CHECK(std::abs(outcome.collapsed.norm() - 1.0) < 1e-10);
    CHECK(bell.probability(0) == doctest::Approx(0.5)); // input untouched
}

TEST_CASE("sampling statistics") {
    RandomEngine rng(4242);
    SUBCASE("deterministic state") {
        const StateVector zero = StateVector::basis_state(1, 0);
        const auto counts = zero.sample_counts(100, rng);
        REQUIRE(counts.size() == 1);
        CHECK(counts.at(0) == 100);
    }
    SUBCASE("binomial bound for the 50/50 state") {
        StateVector plus = StateVector::basis_state(1, 0);
        plus.apply_1q(gates::hadamard(), 0);
        const std::uint64_t shots = 10000;
        const auto counts = plus.sample_counts(shots, rng);
        const double sigma = std::sqrt(shots * 0.25);
        CHECK(std::abs(static_cast<double>(counts.at(0)) - 5000.0) < 5.0 * sigma);
        CHECK(std::abs(static_cast<double>(counts.at(1)) - 5000.0) < 5.0 * sigma);
        CHECK(counts.at(0) + counts.at(1) == shots);
    }
    SUBCASE("chi-square for the uniform 4-state") {
        StateVector uniform = StateVector::basis_state(2, 0);
        uniform.apply_1q(gates::hadamard(), 0);
        uniform.apply_1q(gates::hadamard(), 1);
        const std::uint64_t shots = 40000;
        const auto counts = uniform.sample_counts(shots, rng);
        const double stat =
            test_util::chi_square(counts, std::vector<double>(4, 0.25), shots);
        CHECK(stat < test_util::chi_square_critical_999(3));
    }
    SUBCASE("shots must be positive") {
        const StateVector zero = StateVector::basis_state(1, 0);
        CHECK_THROWS_AS(zero.sample_counts(0, rng), DomainError);
    }
}

TEST_CASE("identical seeds reproduce identical outcome sequences") {
    std::vector<std::uint64_t> first, second;
    for (int run = 0; run < 2; ++run) {
        RandomEngine rng(123456);
        auto& sink = run == 0 ? first : second;
        for (int trial = 0; trial < 64; ++trial) {
            StateVector state = test_util::random_state(3, rng);
            sink.push_back(state.measure_all(rng));
        }
    }
    CHECK(first == second);
}

TEST_CASE("swap_qubits exchanges basis-index bits") {
    StateVector state = StateVector::basis_state(3, 0b001);
    state.swap_qubits(0, 2);
    CHECK(state.amplitude(0b100) == kOne);
}
