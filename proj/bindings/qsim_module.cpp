#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/grover.hpp"
#include "qsim/modexp.hpp"
#include "qsim/noise.hpp"
#include "qsim/qec.hpp"
#include "qsim/qft.hpp"
#include "qsim/shor.hpp"
#include "qsim/state_vector.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

namespace py = pybind11;

namespace {

qsim::QubitRange make_range(std::size_t start, std::size_t count) {
    return qsim::QubitRange{start, count};
}

std::vector<qsim::Amplitude> amplitude_list(const qsim::StateVector& state) {
    return std::vector<qsim::Amplitude>(state.amplitudes().begin(), state.amplitudes().end());
}

} // namespace

PYBIND11_MODULE(_qsim, m) {
    m.doc() = "State-vector simulator: factoring, search, Fourier transform, "
              "repetition-code error correction";

    py::register_exception<qsim::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<qsim::CapacityError>(m, "CapacityError", PyExc_MemoryError);
    py::register_exception<qsim::ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);
    py::register_exception<qsim::DegenerateStateError>(m, "DegenerateStateError",
                                                       PyExc_RuntimeError);

    py::class_<qsim::RandomEngine>(m, "Rng")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("draw", [](qsim::RandomEngine& rng) { return rng(); });

    py::class_<qsim::Gate2x2>(m, "Gate2x2")
        .def_readonly("m00", &qsim::Gate2x2::m00)
        .def_readonly("m01", &qsim::Gate2x2::m01)
        .def_readonly("m10", &qsim::Gate2x2::m10)
        .def_readonly("m11", &qsim::Gate2x2::m11);

    m.def("hadamard", &qsim::gates::hadamard);
    m.def("pauli_x", &qsim::gates::pauli_x);
    m.def("pauli_y", &qsim::gates::pauli_y);
    m.def("pauli_z", &qsim::gates::pauli_z);
    m.def("phase_rotation", &qsim::gates::phase_rotation, py::arg("k"));
    m.def("is_unitary", &qsim::gates::is_unitary, py::arg("gate"));
    m.def("adjoint", &qsim::gates::adjoint, py::arg("gate"));
    m.def("max_qubits", &qsim::max_qubits);

    py::class_<qsim::StateVector>(m, "StateVector")
        .def_static("basis_state", &qsim::StateVector::basis_state, py::arg("num_qubits"),
                    py::arg("index"))
        .def_static(
            "from_amplitudes",
            [](const std::vector<qsim::Amplitude>& amps) {
                return qsim::StateVector::from_amplitudes(amps);
            },
            py::arg("amplitudes"))
        .def_property_readonly("num_qubits", &qsim::StateVector::num_qubits)
        .def_property_readonly("dimension", &qsim::StateVector::dimension)
        .def("amplitudes", &amplitude_list)
        .def("probability", &qsim::StateVector::probability, py::arg("index"))
        .def("norm", &qsim::StateVector::norm)
        .def("apply_1q", &qsim::StateVector::apply_1q, py::arg("gate"), py::arg("target"))
        .def("apply_controlled", &qsim::StateVector::apply_controlled, py::arg("gate"),
             py::arg("control"), py::arg("target"))
        .def("swap_qubits", &qsim::StateVector::swap_qubits, py::arg("a"), py::arg("b"))
        .def(
            "measure",
            [](qsim::StateVector& state, std::size_t start, std::size_t count,
               qsim::RandomEngine& rng) { return state.measure(make_range(start, count), rng); },
            py::arg("start"), py::arg("count"), py::arg("rng"))
        .def(
            "measure_all",
            [](qsim::StateVector& state, qsim::RandomEngine& rng) {
                return state.measure_all(rng);
            },
            py::arg("rng"))
        .def(
            "sample_counts",
            [](const qsim::StateVector& state, std::uint64_t shots, qsim::RandomEngine& rng) {
                return state.sample_counts(shots, rng);
            },
            py::arg("shots"), py::arg("rng"));

    m.def("fidelity", &qsim::fidelity, py::arg("a"), py::arg("b"));
    m.def("inner_product", &qsim::inner_product, py::arg("a"), py::arg("b"));

    m.def(
        "apply_qft",
        [](qsim::StateVector& state, std::size_t start, std::size_t count, bool inverse) {
            return qsim::qft::apply_qft(state, make_range(start, count),
                                        inverse ? qsim::qft::Direction::Inverse
                                                : qsim::qft::Direction::Forward);
        },
        py::arg("state"), py::arg("start"), py::arg("count"), py::arg("inverse") = false);
    m.def("qft_gate_count", &qsim::qft::gate_count, py::arg("l"));

    m.def("modpow", &qsim::modexp::modpow, py::arg("a"), py::arg("x"), py::arg("m"));
    m.def("classical_period", &qsim::modexp::classical_period, py::arg("a"), py::arg("n"));

    m.def("euclid_gcd", &qsim::shor::euclid_gcd, py::arg("a"), py::arg("b"));
    m.def("verify_period", &qsim::shor::verify_period, py::arg("a"), py::arg("n"),
          py::arg("r_candidate"));
    m.def("predicted_measurement_prob", &qsim::shor::predicted_measurement_prob, py::arg("y"),
          py::arg("r"), py::arg("q"), py::arg("x0") = 0);
    m.def(
        "continued_fraction_denominators",
        [](std::uint64_t y, std::uint64_t q, std::uint64_t bound) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
            for (const auto& f : qsim::shor::continued_fraction_denominators(y, q, bound)) {
                out.emplace_back(f.numerator, f.denominator);
            }
            return out;
        },
        py::arg("y"), py::arg("q"), py::arg("bound"));
    m.def("expand_candidates", &qsim::shor::expand_candidates, py::arg("y"), py::arg("q"),
          py::arg("r_prime"), py::arg("n"));

    py::class_<qsim::shor::ShorRun>(m, "ShorRun")
        .def_readonly("n", &qsim::shor::ShorRun::n)
        .def_readonly("base", &qsim::shor::ShorRun::base)
        .def_readonly("q", &qsim::shor::ShorRun::q)
        .def_readonly("measured_y", &qsim::shor::ShorRun::measured_y)
        .def_readonly("candidate_periods", &qsim::shor::ShorRun::candidate_periods)
        .def_readonly("attempts", &qsim::shor::ShorRun::attempts)
        .def_readonly("failure_reason", &qsim::shor::ShorRun::failure_reason)
        .def_property_readonly("resolved_period",
                               [](const qsim::shor::ShorRun& run) {
                                   return run.resolved_period;
                               })
        .def_property_readonly("factors",
                               [](const qsim::shor::ShorRun& run)
                                   -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
                                   if (!run.factors) {
                                       return std::nullopt;
                                   }
                                   return std::make_pair(run.factors->p, run.factors->q);
                               });

    m.def(
        "factor",
        [](std::uint64_t n, std::uint64_t seed, std::uint64_t max_attempts,
           std::uint64_t shots_per_attempt, bool paper_mode) {
            qsim::shor::ShorConfig config;
            config.paper_mode = paper_mode;
            config.max_attempts = max_attempts;
            config.shots_per_attempt = shots_per_attempt;
            config.seed = seed;
            qsim::RandomEngine rng(seed);
            return qsim::shor::factor(n, config, rng);
        },
        py::arg("n"), py::arg("seed"), py::arg("max_attempts") = 32,
        py::arg("shots_per_attempt") = 8, py::arg("paper_mode") = false);
    m.def(
        "quantum_period_find",
        [](std::uint64_t a, std::uint64_t n, std::uint64_t seed, std::uint64_t shots,
           bool paper_mode) {
            qsim::shor::ShorConfig config;
            config.paper_mode = paper_mode;
            config.shots_per_attempt = shots;
            config.seed = seed;
            qsim::RandomEngine rng(seed);
            return qsim::shor::quantum_period_find(a, n, config, rng);
        },
        py::arg("a"), py::arg("n"), py::arg("seed"), py::arg("shots") = 8,
        py::arg("paper_mode") = false);

    py::class_<qsim::grover::GroverPlan>(m, "GroverPlan")
        .def_readonly("num_qubits", &qsim::grover::GroverPlan::num_qubits)
        .def_readonly("space_size", &qsim::grover::GroverPlan::space_size)
        .def_readonly("marked", &qsim::grover::GroverPlan::marked)
        .def_readonly("theta", &qsim::grover::GroverPlan::theta)
        .def_readonly("iterations", &qsim::grover::GroverPlan::iterations)
        .def_readonly("predicted_success", &qsim::grover::GroverPlan::predicted_success);

    m.def("grover_plan", &qsim::grover::optimal_iterations, py::arg("space_size"),
          py::arg("marked") = 0);
    m.def(
        "grover_search",
        [](std::size_t num_qubits, std::uint64_t marked, std::uint64_t shots,
           std::uint64_t seed, std::optional<std::uint64_t> iterations_override) {
            qsim::RandomEngine rng(seed);
            const auto result =
                qsim::grover::search(num_qubits, marked, shots, rng, iterations_override);
            return std::make_pair(result.plan, result.counts);
        },
        py::arg("num_qubits"), py::arg("marked"), py::arg("shots"), py::arg("seed"),
        py::arg("iterations_override") = std::nullopt);

    m.def("error_rate_estimate", &qsim::noise::error_rate_estimate, py::arg("gate_time"),
          py::arg("t2_time"));
    m.def(
        "majority_vote",
        [](const std::vector<int>& bits) {
            return qsim::qec::majority_vote(std::span<const int>(bits));
        },
        py::arg("bits"));
    m.def(
        "logical_error_rate",
        [](const std::string& kind, double p, std::uint64_t trials, std::uint64_t seed) {
            const qsim::qec::CodeKind code = kind == "phaseflip"
                                                 ? qsim::qec::CodeKind::PhaseFlip
                                                 : qsim::qec::CodeKind::BitFlip;
            qsim::RandomEngine rng(seed);
            return qsim::qec::logical_error_rate(code, p, trials, rng);
        },
        py::arg("kind"), py::arg("p"), py::arg("trials"), py::arg("seed"));

#ifdef QSIM_VERSION
    m.attr("__version__") = QSIM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
