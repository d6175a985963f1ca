// Command-line harness for the simulator: factoring, search, predicted
// period-finding distributions, repetition-code Monte Carlo and Fourier
// gate-count tables. Results are emitted as JSON or CSV on stdout and can
// be appended as JSON-lines run records for later replay.

#include "qsim/errors.hpp"
#include "qsim/grover.hpp"
#include "qsim/modexp.hpp"
#include "qsim/qec.hpp"
#include "qsim/qft.hpp"
#include "qsim/shor.hpp"
#include "qsim/state_vector.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAlgorithmFailure = 2;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format printed to stdout")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Append a JSON-lines run record to this file");
}

bool ci_mode() {
    const char* env = std::getenv("QSIM_CI");
    return env != nullptr && std::string(env) == "1";
}

/// Randomized commands need a seed: explicit, or entropy outside CI mode.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) {
        return *seed;
    }
    if (ci_mode()) {
        throw CLI::ValidationError("--seed", "QSIM_CI=1 requires an explicit --seed");
    }
    std::random_device entropy;
    return (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
}

/// One number, serialized exactly as it appears in the JSON output so the
/// CSV and JSON forms carry identical values.
std::string number_text(const json& value) {
    return value.dump();
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<json>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) {
        os << (i ? "," : "") << header[i];
    }
    os << '\n';
    for (const json& row : rows) {
        bool first = true;
        for (const auto& cell : row) {
            os << (first ? "" : ",");
            first = false;
            if (cell.is_string()) {
                os << cell.get<std::string>();
            } else if (cell.is_null()) {
                // empty cell
            } else {
                os << number_text(cell);
            }
        }
        os << '\n';
    }
    return os.str();
}

void emit(const std::string& command, const json& params, const json& result,
          double duration_ms, const OutputOptions& opts, const std::string& csv_text) {
    if (opts.format == "csv") {
        std::cout << csv_text;
    } else {
        std::cout << result.dump() << '\n';
    }
    if (!opts.out_path.empty()) {
        json record;
        record["command"] = command;
        record["version"] = QSIM_VERSION;
        record["params"] = params;
        record["duration_ms"] = duration_ms;
        record["result"] = result;
        std::ofstream out(opts.out_path, std::ios::app);
        if (!out) {
            throw std::runtime_error("cannot open run-record file: " + opts.out_path);
        }
        out << record.dump() << '\n';
    }
}

class Stopwatch {
public:
    double elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_factor(std::uint64_t n, std::optional<std::uint64_t> seed_opt, std::uint64_t attempts,
               std::uint64_t shots, bool paper_mode, const OutputOptions& opts) {
    const std::uint64_t seed = resolve_seed(seed_opt);
    qsim::shor::ShorConfig config;
    config.paper_mode = paper_mode;
    config.max_attempts = attempts;
    config.shots_per_attempt = shots;
    config.seed = seed;

    Stopwatch timer;
    qsim::RandomEngine rng(seed);
    const qsim::shor::ShorRun run = qsim::shor::factor(n, config, rng);
    const double duration = timer.elapsed_ms();

    json params{{"n", n},
                {"seed", seed},
                {"attempts", attempts},
                {"shots", shots},
                {"paper_mode", paper_mode}};
    json result;
    result["n"] = run.n;
    if (run.factors) {
        result["factors"] = {run.factors->p, run.factors->q};
    } else {
        result["factors"] = nullptr;
        result["failure_reason"] = run.failure_reason;
    }
    result["a"] = run.base;
    result["attempts"] = run.attempts;
    if (run.resolved_period) {
        result["resolved_period"] = *run.resolved_period;
    } else {
        result["resolved_period"] = nullptr;
    }
    result["q"] = run.q;
    result["measured_y"] = run.measured_y;
    result["candidate_periods"] = run.candidate_periods;

    const json row = {run.n,
                      run.factors ? json(run.factors->p) : json(),
                      run.factors ? json(run.factors->q) : json(),
                      run.base,
                      run.attempts,
                      run.resolved_period ? json(*run.resolved_period) : json()};
    emit("factor", params, result, duration, opts,
         csv_table({"n", "p", "q", "a", "attempts", "resolved_period"}, {row}));

    if (!run.factors) {
        std::cerr << "no factor found: " << run.failure_reason << '\n';
        return kExitAlgorithmFailure;
    }
    return kExitSuccess;
}

int run_grover(std::size_t num_qubits, std::uint64_t omega, std::uint64_t shots,
               std::optional<std::uint64_t> seed_opt,
               std::optional<std::uint64_t> iterations_override, const OutputOptions& opts) {
    if (num_qubits < 1 || num_qubits > qsim::max_qubits()) {
        throw CLI::ValidationError("L", "qubit count outside the register guard");
    }
    if (omega >= (std::uint64_t(1) << num_qubits)) {
        throw CLI::ValidationError("omega", "marked index must satisfy omega < 2^L");
    }
    const std::uint64_t seed = resolve_seed(seed_opt);

    Stopwatch timer;
    qsim::RandomEngine rng(seed);
    const qsim::grover::SearchResult search =
        qsim::grover::search(num_qubits, omega, shots, rng, iterations_override);
    const double duration = timer.elapsed_ms();

    json params{{"l", num_qubits}, {"omega", omega}, {"shots", shots}, {"seed", seed}};
    if (iterations_override) {
        params["iterations_override"] = *iterations_override;
    }
    json counts = json::object();
    std::vector<json> rows;
    for (const auto& [outcome, count] : search.counts) {
        counts[std::to_string(outcome)] = count;
        rows.push_back({num_qubits, omega, search.plan.theta, search.plan.iterations,
                        search.plan.predicted_success, outcome, count});
    }
    json result{{"l", num_qubits},
                {"omega", omega},
                {"theta", search.plan.theta},
                {"iterations", search.plan.iterations},
                {"predicted_success", search.plan.predicted_success},
                {"shots", shots},
                {"counts", counts}};
    emit("grover", params, result, duration, opts,
         csv_table({"l", "omega", "theta", "iterations", "predicted_success", "outcome",
                    "count"},
                   rows));
    return kExitSuccess;
}

int run_period_prob(std::uint64_t n, std::uint64_t a, bool paper_mode,
                    const OutputOptions& opts) {
    if (a <= 1 || a >= n) {
        throw CLI::ValidationError("a", "base must satisfy 1 < a < N");
    }
    const std::uint64_t g = qsim::shor::euclid_gcd(a, n);
    if (g != 1) {
        throw CLI::ValidationError(
            "a", "gcd(a, N) = " + std::to_string(g) + " is already a nontrivial factor");
    }

    Stopwatch timer;
    const std::uint64_t period = qsim::modexp::classical_period(a, n);
    const qsim::shor::PeriodRegisters regs = qsim::shor::period_registers(n, paper_mode);

    std::vector<double> marginal(regs.q, 0.0);
    for (std::uint64_t y = 0; y < regs.q; ++y) {
        for (std::uint64_t x0 = 0; x0 < period; ++x0) {
            marginal[y] += qsim::shor::predicted_measurement_prob(y, period, regs.q, x0);
        }
    }
    const double duration = timer.elapsed_ms();

    json params{{"n", n}, {"a", a}, {"paper_mode", paper_mode}};
    json distribution = json::array();
    std::vector<json> rows;
    for (std::uint64_t y = 0; y < regs.q; ++y) {
        distribution.push_back({y, marginal[y]});
        rows.push_back({n, a, regs.q, period, y, marginal[y]});
    }
    json result{{"n", n},
                {"a", a},
                {"q", regs.q},
                {"classical_period", period},
                {"distribution", distribution}};
    emit("period-prob", params, result, duration, opts,
         csv_table({"n", "a", "q", "classical_period", "y", "probability"}, rows));
    return kExitSuccess;
}

int run_qec(const std::string& kind_name, double p, std::uint64_t trials,
            std::optional<std::uint64_t> seed_opt, const OutputOptions& opts) {
    const qsim::qec::CodeKind kind = kind_name == "phaseflip"
                                         ? qsim::qec::CodeKind::PhaseFlip
                                         : qsim::qec::CodeKind::BitFlip;
    const std::uint64_t seed = resolve_seed(seed_opt);

    Stopwatch timer;
    qsim::RandomEngine rng(seed);
    const double logical = qsim::qec::logical_error_rate(kind, p, trials, rng);
    const double analytic = 3.0 * p * p - 2.0 * p * p * p;
    const double duration = timer.elapsed_ms();

    json params{{"kind", kind_name}, {"p", p}, {"trials", trials}, {"seed", seed}};
    json result{{"kind", kind_name},
                {"p", p},
                {"trials", trials},
                {"logical_error_rate", logical},
                {"analytic_rate", analytic}};
    emit("qec", params, result, duration, opts,
         csv_table({"kind", "p", "trials", "logical_error_rate", "analytic_rate"},
                   {{kind_name, p, trials, logical, analytic}}));
    return kExitSuccess;
}

int run_qft_bench(std::size_t l_max, const OutputOptions& opts) {
    if (l_max < 1 || l_max > qsim::max_qubits()) {
        throw CLI::ValidationError("Lmax", "width outside the register guard");
    }
    Stopwatch timer;
    json table = json::array();
    std::vector<json> rows;
    for (std::size_t l = 1; l <= l_max; ++l) {
        const std::uint64_t gates = qsim::qft::gate_count(l);
        const double ratio = static_cast<double>(gates) / (static_cast<double>(l) * l);
        table.push_back({{"l", l}, {"gates", gates}, {"ratio", ratio}});
        rows.push_back({l, gates, ratio});
    }
    const double duration = timer.elapsed_ms();

    json params{{"l_max", l_max}};
    json result{{"l_max", l_max}, {"table", table}};
    emit("qft-bench", params, result, duration, opts,
         csv_table({"l", "gates", "ratio"}, rows));
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"State-vector quantum algorithm simulator"};
    app.require_subcommand(1);

    // factor
    std::uint64_t factor_n = 0;
    std::optional<std::uint64_t> factor_seed;
    std::uint64_t factor_attempts = 32;
    std::uint64_t factor_shots = 8;
    bool factor_paper_mode = false;
    OutputOptions factor_out;
    CLI::App* factor_cmd = app.add_subcommand("factor", "Factor an integer");
    factor_cmd->add_option("N", factor_n, "Integer to factor (>= 4)")
        ->required()
        ->check(CLI::Range(std::uint64_t(4), std::uint64_t(-1)));
    factor_cmd->add_option("--seed", factor_seed, "Random seed");
    factor_cmd->add_option("--attempts", factor_attempts, "Maximum random-base attempts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    factor_cmd->add_option("--shots", factor_shots, "Subroutine shots per attempt")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    factor_cmd->add_flag("--paper-mode", factor_paper_mode,
                         "Input register of ceil(log2 N) qubits instead of twice that");
    add_output_options(factor_cmd, factor_out);

    // grover
    std::size_t grover_l = 0;
    std::uint64_t grover_omega = 0;
    std::uint64_t grover_shots = 1000;
    std::optional<std::uint64_t> grover_seed;
    std::optional<std::uint64_t> grover_override;
    OutputOptions grover_out;
    CLI::App* grover_cmd = app.add_subcommand("grover", "Search a 2^L-entry space");
    grover_cmd->add_option("L", grover_l, "Qubit count")->required();
    grover_cmd->add_option("omega", grover_omega, "Marked basis index")->required();
    grover_cmd->add_option("--shots", grover_shots, "Measurement shots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    grover_cmd->add_option("--seed", grover_seed, "Random seed");
    grover_cmd->add_option("--iterations-override", grover_override,
                           "Run this many iterations instead of the optimum");
    add_output_options(grover_cmd, grover_out);

    // period-prob
    std::uint64_t pp_n = 0;
    std::uint64_t pp_a = 0;
    bool pp_paper_mode = false;
    OutputOptions pp_out;
    CLI::App* pp_cmd =
        app.add_subcommand("period-prob", "Predicted period-finding measurement distribution");
    pp_cmd->add_option("N", pp_n, "Modulus")->required()
        ->check(CLI::Range(std::uint64_t(3), std::uint64_t(-1)));
    pp_cmd->add_option("a", pp_a, "Base coprime to N")->required();
    pp_cmd->add_flag("--paper-mode", pp_paper_mode,
                     "Input register of ceil(log2 N) qubits instead of twice that");
    add_output_options(pp_cmd, pp_out);

    // qec
    std::string qec_kind = "bitflip";
    double qec_p = 0.0;
    std::uint64_t qec_trials = 100000;
    std::optional<std::uint64_t> qec_seed;
    OutputOptions qec_out;
    CLI::App* qec_cmd = app.add_subcommand("qec", "Repetition-code Monte Carlo");
    qec_cmd->add_option("--kind", qec_kind, "Code family")
        ->check(CLI::IsMember({"bitflip", "phaseflip"}))
        ->capture_default_str();
    qec_cmd->add_option("--p", qec_p, "Physical error probability per qubit")
        ->required()
        ->check(CLI::Range(0.0, 0.5));
    qec_cmd->add_option("--trials", qec_trials, "Monte-Carlo trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    qec_cmd->add_option("--seed", qec_seed, "Random seed");
    add_output_options(qec_cmd, qec_out);

    // qft-bench
    std::size_t bench_l_max = 0;
    OutputOptions bench_out;
    CLI::App* bench_cmd = app.add_subcommand("qft-bench", "Fourier-circuit gate counts");
    bench_cmd->add_option("Lmax", bench_l_max, "Largest register width")->required();
    add_output_options(bench_cmd, bench_out);

    try {
        app.parse(argc, argv);

        if (factor_cmd->parsed()) {
            return run_factor(factor_n, factor_seed, factor_attempts, factor_shots,
                              factor_paper_mode, factor_out);
        }
        if (grover_cmd->parsed()) {
            return run_grover(grover_l, grover_omega, grover_shots, grover_seed,
                              grover_override, grover_out);
        }
        if (pp_cmd->parsed()) {
            return run_period_prob(pp_n, pp_a, pp_paper_mode, pp_out);
        }
        if (qec_cmd->parsed()) {
            return run_qec(qec_kind, qec_p, qec_trials, qec_seed, qec_out);
        }
        if (bench_cmd->parsed()) {
            return run_qft_bench(bench_l_max, bench_out);
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    } catch (const qsim::DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qsim::CapacityError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAlgorithmFailure;
    }
}
