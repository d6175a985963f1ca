#include "qsim/shor.hpp"

#include "qsim/errors.hpp"
#include "qsim/modexp.hpp"
#include "qsim/qft.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace qsim::shor {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

/// Returns m with m^k = n for some k >= 2, or 0 when n is not a perfect power.
std::uint64_t perfect_power_root(std::uint64_t n) {
    for (unsigned k = 2; (std::uint64_t(1) << k) <= n; ++k) {
        const double approx = std::pow(static_cast<double>(n), 1.0 / k);
        for (std::uint64_t m = static_cast<std::uint64_t>(approx) - 1;
             m <= static_cast<std::uint64_t>(approx) + 1; ++m) {
            if (m < 2) {
                continue;
            }
            std::uint64_t value = 1;
            bool overflow = false;
            for (unsigned i = 0; i < k; ++i) {
                if (value > n / m) {
                    overflow = true;
                    break;
                }
                value *= m;
            }
            if (!overflow && value == n) {
                return m;
            }
        }
    }
    return 0;
}

/// Shrinks a verified period (a^r = 1 mod n) to the exact group order by
/// stripping prime factors while the power stays 1.
std::uint64_t reduce_to_order(std::uint64_t a, std::uint64_t n, std::uint64_t r) {
    std::vector<std::uint64_t> primes;
    std::uint64_t m = r;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) {
                m /= p;
            }
        }
    }
    if (m > 1) {
        primes.push_back(m);
    }
    for (std::uint64_t p : primes) {
        while (r % p == 0 && modexp::modpow(a, r / p, n) == 1) {
            r /= p;
        }
    }
    return r;
}

std::uint64_t ceil_log2(std::uint64_t n) {
    return static_cast<std::uint64_t>(std::bit_width(n - 1));
}

/// Period candidates from a single measured y, most plausible first.
std::vector<std::uint64_t> candidates_from_y(std::uint64_t y, std::uint64_t q, std::uint64_t n) {
    const std::vector<Fraction> convergents = continued_fraction_denominators(y, q, n);
    std::vector<std::uint64_t> candidates;
    candidates.reserve(convergents.size());
    for (auto it = convergents.rbegin(); it != convergents.rend(); ++it) {
        if (std::find(candidates.begin(), candidates.end(), it->denominator) ==
            candidates.end()) {
            candidates.push_back(it->denominator);
        }
    }
    return candidates;
}

} // namespace

std::uint64_t euclid_gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) {
        throw DomainError("euclid_gcd: gcd(0, 0) is undefined");
    }
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::optional<std::uint64_t> classify_candidate(std::uint64_t a, std::uint64_t n) {
    if (a <= 1 || a >= n) {
        throw DomainError("classify_candidate: need 1 < a < n");
    }
    const std::uint64_t g = euclid_gcd(a, n);
    if (g != 1) {
        return g;
    }
    return std::nullopt;
}

std::vector<Fraction> continued_fraction_denominators(std::uint64_t y, std::uint64_t q,
                                                      std::uint64_t bound) {
    if (q < 2 || y >= q) {
        throw DomainError("continued_fraction_denominators: need 0 <= y < q, q >= 2");
    }
    std::vector<Fraction> convergents;
    std::uint64_t num = y;
    std::uint64_t den = q;
    std::uint64_t h_prev = 1, h_prev2 = 0; // numerators h_{-1}, h_{-2}
    std::uint64_t k_prev = 0, k_prev2 = 1; // denominators k_{-1}, k_{-2}
    while (den != 0) {
        const std::uint64_t a = num / den;
        const std::uint64_t rem = num % den;
        const std::uint64_t h = a * h_prev + h_prev2;
        const std::uint64_t k = a * k_prev + k_prev2;
        if (k > bound) {
            break;
        }
        convergents.push_back(Fraction{h, k});
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        num = den;
        den = rem;
    }
    return convergents;
}

double predicted_measurement_prob(std::uint64_t y, std::uint64_t r, std::uint64_t q,
                                  std::uint64_t x0) {
    if (q < 2 || y >= q || r < 1 || r > q || x0 >= r) {
        throw DomainError("predicted_measurement_prob: argument out of range");
    }
    // Number of superposition terms x = x0 + r*b below q.
    const std::uint64_t m = (q - x0 + r - 1) / r;
    const std::uint64_t g = (r % q) * (y % q) % q; // r*y mod q, overflow-safe at desk scale
    double magnitude_sq;
    if (g == 0) {
        magnitude_sq = static_cast<double>(m) * static_cast<double>(m);
    } else {
        // |sum_{b<m} e^{-2 pi i g b / q}|^2 = sin^2(pi m g / q) / sin^2(pi g / q),
        // with the numerator's argument reduced mod 2q to keep sin() accurate.
        const std::uint64_t t = (m % (2 * q)) * g % (2 * q);
        const double num = std::sin(std::numbers::pi * static_cast<double>(t) /
                                    static_cast<double>(q));
        const double den = std::sin(std::numbers::pi * static_cast<double>(g) /
                                    static_cast<double>(q));
        magnitude_sq = (num * num) / (den * den);
    }
    return magnitude_sq / (static_cast<double>(q) * static_cast<double>(q));
}

bool verify_period(std::uint64_t a, std::uint64_t n, std::uint64_t r_candidate) {
    if (r_candidate < 1) {
        throw DomainError("verify_period: period candidate must be >= 1");
    }
    return modexp::modpow(a, r_candidate, n) == 1;
}

std::vector<std::uint64_t> expand_candidates(std::uint64_t y, std::uint64_t q,
                                             std::uint64_t r_prime, std::uint64_t n) {
    if (r_prime < 1) {
        throw DomainError("expand_candidates: r' must be >= 1");
    }
    std::vector<std::uint64_t> out;
    auto push_unique = [&out, n](std::uint64_t candidate) {
        if (candidate >= 2 && candidate <= n &&
            std::find(out.begin(), out.end(), candidate) == out.end()) {
            out.push_back(candidate);
        }
    };

    const std::uint64_t k_max = ceil_log2(std::max<std::uint64_t>(n, 2));
    for (std::uint64_t k = 2; k <= k_max; ++k) {
        push_unique(k * r_prime);
    }

    for (std::int64_t delta : {+1, -1, +2, -2}) {
        const std::int64_t neighbor = static_cast<std::int64_t>(y) + delta;
        if (neighbor < 0 || neighbor >= static_cast<std::int64_t>(q)) {
            continue;
        }
        for (const Fraction& f :
             continued_fraction_denominators(static_cast<std::uint64_t>(neighbor), q, n)) {
            push_unique(f.denominator);
        }
    }
    return out;
}

std::optional<FactorPair> extract_factors(std::uint64_t a, std::uint64_t n, std::uint64_t r) {
    if (r < 1 || modexp::modpow(a, r, n) != 1) {
        throw ContractViolation("extract_factors: a^r must be 1 (mod n)");
    }
    if (r % 2 != 0) {
        return std::nullopt;
    }
    const std::uint64_t half = modexp::modpow(a, r / 2, n);
    if (half == n - 1 || half == 1) {
        return std::nullopt;
    }
    const std::uint64_t p = euclid_gcd(half - 1, n);
    const std::uint64_t q = euclid_gcd(half + 1, n);
    return FactorPair{p, q};
}

PeriodRegisters period_registers(std::uint64_t n, bool paper_mode) {
    if (n < 3) {
        throw DomainError("period_registers: modulus must be >= 3");
    }
    const std::size_t bits = static_cast<std::size_t>(ceil_log2(n));
    PeriodRegisters regs;
    regs.input_qubits = paper_mode ? bits : 2 * bits;
    regs.output_qubits = static_cast<std::size_t>(std::bit_width(n)); // 2^out > n
    regs.q = std::uint64_t(1) << regs.input_qubits;
    return regs;
}

StateVector prepare_period_state(std::uint64_t a, std::uint64_t n, const PeriodRegisters& regs) {
    StateVector state =
        StateVector::basis_state(regs.input_qubits + regs.output_qubits, 0);
    const Gate2x2 h = gates::hadamard();
    for (std::size_t qubit = 0; qubit < regs.input_qubits; ++qubit) {
        state.apply_1q(h, qubit);
    }
    modexp::apply_modexp_oracle(state, {a, n, regs.input(), regs.output()});
    return state;
}

std::uint64_t sample_measured_y(const StateVector& prepared, const PeriodRegisters& regs,
                                RandomEngine& rng) {
    StateVector state = prepared;
    state.measure(regs.output(), rng);
    qft::apply_qft(state, regs.input(), qft::Direction::Forward);
    return state.measure(regs.input(), rng);
}

std::vector<std::uint64_t> quantum_period_find(std::uint64_t a, std::uint64_t n,
                                               const ShorConfig& config, RandomEngine& rng) {
    if (classify_candidate(a, n).has_value()) {
        throw DomainError("quantum_period_find: base shares a factor with the modulus");
    }
    const PeriodRegisters regs = period_registers(n, config.paper_mode);
    const StateVector prepared = prepare_period_state(a, n, regs);

    std::vector<std::uint64_t> candidates;
    for (std::uint64_t shot = 0; shot < config.shots_per_attempt; ++shot) {
        const std::uint64_t y = sample_measured_y(prepared, regs, rng);
        for (std::uint64_t c : candidates_from_y(y, regs.q, n)) {
            if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
                candidates.push_back(c);
            }
        }
    }
    return candidates;
}

ShorRun factor(std::uint64_t n, const ShorConfig& config, RandomEngine& rng) {
    if (n < 4) {
        throw DomainError("factor: n must be >= 4");
    }
    if (config.max_attempts < 1 || config.shots_per_attempt < 1) {
        throw DomainError("factor: attempts and shots must be >= 1");
    }

    ShorRun run;
    run.n = n;

    auto finish = [&run](std::uint64_t p, std::uint64_t q) -> ShorRun& {
        run.factors = FactorPair{std::min(p, q), std::max(p, q)};
        return run;
    };

    if (n % 2 == 0) {
        return finish(2, n / 2);
    }
    if (is_prime(n)) {
        run.failure_reason = "prime input has no nontrivial factors";
        return run;
    }
    if (const std::uint64_t root = perfect_power_root(n)) {
        return finish(root, n / root);
    }

    const PeriodRegisters regs = period_registers(n, config.paper_mode);
    run.q = regs.q;
    const std::uint64_t stream_base = rng();

    for (std::uint64_t attempt = 0; attempt < config.max_attempts; ++attempt) {
        RandomEngine attempt_rng = substream(stream_base, attempt);
        run.attempts = attempt + 1;

        const std::uint64_t a = uniform_u64(attempt_rng, 2, n - 2);
        run.base = a;
        if (const auto trivial = classify_candidate(a, n)) {
            return finish(*trivial, n / *trivial);
        }

        const StateVector prepared = prepare_period_state(a, n, regs);
        std::optional<std::uint64_t> verified;
        for (std::uint64_t shot = 0; shot < config.shots_per_attempt && !verified; ++shot) {
            const std::uint64_t y = sample_measured_y(prepared, regs, attempt_rng);
            run.measured_y.push_back(y);

            const std::vector<std::uint64_t> primary = candidates_from_y(y, regs.q, n);
            for (std::uint64_t c : primary) {
                run.candidate_periods.push_back(c);
                if (verify_period(a, n, c)) {
                    verified = c;
                    break;
                }
            }
            if (verified) {
                break;
            }
            const std::uint64_t r_prime = primary.empty() ? 1 : primary.front();
            for (std::uint64_t c : expand_candidates(y, regs.q, r_prime, n)) {
                run.candidate_periods.push_back(c);
                if (verify_period(a, n, c)) {
                    verified = c;
                    break;
                }
            }
        }
        if (!verified) {
            continue;
        }

        const std::uint64_t order = reduce_to_order(a, n, *verified);
        run.resolved_period = order;
        if (const auto pair = extract_factors(a, n, order)) {
            return finish(pair->p, pair->q);
        }
        // Odd order or a^{r/2} = -1: retry with a fresh base. The rejected
        // period stays in candidate_periods; resolved_period only ever names
        // the order the returned factors came from.
        run.resolved_period = std::nullopt;
    }

    run.failure_reason = "attempts exhausted without finding a usable period";
    return run;
}

} // namespace qsim::shor
