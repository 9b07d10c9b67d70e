// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qmul/metrics.hpp"
#include "qmul/multiplier.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace qmul {

/// A product counts as correct only if read out with at least this probability.
inline constexpr double kMinReadoutProbability = 1.0 - 1e-9;

/// x * y with native integer arithmetic; x, y < 2^32.
[[nodiscard]] std::uint64_t oracle_multiply(std::uint64_t x, std::uint64_t y);

/// Element i is x << i when bit i of y is set, else 0. Throws DomainError unless x, y < 2^n.
[[nodiscard]] std::vector<std::uint64_t> oracle_partials(std::uint64_t x, std::uint64_t y, std::size_t n);

struct BaselineCircuit {
    MultiplierCircuit multiplier;
    CircuitMetrics metrics;
};

/**
 * @brief Same partial products, accumulated with a QFT/IQFT pair per step.
 *
 * Step 0 transforms the accumulator holding the first partial product and
 * transforms it back; each later step wraps one Fourier add block in its
 * own QFT ... IQFT. The result is n QFT and n IQFT blocks.
 */
[[nodiscard]] BaselineCircuit build_baseline_sequential(std::size_t n, QftOrdering ordering = QftOrdering::SwapFree);

struct Sampling {
    bool exhaustive = true;
    std::size_t count = 0;
    std::uint64_t seed = 0;

    static Sampling all() { return {}; }
    static Sampling random(std::size_t count, std::uint64_t seed) { return {false, count, seed}; }
};

struct CaseOutcome {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t expected = 0;
    std::uint64_t got = 0;
    double probability = 0.0;

    [[nodiscard]] bool passed() const noexcept { return got == expected && probability >= kMinReadoutProbability; }

    friend bool operator==(const CaseOutcome&, const CaseOutcome&) = default;
};

struct VerificationReport {
    std::size_t n = 0;
    SimMode mode = SimMode::Dense;
    Sampling sampling;
    std::size_t cases_run = 0;
    /// Every case, sorted by (x, y).
    std::vector<CaseOutcome> cases;
    std::vector<CaseOutcome> failures;
    double min_probability = 1.0;
    CircuitMetrics metrics_proposed;
    CircuitMetrics metrics_baseline;
    /// Alternative reading of the baseline block count, reported for context.
    std::string baseline_note;
    std::chrono::duration<double> elapsed{};

    [[nodiscard]] bool passed() const noexcept { return failures.empty() && cases_run > 0; }
};

/// Throws CapacityError when dense mode does not fit under dense_limit.
[[nodiscard]] VerificationReport run_suite(std::size_t n, SimMode mode, Sampling sampling,
                                           std::size_t dense_limit = kDefaultDenseLimit);

[[nodiscard]] nlohmann::json report_to_json(const VerificationReport& report, bool include_cases = false);

} // namespace qmul
