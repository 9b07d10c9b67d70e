// SPDX-License-Identifier: Apache-2.0

#include "qmul/verify.hpp"

#include "qmul/errors.hpp"
#include "qmul/serialize.hpp"

#include <algorithm>
#include <random>

namespace qmul {

std::uint64_t oracle_multiply(std::uint64_t x, std::uint64_t y) { return x * y; }

std::vector<std::uint64_t> oracle_partials(std::uint64_t x, std::uint64_t y, std::size_t n) {
    if (n == 0 || n > kMaxMultiplierBits || (x >> n) != 0 || (y >> n) != 0) {
        throw DomainError("oracle_partials needs 1 <= n <= 31 and x, y < 2^n");
    }
    std::vector<std::uint64_t> partials(n);
    for (std::size_t i = 0; i < n; ++i) {
        partials[i] = ((y >> i) & 1U) ? x << i : 0;
    }
    return partials;
}

BaselineCircuit build_baseline_sequential(std::size_t n, QftOrdering ordering) {
    if (n == 0 || n > kMaxMultiplierBits) {
        throw DomainError("baseline bit-width must be in [1, 31]");
    }
    auto layout = layout_for(n);
    const auto& accumulator = layout.aux_registers[0];

    AdderPlan plan;
    plan.accumulator = accumulator;
    plan.carry_qubits = {accumulator.back()};
    plan.addends.assign(layout.aux_registers.begin() + 1, layout.aux_registers.end());
    plan.validate();

    Circuit circuit(layout.total_qubits);
    circuit.append(partial_product_stage(layout));
    // Loading the first partial product counts as a step of its own.
    circuit.append(qft_circuit(accumulator, ordering));
    circuit.append(iqft_circuit(accumulator, ordering));
    for (std::size_t i = 1; i < n; ++i) {
        circuit.append(qft_circuit(accumulator, ordering));
        circuit.append(
            fourier_add_block(layout.aux_registers[i], accumulator, ordering, "adder(" + std::to_string(i) + ")"));
        circuit.append(iqft_circuit(accumulator, ordering));
    }

    auto metrics = compute_metrics(circuit);
    auto result_qubits = accumulator;
    MultiplierCircuit multiplier{n, std::move(layout), std::move(circuit), std::move(plan), std::move(result_qubits)};
    return {std::move(multiplier), std::move(metrics)};
}

VerificationReport run_suite(std::size_t n, SimMode mode, Sampling sampling, std::size_t dense_limit) {
    if (n == 0 || n > kMaxMultiplierBits) {
        throw DomainError("suite bit-width must be in [1, 31]");
    }
    if (mode == SimMode::Dense && multiplier_qubit_count(n) > dense_limit) {
        throw CapacityError("dense verification of n=" + std::to_string(n) + " needs " +
                            std::to_string(multiplier_qubit_count(n)) + " qubits, above the limit of " +
                            std::to_string(dense_limit) + "; use hybrid mode");
    }
    if (sampling.exhaustive && 2 * n > 32) {
        throw DomainError("exhaustive verification is limited to n <= 16");
    }
    if (!sampling.exhaustive && sampling.count == 0) {
        throw DomainError("random sampling needs at least one case");
    }

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t limit = std::uint64_t{1} << n;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> inputs;
    if (sampling.exhaustive) {
        inputs.reserve(limit * limit);
        for (std::uint64_t x = 0; x < limit; ++x) {
            for (std::uint64_t y = 0; y < limit; ++y) {
                inputs.emplace_back(x, y);
            }
        }
    } else {
        std::mt19937_64 rng(sampling.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, limit - 1);
        inputs.reserve(sampling.count);
        for (std::size_t i = 0; i < sampling.count; ++i) {
            const auto x = pick(rng);
            const auto y = pick(rng);
            inputs.emplace_back(x, y);
        }
        std::sort(inputs.begin(), inputs.end());
    }

    const auto multiplier = build_multiplier(n);

    VerificationReport report;
    report.n = n;
    report.mode = mode;
    report.sampling = sampling;
    report.metrics_proposed = compute_metrics(multiplier.circuit);
    report.metrics_baseline = build_baseline_sequential(n).metrics;
    report.baseline_note = "baseline counts " + std::to_string(n) +
                           " QFT/IQFT pairs, one per partial product; counting only the " + std::to_string(n - 1) +
                           " additions between partial products would give " + std::to_string(n - 1) +
                           " pairs and a reduction of " + std::to_string(n == 1 ? 0 : n - 2);

    report.cases.reserve(inputs.size());
    for (const auto& [x, y] : inputs) {
        const auto result = simulate_multiply(multiplier, x, y, mode, dense_limit);
        CaseOutcome outcome{x, y, oracle_multiply(x, y), result.product, result.probability};
        report.min_probability = std::min(report.min_probability, outcome.probability);
        if (!outcome.passed()) {
            report.failures.push_back(outcome);
        }
        report.cases.push_back(outcome);
    }
    report.cases_run = report.cases.size();
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

nlohmann::json report_to_json(const VerificationReport& report, bool include_cases) {
    using nlohmann::json;
    auto case_json = [](const CaseOutcome& c) {
        return json{{"x", c.x}, {"y", c.y}, {"expected", c.expected}, {"got", c.got}, {"probability", c.probability}};
    };
    json sampling = report.sampling.exhaustive
                        ? json{{"kind", "exhaustive"}}
                        : json{{"kind", "random"}, {"count", report.sampling.count}, {"seed", report.sampling.seed}};
    json failures = json::array();
    for (const auto& f : report.failures) {
        failures.push_back(case_json(f));
    }
    json doc{{"n", report.n},
             {"mode", std::string(to_string(report.mode))},
             {"sampling", sampling},
             {"cases_run", report.cases_run},
             {"passed", report.passed()},
             {"failures", failures},
             {"min_probability", report.min_probability},
             {"metrics_proposed", metrics_to_json(report.metrics_proposed)},
             {"metrics_baseline", metrics_to_json(report.metrics_baseline)},
             {"qft_block_reduction",
              static_cast<long long>(report.metrics_baseline.qft_blocks) -
                  static_cast<long long>(report.metrics_proposed.qft_blocks)},
             {"baseline_note", report.baseline_note},
             {"elapsed_seconds", report.elapsed.count()}};
    if (include_cases) {
        json cases = json::array();
        for (const auto& c : report.cases) {
            cases.push_back(case_json(c));
        }
        doc["cases"] = std::move(cases);
    }
    return doc;
}

} // namespace qmul
