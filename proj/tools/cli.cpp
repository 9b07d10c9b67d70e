// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "qmul/adder.hpp"
#include "qmul/errors.hpp"
#include "qmul/metrics.hpp"
#include "qmul/multiplier.hpp"
#include "qmul/serialize.hpp"
#include "qmul/statevector.hpp"
#include "qmul/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace qmul::cli {

namespace {

struct CliConfig {
    std::size_t n = 0;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::size_t bits = 0;
    std::vector<std::uint64_t> values;
    std::optional<std::size_t> carry;
    std::string mode;
    std::string format;
    std::string output;
    bool exhaustive = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool swaps = false;
    bool json = false;
};

QftOrdering ordering(const CliConfig& cfg) { return cfg.swaps ? QftOrdering::ExplicitSwaps : QftOrdering::SwapFree; }

void check_width(std::size_t n) {
    if (n == 0 || n > kMaxMultiplierBits) {
        throw DomainError("--n must be in [1, " + std::to_string(kMaxMultiplierBits) + "]");
    }
}

SimMode resolve_mode(const std::string& requested, std::size_t n, std::size_t dense_limit) {
    if (requested.empty()) {
        return multiplier_qubit_count(n) <= dense_limit ? SimMode::Dense : SimMode::Hybrid;
    }
    return sim_mode_from_string(requested);
}

void print_metrics_table(std::ostream& out, const std::vector<std::pair<std::string, CircuitMetrics>>& rows) {
    out << std::left << std::setw(28) << "circuit" << std::right << std::setw(7) << "qubits" << std::setw(7) << "h"
        << std::setw(7) << "x" << std::setw(7) << "swap" << std::setw(8) << "cphase" << std::setw(9) << "toffoli"
        << std::setw(8) << "total" << std::setw(7) << "depth" << std::setw(6) << "qft" << std::setw(6) << "iqft"
        << '\n';
    for (const auto& [name, m] : rows) {
        out << std::left << std::setw(28) << name << std::right << std::setw(7) << m.qubit_count << std::setw(7)
            << m.count(GateKind::H) << std::setw(7) << m.count(GateKind::X) << std::setw(7) << m.count(GateKind::Swap)
            << std::setw(8) << m.count(GateKind::CPhase) << std::setw(9) << m.count(GateKind::Toffoli) << std::setw(8)
            << m.total_gates << std::setw(7) << m.depth << std::setw(6) << m.qft_blocks << std::setw(6)
            << m.iqft_blocks << '\n';
    }
}

std::string probability_text(double p) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << p;
    return os.str();
}

int cmd_multiply(const CliConfig& cfg, std::ostream& out) {
    check_width(cfg.n);
    const auto limit = dense_limit_from_env();
    const auto mode = resolve_mode(cfg.mode, cfg.n, limit);
    if ((cfg.x >> cfg.n) != 0 || (cfg.y >> cfg.n) != 0) {
        throw DomainError("--x and --y must be below 2^" + std::to_string(cfg.n));
    }
    if (mode == SimMode::Dense && multiplier_qubit_count(cfg.n) > limit) {
        throw CapacityError("dense mode needs " + std::to_string(multiplier_qubit_count(cfg.n)) +
                            " qubits, above the dense limit of " + std::to_string(limit) + "; rerun with --mode hybrid");
    }
    const auto multiplier = build_multiplier(cfg.n, ordering(cfg));
    const auto result = simulate_multiply(multiplier, cfg.x, cfg.y, mode, limit);
    const auto metrics = compute_metrics(multiplier.circuit);

    if (cfg.json) {
        out << nlohmann::json{{"n", cfg.n},
                              {"x", cfg.x},
                              {"y", cfg.y},
                              {"mode", std::string(to_string(mode))},
                              {"product", result.product},
                              {"probability", result.probability},
                              {"metrics", metrics_to_json(metrics)}}
                   .dump(2)
            << '\n';
    } else {
        out << cfg.x << " × " << cfg.y << " = " << result.product << " (p=" << probability_text(result.probability)
            << ")\n\n";
        print_metrics_table(out, {{"multiplier n=" + std::to_string(cfg.n), metrics}});
    }
    return kOk;
}

int cmd_add(const CliConfig& cfg, std::ostream& out) {
    const auto limit = dense_limit_from_env();
    if (cfg.bits == 0 || cfg.bits > 62) {
        throw DomainError("--bits must be in [1, 62]");
    }
    const auto sum = build_sum_circuit(cfg.bits, cfg.values, cfg.carry, ordering(cfg));
    auto state = init_basis(sum.circuit.qubit_count(), 0, limit);
    state.run(sum.circuit);
    const auto result = readout(state, sum.plan.accumulator);
    const auto metrics = compute_metrics(sum.circuit);

    if (cfg.json) {
        out << nlohmann::json{{"bits", cfg.bits},
                              {"values", cfg.values},
                              {"carry_qubits", sum.plan.carry_qubits.size()},
                              {"accumulator_width", sum.plan.accumulator.size()},
                              {"sum", result.value},
                              {"probability", result.probability},
                              {"metrics", metrics_to_json(metrics)}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    for (std::size_t i = 0; i < cfg.values.size(); ++i) {
        out << (i == 0 ? "" : " + ") << cfg.values[i];
    }
    out << " = " << result.value << " (mod 2^" << sum.plan.accumulator.size() << ", t=" << sum.plan.carry_qubits.size()
        << ", p=" << probability_text(result.probability) << ")\n";
    out << "qft_blocks=" << metrics.qft_blocks << " iqft_blocks=" << metrics.iqft_blocks << '\n';
    return kOk;
}

int cmd_emit(const CliConfig& cfg, std::ostream& out) {
    check_width(cfg.n);
    const auto multiplier = build_multiplier(cfg.n, ordering(cfg));
    std::string text;
    if (cfg.format == "json") {
        text = circuit_to_json(multiplier.circuit).dump(2) + "\n";
    } else if (cfg.format == "qasm") {
        text = circuit_to_qasm(multiplier.circuit);
    } else {
        throw DomainError("--format must be json or qasm");
    }
    write_text_file(cfg.output, text);
    out << "wrote " << multiplier.circuit.size() << " gates on " << multiplier.circuit.qubit_count() << " qubits to "
        << cfg.output << '\n';
    return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    check_width(cfg.n);
    const auto limit = dense_limit_from_env();
    const auto mode = resolve_mode(cfg.mode, cfg.n, limit);
    const auto sampling = cfg.exhaustive ? Sampling::all() : Sampling::random(cfg.samples, cfg.seed);
    if (!cfg.exhaustive && cfg.samples == 0) {
        throw DomainError("verify needs --exhaustive or --samples N");
    }
    const auto report = run_suite(cfg.n, mode, sampling, limit);
    const auto doc = report_to_json(report);
    if (!cfg.output.empty()) {
        write_text_file(cfg.output, doc.dump(2) + "\n");
    }
    if (cfg.json) {
        out << doc.dump(2) << '\n';
    } else {
        const auto passed = report.cases_run - report.failures.size();
        out << "n=" << report.n << " mode=" << to_string(report.mode) << ' ' << passed << '/' << report.cases_run
            << " passed, min p=" << probability_text(report.min_probability) << '\n';
        for (const auto& f : report.failures) {
            out << "  FAIL " << f.x << " * " << f.y << ": expected " << f.expected << ", got " << f.got
                << " (p=" << probability_text(f.probability) << ")\n";
        }
        out << "qft blocks: proposed " << report.metrics_proposed.qft_blocks << ", baseline "
            << report.metrics_baseline.qft_blocks << '\n';
    }
    return report.passed() ? kOk : kFailure;
}

int cmd_metrics(const CliConfig& cfg, std::ostream& out) {
    check_width(cfg.n);
    std::vector<std::pair<std::string, CircuitMetrics>> rows;
    nlohmann::json doc;
    for (auto order : {QftOrdering::SwapFree, QftOrdering::ExplicitSwaps}) {
        const std::string suffix = order == QftOrdering::SwapFree ? "swap-free" : "swaps";
        const auto proposed = compute_metrics(build_multiplier(cfg.n, order).circuit);
        const auto baseline = build_baseline_sequential(cfg.n, order).metrics;
        rows.emplace_back("proposed (" + suffix + ")", proposed);
        rows.emplace_back("sequential (" + suffix + ")", baseline);
        doc[suffix] = {{"proposed", metrics_to_json(proposed)}, {"baseline", metrics_to_json(baseline)}};
    }
    if (cfg.json) {
        doc["n"] = cfg.n;
        out << doc.dump(2) << '\n';
    } else {
        out << "n=" << cfg.n << '\n';
        print_metrics_table(out, rows);
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toffoli partial-product multiplier with a single-QFT parallel adder", "qmul"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* multiply = app.add_subcommand("multiply", "Multiply two n-bit integers on the simulator");
    multiply->add_option("--n", cfg.n, "Input bit-width")->required();
    multiply->add_option("--x", cfg.x, "Multiplicand")->required();
    multiply->add_option("--y", cfg.y, "Multiplier")->required();
    multiply->add_option("--mode", cfg.mode, "dense or hybrid (default: dense when it fits)");
    multiply->add_flag("--swaps", cfg.swaps, "Emit explicit QFT swaps");
    multiply->add_flag("--json", cfg.json, "Machine-readable output");

    auto* add = app.add_subcommand("add", "Sum integers with the single-QFT parallel adder");
    add->add_option("--bits", cfg.bits, "Operand width")->required();
    add->add_option("--values", cfg.values, "Comma-separated operands")->required()->delimiter(',');
    add->add_option("--t", cfg.carry, "Carry qubits (default ceil(log2 N))");
    add->add_flag("--swaps", cfg.swaps, "Emit explicit QFT swaps");
    add->add_flag("--json", cfg.json, "Machine-readable output");

    auto* emit = app.add_subcommand("emit", "Write the multiplier circuit to a file");
    emit->add_option("--n", cfg.n, "Input bit-width")->required();
    emit->add_option("--format", cfg.format, "json or qasm")->required();
    emit->add_option("--out", cfg.output, "Output path")->required();
    emit->add_flag("--swaps", cfg.swaps, "Emit explicit QFT swaps");

    auto* verify = app.add_subcommand("verify", "Check the multiplier against integer multiplication");
    verify->add_option("--n", cfg.n, "Input bit-width")->required();
    auto* exhaustive = verify->add_flag("--exhaustive", cfg.exhaustive, "All 2^(2n) input pairs");
    auto* samples = verify->add_option("--samples", cfg.samples, "Number of random pairs");
    verify->add_option("--seed", cfg.seed, "PRNG seed for --samples");
    verify->add_option("--mode", cfg.mode, "dense or hybrid (default: dense when it fits)");
    verify->add_option("--out", cfg.output, "Write the JSON report here");
    verify->add_flag("--json", cfg.json, "Print the JSON report");
    exhaustive->excludes(samples);

    auto* metrics = app.add_subcommand("metrics", "Gate counts for the proposed and sequential designs");
    metrics->add_option("--n", cfg.n, "Input bit-width")->required();
    metrics->add_flag("--json", cfg.json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (multiply->parsed()) {
            return cmd_multiply(cfg, out);
        }
        if (add->parsed()) {
            return cmd_add(cfg, out);
        }
        if (emit->parsed()) {
            return cmd_emit(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        return cmd_metrics(cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace qmul::cli
