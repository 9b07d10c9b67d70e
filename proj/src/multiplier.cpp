// SPDX-License-Identifier: Apache-2.0

#include "qmul/multiplier.hpp"

#include "qmul/errors.hpp"
#include "qmul/hybrid.hpp"

namespace qmul {

CircuitFragment partial_product_stage(const RegisterLayout& layout) {
    layout.validate();
    const auto n = layout.n;
    std::vector<Gate> gates;
    gates.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            gates.push_back(Gate::toffoli(layout.y_qubits[i], layout.x_qubits[j], layout.aux_registers[i][i + j]));
        }
    }
    return CircuitFragment::block(BlockKind::ToffoliStage, "toffoli-stage", std::move(gates));
}

MultiplierCircuit build_multiplier(std::size_t n, QftOrdering ordering) {
    if (n > kMaxMultiplierBits) {
        throw DomainError("multiplier bit-width " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxMultiplierBits));
    }
    auto layout = layout_for(n);

    AdderPlan plan;
    plan.accumulator = layout.aux_registers[0];
    plan.carry_qubits = {layout.aux_registers[0].back()};
    plan.addends.assign(layout.aux_registers.begin() + 1, layout.aux_registers.end());

    Circuit circuit(layout.total_qubits);
    circuit.append(partial_product_stage(layout));
    circuit.append(parallel_adder(plan, ordering));

    auto result_qubits = layout.aux_registers[0];
    return {n, std::move(layout), std::move(circuit), std::move(plan), std::move(result_qubits)};
}

std::string_view to_string(SimMode mode) noexcept { return mode == SimMode::Dense ? "dense" : "hybrid"; }

SimMode sim_mode_from_string(std::string_view name) {
    if (name == "dense") {
        return SimMode::Dense;
    }
    if (name == "hybrid") {
        return SimMode::Hybrid;
    }
    throw DomainError("unknown simulation mode '" + std::string(name) + "'");
}

MultiplyResult simulate_multiply(const MultiplierCircuit& multiplier, std::uint64_t x, std::uint64_t y, SimMode mode,
                                 std::size_t dense_limit) {
    const auto n = multiplier.n;
    if ((x >> n) != 0 || (y >> n) != 0) {
        throw DomainError("inputs must be below 2^" + std::to_string(n));
    }
    const auto& layout = multiplier.layout;

    if (mode == SimMode::Dense) {
        if (layout.total_qubits > dense_limit) {
            throw CapacityError("dense simulation of n=" + std::to_string(n) + " needs " +
                                std::to_string(layout.total_qubits) + " qubits, above the limit of " +
                                std::to_string(dense_limit) + "; use hybrid mode");
        }
        std::uint64_t basis = 0;
        for (std::size_t b = 0; b < n; ++b) {
            basis |= ((x >> b) & 1U) << layout.x_qubits[b];
            basis |= ((y >> b) & 1U) << layout.y_qubits[b];
        }
        auto state = init_basis(layout.total_qubits, basis, dense_limit);
        state.run(multiplier.circuit);
        const auto r = readout(state, multiplier.result_qubits);
        return {r.value, r.probability};
    }

    ProductState state(layout.total_qubits);
    for (std::size_t b = 0; b < n; ++b) {
        state.set_bit(layout.x_qubits[b], (x >> b) & 1U);
        state.set_bit(layout.y_qubits[b], (y >> b) & 1U);
    }
    state.run(multiplier.circuit);
    const auto r = state.readout(multiplier.result_qubits);
    return {r.value, r.probability};
}

MultiplyResult simulate_multiply(std::uint64_t x, std::uint64_t y, std::size_t n, SimMode mode,
                                 std::size_t dense_limit, QftOrdering ordering) {
    if (n == 0) {
        throw DomainError("multiplier bit-width must be at least 1");
    }
    if (n <= kMaxMultiplierBits && ((x >> n) != 0 || (y >> n) != 0)) {
        throw DomainError("inputs must be below 2^" + std::to_string(n));
    }
    if (mode == SimMode::Dense && multiplier_qubit_count(n) > dense_limit) {
        throw CapacityError("dense simulation of n=" + std::to_string(n) + " needs " +
                            std::to_string(multiplier_qubit_count(n)) + " qubits, above the limit of " +
                            std::to_string(dense_limit) + "; use hybrid mode");
    }
    return simulate_multiply(build_multiplier(n, ordering), x, y, mode, dense_limit);
}

} // namespace qmul
