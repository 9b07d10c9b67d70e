// SPDX-License-Identifier: Apache-2.0

#include "qmul/adder.hpp"

#include "qmul/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace qmul {

void AdderPlan::validate() const {
    if (accumulator.empty()) {
        throw StructuralError("adder plan has an empty accumulator");
    }
    std::set<Qubit> seen;
    auto claim = [&](const std::vector<Qubit>& reg) {
        for (auto q : reg) {
            if (!seen.insert(q).second) {
                throw StructuralError("adder plan registers overlap at qubit " + std::to_string(q));
            }
        }
    };
    claim(accumulator);
    for (const auto& addend : addends) {
        if (addend.size() > accumulator.size()) {
            throw StructuralError("adder plan has an addend wider than the accumulator");
        }
        claim(addend);
    }
    if (carry_qubits.size() > accumulator.size()) {
        throw StructuralError("adder plan has more carry qubits than accumulator qubits");
    }
    for (auto q : carry_qubits) {
        if (std::find(accumulator.begin(), accumulator.end(), q) == accumulator.end()) {
            throw StructuralError("carry qubit " + std::to_string(q) + " is not part of the accumulator");
        }
    }
}

std::size_t carry_qubits_for(std::size_t numbers_summed) noexcept {
    if (numbers_summed <= 1) {
        return 0;
    }
    return static_cast<std::size_t>(std::bit_width(numbers_summed - 1));
}

CircuitFragment parallel_adder(const AdderPlan& plan, QftOrdering ordering) {
    plan.validate();
    auto fragment = qft_circuit(plan.accumulator, ordering);
    for (std::size_t i = 0; i < plan.addends.size(); ++i) {
        fragment.append(
            fourier_add_block(plan.addends[i], plan.accumulator, ordering, "adder(" + std::to_string(i + 1) + ")"));
    }
    fragment.append(iqft_circuit(plan.accumulator, ordering));
    return fragment;
}

CircuitFragment prepare_value(std::span<const Qubit> reg, std::uint64_t value) {
    if (reg.size() < 64 && (value >> reg.size()) != 0) {
        throw DomainError("value " + std::to_string(value) + " does not fit in " + std::to_string(reg.size()) +
                          " qubits");
    }
    std::vector<Gate> gates;
    for (std::size_t b = 0; b < reg.size(); ++b) {
        if ((value >> b) & 1U) {
            gates.push_back(Gate::x(reg[b]));
        }
    }
    return CircuitFragment::block(BlockKind::Prepare, "prepare", std::move(gates));
}

SumCircuit build_sum_circuit(std::size_t bits, std::span<const std::uint64_t> values,
                             std::optional<std::size_t> carry_qubits, QftOrdering ordering) {
    if (bits == 0 || bits >= 63) {
        throw DomainError("operand width must be in [1, 62]");
    }
    if (values.empty()) {
        throw DomainError("nothing to add");
    }
    for (auto v : values) {
        if ((v >> bits) != 0) {
            throw DomainError("value " + std::to_string(v) + " needs more than " + std::to_string(bits) + " bits");
        }
    }
    const auto t = carry_qubits.value_or(carry_qubits_for(values.size()));
    const auto width = bits + t;

    AdderPlan plan;
    plan.accumulator.resize(width);
    std::iota(plan.accumulator.begin(), plan.accumulator.end(), Qubit{0});
    plan.carry_qubits.assign(plan.accumulator.begin() + static_cast<std::ptrdiff_t>(bits), plan.accumulator.end());
    auto next = static_cast<Qubit>(width);
    for (std::size_t i = 1; i < values.size(); ++i) {
        std::vector<Qubit> reg(bits);
        std::iota(reg.begin(), reg.end(), next);
        next += static_cast<Qubit>(bits);
        plan.addends.push_back(std::move(reg));
    }

    CircuitFragment body = prepare_value(plan.accumulator, values[0]);
    for (std::size_t i = 1; i < values.size(); ++i) {
        body.append(prepare_value(plan.addends[i - 1], values[i]));
    }
    body.append(parallel_adder(plan, ordering));

    Circuit circuit(next);
    circuit.append(body);
    return {std::move(circuit), std::move(plan)};
}

} // namespace qmul
