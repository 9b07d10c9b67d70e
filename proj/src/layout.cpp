// SPDX-License-Identifier: Apache-2.0

#include "qmul/layout.hpp"

#include "qmul/errors.hpp"

#include <numeric>

namespace qmul {

namespace {

std::vector<Qubit> contiguous(std::size_t first, std::size_t count) {
    std::vector<Qubit> qubits(count);
    std::iota(qubits.begin(), qubits.end(), static_cast<Qubit>(first));
    return qubits;
}

} // namespace

RegisterLayout layout_for(std::size_t n) {
    if (n == 0) {
        throw DomainError("multiplier bit-width must be at least 1");
    }
    RegisterLayout layout;
    layout.n = n;
    std::size_t next = 0;
    layout.aux_registers.push_back(contiguous(next, 2 * n));
    next += 2 * n;
    for (std::size_t i = 1; i < n; ++i) {
        layout.aux_registers.push_back(contiguous(next, 2 * n - 1));
        next += 2 * n - 1;
    }
    layout.x_qubits = contiguous(next, n);
    next += n;
    layout.y_qubits = contiguous(next, n);
    next += n;
    layout.total_qubits = next;
    return layout;
}

void RegisterLayout::validate() const {
    if (n == 0) {
        throw StructuralError("layout has zero bit-width");
    }
    if (x_qubits.size() != n || y_qubits.size() != n) {
        throw StructuralError("input registers must have n qubits");
    }
    if (aux_registers.size() != n) {
        throw StructuralError("layout needs n partial-product registers");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto expected = i == 0 ? 2 * n : 2 * n - 1;
        if (aux_registers[i].size() != expected) {
            throw StructuralError("partial-product register " + std::to_string(i) + " has width " +
                                  std::to_string(aux_registers[i].size()) + ", expected " + std::to_string(expected));
        }
    }
    if (total_qubits != multiplier_qubit_count(n)) {
        throw StructuralError("layout total does not equal 2n^2 + n + 1");
    }
    std::vector<bool> seen(total_qubits, false);
    auto mark = [&](const std::vector<Qubit>& reg) {
        for (auto q : reg) {
            if (q >= total_qubits || seen[q]) {
                throw StructuralError("layout registers overlap or leave [0, total_qubits)");
            }
            seen[q] = true;
        }
    };
    mark(x_qubits);
    mark(y_qubits);
    for (const auto& reg : aux_registers) {
        mark(reg);
    }
}

} // namespace qmul
