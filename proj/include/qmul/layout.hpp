// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qmul/circuit.hpp"

#include <cstddef>
#include <vector>

namespace qmul {

/**
 * @brief Global qubit assignment for the n-bit multiplier.
 *
 * All registers list their qubits least-significant first. The canonical
 * layout packs registers bottom-up:
 *
 *   [0, 2n)                          aux[0]: first partial product + carry qubit
 *   2n + (i-1)(2n-1) ...             aux[i], i = 1..n-1, 2n-1 qubits each
 *   2n^2 - n + 1 ...                 x, n qubits
 *   2n^2 + 1 ...                     y, n qubits
 *
 * so global index 0 is the least-significant accumulator qubit and the total
 * is 2n^2 + n + 1.
 *
 * MSB-first bit labels x_1..x_n map to x_qubits[n-1]..x_qubits[0]; the
 * same holds for y. Partial-product register i (1-based, multiplying by
 * y_{n+1-i}) is aux_registers[i-1].
 */
struct RegisterLayout {
    std::size_t n = 0;
    std::vector<Qubit> x_qubits;
    std::vector<Qubit> y_qubits;
    std::vector<std::vector<Qubit>> aux_registers;
    std::size_t total_qubits = 0;

    /// Throws StructuralError unless the registers are disjoint, cover
    /// [0, total_qubits) and have the widths the multiplier expects.
    void validate() const;

    friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

/// Throws DomainError for n == 0.
[[nodiscard]] RegisterLayout layout_for(std::size_t n);

/// 2n^2 + n + 1.
[[nodiscard]] constexpr std::size_t multiplier_qubit_count(std::size_t n) noexcept { return 2 * n * n + n + 1; }

} // namespace qmul
