// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qmul/circuit.hpp"
#include "qmul/qft.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qmul {

/**
 * @brief Operands of a multi-input Fourier adder.
 *
 * The accumulator's initial value is the first number summed; each addend
 * is phase-added into it. carry_qubits are the accumulator's extra
 * high-order qubits beyond the operand width.
 */
struct AdderPlan {
    std::vector<Qubit> accumulator;
    std::vector<std::vector<Qubit>> addends;
    std::vector<Qubit> carry_qubits;

    /// Throws StructuralError on overlaps, an empty accumulator, carry qubits
    /// outside the accumulator, or an addend wider than the accumulator.
    void validate() const;
};

/// ceil(log2(numbers_summed)): carry qubits that keep a sum of that many
/// w-bit numbers from wrapping a (w + t)-qubit accumulator.
[[nodiscard]] std::size_t carry_qubits_for(std::size_t numbers_summed) noexcept;

/// One QFT on the accumulator, one Fourier add block per addend, one IQFT.
[[nodiscard]] CircuitFragment parallel_adder(const AdderPlan& plan, QftOrdering ordering = QftOrdering::SwapFree);

/// Basis-state preparation: X on every qubit whose bit in value is set.
[[nodiscard]] CircuitFragment prepare_value(std::span<const Qubit> reg, std::uint64_t value);

/**
 * @brief Self-contained circuit summing integer values of equal width.
 *
 * values[0] is loaded into the accumulator (bits + t qubits at indices
 * [0, bits + t)); the rest sit in addend registers stacked above it. The
 * default t is carry_qubits_for(values.size()).
 */
struct SumCircuit {
    Circuit circuit;
    AdderPlan plan;
};

/// Throws DomainError when values is empty, bits is 0 or a value needs more than bits bits.
[[nodiscard]] SumCircuit build_sum_circuit(std::size_t bits, std::span<const std::uint64_t> values,
                                           std::optional<std::size_t> carry_qubits = std::nullopt,
                                           QftOrdering ordering = QftOrdering::SwapFree);

} // namespace qmul
