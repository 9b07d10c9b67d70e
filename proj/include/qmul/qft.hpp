// SPDX-License-Identifier: Apache-2.0

/**
 * @file qft.hpp
 * @brief QFT / IQFT synthesis and the Fourier-basis addition block.
 *
 * For a register r (r[0] least significant) holding |a>, the transform maps
 * |a> to 2^{-m/2} sum_k exp(2 pi i a k / 2^m) |k>. In product form, the
 * output qubit of significance l carries the phase exp(2 pi i a / 2^{m-l}).
 *
 * Swap-free synthesis leaves that output bit on r[m-1-l], i.e. r[p] holds
 * exp(2 pi i a / 2^{p+1}). With explicit swaps the bits are reversed back so
 * r[l] holds output significance l.
 */

#pragma once

#include "qmul/circuit.hpp"

#include <span>

namespace qmul {

enum class QftOrdering : std::uint8_t {
    SwapFree,      ///< output left bit-reversed; adders index Fourier qubits accordingly
    ExplicitSwaps, ///< trailing swaps restore natural order
};

/// Throws DomainError on an empty register, StructuralError on repeated qubits.
[[nodiscard]] CircuitFragment qft_circuit(std::span<const Qubit> qubits,
                                          QftOrdering ordering = QftOrdering::SwapFree);

/// Reverse of qft_circuit with every angle negated.
[[nodiscard]] CircuitFragment iqft_circuit(std::span<const Qubit> qubits,
                                           QftOrdering ordering = QftOrdering::SwapFree);

/**
 * @brief Controlled phases adding a computational-basis addend into a
 * Fourier-basis accumulator.
 *
 * Addend bit j (significance 2^j) must add 2 pi 2^j / 2^{p+1} to the Fourier
 * qubit carrying exp(2 pi i a / 2^{p+1}); for j > p that is a whole turn and
 * no gate is emitted, so each bit contributes CPhase(k = p + 1 - j) for
 * p = j .. m-1. Conjugated by qft_circuit / iqft_circuit on the accumulator
 * this maps |a>|b> to |(a + b) mod 2^m>|b>.
 *
 * Throws StructuralError if the registers overlap or the addend is wider
 * than the accumulator.
 */
[[nodiscard]] CircuitFragment fourier_add_block(std::span<const Qubit> addend, std::span<const Qubit> accumulator,
                                                QftOrdering ordering = QftOrdering::SwapFree,
                                                std::string label = "adder");

} // namespace qmul
