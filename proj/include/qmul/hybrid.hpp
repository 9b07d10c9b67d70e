// SPDX-License-Identifier: Apache-2.0

/**
 * @file hybrid.hpp
 * @brief Product-state simulation for basis-state arithmetic circuits.
 *
 * Every qubit is held as its own two-amplitude state. A CPhase whose control
 * (or target) is in a computational basis state is resolved classically: it
 * is dropped when that bit is 0 and becomes an unconditional phase on the
 * other qubit when it is 1. If neither operand is classical, the control is
 * measured first (most likely branch, lower bit on ties) and the branch
 * probability is folded into the running probability. Because a measured
 * qubit may afterwards only see diagonal or permutation gates, measuring it
 * early yields the same outcome distribution as measuring at the end; an H
 * on a measured qubit is rejected.
 *
 * With basis inputs, the QFT leaves the accumulator in a product state, the
 * Fourier add blocks only apply phases, and the IQFT is resolved qubit by
 * qubit, so the whole multiplier runs in O(gates) time.
 */

#pragma once

#include "qmul/circuit.hpp"
#include "qmul/statevector.hpp"

#include <array>
#include <span>
#include <vector>

namespace qmul {

class ProductState {
public:
    /// |value> on qubit_count qubits, value given as one bit per qubit.
    explicit ProductState(std::size_t qubit_count);

    void set_bit(Qubit q, bool value);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return qubits_.size(); }
    [[nodiscard]] const std::array<Amplitude, 2>& qubit(Qubit q) const { return qubits_.at(q).amplitudes; }
    /// Probability of the branches chosen by early measurements so far.
    [[nodiscard]] double branch_probability() const noexcept { return probability_; }

    void apply(const Gate& gate);
    void run(const Circuit& circuit);

    /**
     * @brief Measures the listed qubits (qubits[0] least significant).
     *
     * Each qubit takes its more likely value; the returned probability is the
     * joint probability of every branch taken, which equals the marginal of
     * the returned value whenever all early-measured qubits are listed.
     * Throws StructuralError if an early-measured qubit is not listed.
     */
    [[nodiscard]] ReadoutResult readout(std::span<const Qubit> qubits) const;

private:
    struct QubitState {
        std::array<Amplitude, 2> amplitudes{Amplitude{1.0}, Amplitude{0.0}};
        bool measured = false;
    };

    /// 0 or 1 when the qubit is exactly in a basis state, -1 otherwise.
    [[nodiscard]] int classical_value(Qubit q) const;
    int measure(Qubit q);
    void check_gate(const Gate& gate) const;

    std::vector<QubitState> qubits_;
    double probability_ = 1.0;
};

} // namespace qmul
