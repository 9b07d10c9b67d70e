// SPDX-License-Identifier: Apache-2.0

/**
 * @file statevector.hpp
 * @brief Exact dense state-vector simulation.
 *
 * Amplitude index b is the basis state whose qubit q is bit q of b
 * (little-endian). Gates are applied in place by iterating only over the
 * amplitudes they touch.
 */

#pragma once

#include "qmul/circuit.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qmul {

using Amplitude = std::complex<double>;

/// 2^26 amplitudes at 16 bytes each is 1 GiB.
inline constexpr std::size_t kDefaultDenseLimit = 26;

/// Reads QMUL_DENSE_LIMIT, falling back to kDefaultDenseLimit when unset or unparsable.
[[nodiscard]] std::size_t dense_limit_from_env();

class StateVector {
public:
    /// Throws CapacityError when qubit_count exceeds dense_limit.
    StateVector(std::size_t qubit_count, std::vector<Amplitude> amplitudes,
                std::size_t dense_limit = kDefaultDenseLimit);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return qubit_count_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }

    /// Sum of squared magnitudes.
    [[nodiscard]] double norm_squared() const noexcept;

    void apply(const Gate& gate);
    void run(const Circuit& circuit);

private:
    void check_gate(const Gate& gate) const;
    /// Applies a run of CPhase gates in one pass; false if the run touches too many qubits.
    bool apply_diagonal_run(std::span<const Gate> run);
    void apply_h(Qubit target);
    void apply_x(Qubit target);
    void apply_swap(Qubit a, Qubit b);
    void apply_cphase(Qubit control, Qubit target, Amplitude phase);
    void apply_toffoli(Qubit c1, Qubit c2, Qubit target);

    static constexpr std::size_t kMinFusedRun = 3;
    static constexpr std::size_t kMaxFusedQubits = 16;

    std::size_t qubit_count_;
    std::vector<Amplitude> amplitudes_;
};

/// |value> on qubit_count qubits. Throws DomainError when value >= 2^qubit_count.
[[nodiscard]] StateVector init_basis(std::size_t qubit_count, std::uint64_t value,
                                     std::size_t dense_limit = kDefaultDenseLimit);

/// Functional forms of StateVector::apply / StateVector::run.
[[nodiscard]] StateVector apply(StateVector state, const Gate& gate);
[[nodiscard]] StateVector run(StateVector state, const Circuit& circuit);

struct ReadoutResult {
    std::uint64_t value = 0;
    double probability = 0.0;
};

/**
 * @brief Most likely value of the listed qubits.
 *
 * qubits[0] is the least-significant bit of the decoded value. The marginal
 * distribution over the listed qubits is computed exactly; on ties the lower
 * value wins.
 */
[[nodiscard]] ReadoutResult readout(const StateVector& state, std::span<const Qubit> qubits);

} // namespace qmul
