// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qmul/circuit.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace qmul {

struct CircuitMetrics {
    /// Indexed by GateKind.
    std::array<std::size_t, 5> counts{};
    std::size_t total_gates = 0;
    /// Greedy layering, every gate counts as one layer regardless of arity.
    std::size_t depth = 0;
    std::size_t qft_blocks = 0;
    std::size_t iqft_blocks = 0;
    std::size_t qubit_count = 0;
    /// Distinct qubits touched by each qft block, in circuit order.
    std::vector<std::size_t> qft_widths;

    [[nodiscard]] std::size_t count(GateKind kind) const noexcept { return counts[static_cast<std::size_t>(kind)]; }

    friend bool operator==(const CircuitMetrics&, const CircuitMetrics&) = default;
};

[[nodiscard]] CircuitMetrics compute_metrics(const Circuit& circuit);

} // namespace qmul
