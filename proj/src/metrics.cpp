// SPDX-License-Identifier: Apache-2.0

#include "qmul/metrics.hpp"

#include <algorithm>
#include <set>

namespace qmul {

CircuitMetrics compute_metrics(const Circuit& circuit) {
    CircuitMetrics metrics;
    metrics.qubit_count = circuit.qubit_count();
    metrics.total_gates = circuit.size();

    std::vector<std::size_t> layer(circuit.qubit_count(), 0);
    for (const auto& gate : circuit) {
        ++metrics.counts[static_cast<std::size_t>(gate.kind())];
        std::size_t top = 0;
        for (auto q : gate.qubits()) {
            top = std::max(top, layer[q]);
        }
        for (auto q : gate.qubits()) {
            layer[q] = top + 1;
        }
        metrics.depth = std::max(metrics.depth, top + 1);
    }

    for (const auto& annotation : circuit.annotations()) {
        if (annotation.kind == BlockKind::Qft) {
            ++metrics.qft_blocks;
            std::set<Qubit> touched;
            for (auto i = annotation.begin; i < annotation.end; ++i) {
                auto qs = circuit.gates()[i].qubits();
                touched.insert(qs.begin(), qs.end());
            }
            metrics.qft_widths.push_back(touched.size());
        } else if (annotation.kind == BlockKind::Iqft) {
            ++metrics.iqft_blocks;
        }
    }
    return metrics;
}

} // namespace qmul
