// SPDX-License-Identifier: Apache-2.0

#include "qmul/qft.hpp"

#include "qmul/errors.hpp"

#include <algorithm>
#include <set>

namespace qmul {

namespace {

void check_register(std::span<const Qubit> qubits, const char* what) {
    if (qubits.empty()) {
        throw DomainError(std::string(what) + " register is empty");
    }
    std::set<Qubit> unique(qubits.begin(), qubits.end());
    if (unique.size() != qubits.size()) {
        throw StructuralError(std::string(what) + " register repeats a qubit");
    }
}

std::vector<Gate> qft_gates(std::span<const Qubit> r, QftOrdering ordering) {
    const auto m = r.size();
    std::vector<Gate> gates;
    for (auto p = m; p-- > 0;) {
        gates.push_back(Gate::h(r[p]));
        for (auto j = p; j-- > 0;) {
            gates.push_back(Gate::cphase(r[j], r[p], DyadicAngle(+1, static_cast<unsigned>(p - j + 1))));
        }
    }
    if (ordering == QftOrdering::ExplicitSwaps) {
        for (std::size_t i = 0; i < m / 2; ++i) {
            gates.push_back(Gate::swap(r[i], r[m - 1 - i]));
        }
    }
    return gates;
}

} // namespace

CircuitFragment qft_circuit(std::span<const Qubit> qubits, QftOrdering ordering) {
    check_register(qubits, "qft");
    return CircuitFragment::block(BlockKind::Qft, "qft", qft_gates(qubits, ordering));
}

CircuitFragment iqft_circuit(std::span<const Qubit> qubits, QftOrdering ordering) {
    check_register(qubits, "iqft");
    auto forward = qft_gates(qubits, ordering);
    std::vector<Gate> gates;
    gates.reserve(forward.size());
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
        if (it->kind() == GateKind::CPhase) {
            gates.push_back(Gate::cphase(it->controls()[0], it->targets()[0], it->angle().negated()));
        } else {
            gates.push_back(*it);
        }
    }
    return CircuitFragment::block(BlockKind::Iqft, "iqft", std::move(gates));
}

CircuitFragment fourier_add_block(std::span<const Qubit> addend, std::span<const Qubit> accumulator,
                                  QftOrdering ordering, std::string label) {
    check_register(accumulator, "accumulator");
    std::set<Qubit> seen(accumulator.begin(), accumulator.end());
    for (auto q : addend) {
        if (!seen.insert(q).second) {
            throw StructuralError("addend overlaps the accumulator or repeats a qubit");
        }
    }
    const auto m = accumulator.size();
    if (addend.size() > m) {
        throw StructuralError("addend of width " + std::to_string(addend.size()) +
                              " is wider than the accumulator (" + std::to_string(m) + ")");
    }
    // Accumulator qubit carrying exp(2 pi i a / 2^{p+1}).
    auto fourier_qubit = [&](std::size_t p) {
        return ordering == QftOrdering::SwapFree ? accumulator[p] : accumulator[m - 1 - p];
    };
    std::vector<Gate> gates;
    for (auto p = m; p-- > 0;) {
        for (std::size_t j = 0; j <= p && j < addend.size(); ++j) {
            gates.push_back(Gate::cphase(addend[j], fourier_qubit(p), DyadicAngle(+1, static_cast<unsigned>(p + 1 - j))));
        }
    }
    return CircuitFragment::block(BlockKind::Adder, std::move(label), std::move(gates));
}

} // namespace qmul
