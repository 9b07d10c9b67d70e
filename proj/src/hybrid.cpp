// SPDX-License-Identifier: Apache-2.0

#include "qmul/hybrid.hpp"

#include "qmul/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qmul {

ProductState::ProductState(std::size_t qubit_count) : qubits_(qubit_count) {
    if (qubit_count == 0) {
        throw DomainError("product state needs at least one qubit");
    }
}

void ProductState::set_bit(Qubit q, bool value) {
    auto& state = qubits_.at(q);
    state.amplitudes = value ? std::array<Amplitude, 2>{0.0, 1.0} : std::array<Amplitude, 2>{1.0, 0.0};
    state.measured = false;
}

int ProductState::classical_value(Qubit q) const {
    const auto& a = qubits_[q].amplitudes;
    if (a[1] == 0.0) {
        return 0;
    }
    if (a[0] == 0.0) {
        return 1;
    }
    return -1;
}

int ProductState::measure(Qubit q) {
    auto& state = qubits_[q];
    const double p0 = std::norm(state.amplitudes[0]);
    const double p1 = std::norm(state.amplitudes[1]);
    const int outcome = p1 > p0 ? 1 : 0;
    probability_ *= (outcome == 1 ? p1 : p0) / (p0 + p1);
    state.amplitudes = outcome == 1 ? std::array<Amplitude, 2>{0.0, 1.0} : std::array<Amplitude, 2>{1.0, 0.0};
    state.measured = true;
    return outcome;
}

void ProductState::check_gate(const Gate& gate) const {
    if (gate.max_qubit() >= qubits_.size()) {
        throw StructuralError("gate '" + gate.to_string() + "' addresses a qubit outside the product state");
    }
}

void ProductState::apply(const Gate& gate) {
    check_gate(gate);
    const auto qs = gate.qubits();
    switch (gate.kind()) {
    case GateKind::H: {
        auto& state = qubits_[qs[0]];
        if (state.measured) {
            throw StructuralError("hybrid simulation cannot apply H to qubit " + std::to_string(qs[0]) +
                                  " after measuring it");
        }
        const double s = std::numbers::sqrt2 / 2.0;
        const auto a0 = state.amplitudes[0];
        const auto a1 = state.amplitudes[1];
        state.amplitudes = {s * (a0 + a1), s * (a0 - a1)};
        break;
    }
    case GateKind::X: std::swap(qubits_[qs[0]].amplitudes[0], qubits_[qs[0]].amplitudes[1]); break;
    case GateKind::Swap: std::swap(qubits_[qs[0]], qubits_[qs[1]]); break;
    case GateKind::CPhase: {
        // Symmetric in its two operands: resolve whichever is classical.
        Qubit control = qs[0];
        Qubit target = qs[1];
        int bit = classical_value(control);
        if (bit < 0 && classical_value(target) >= 0) {
            std::swap(control, target);
            bit = classical_value(control);
        }
        if (bit < 0) {
            bit = measure(control);
        }
        if (bit == 1) {
            qubits_[target].amplitudes[1] *= gate.angle().phase();
        }
        break;
    }
    case GateKind::Toffoli: {
        const int c1 = classical_value(qs[0]) >= 0 ? classical_value(qs[0]) : measure(qs[0]);
        const int c2 = classical_value(qs[1]) >= 0 ? classical_value(qs[1]) : measure(qs[1]);
        if (c1 == 1 && c2 == 1) {
            std::swap(qubits_[qs[2]].amplitudes[0], qubits_[qs[2]].amplitudes[1]);
        }
        break;
    }
    }
}

void ProductState::run(const Circuit& circuit) {
    if (circuit.qubit_count() != qubits_.size()) {
        throw StructuralError("circuit and product state disagree on qubit count");
    }
    for (const auto& gate : circuit) {
        apply(gate);
    }
}

ReadoutResult ProductState::readout(std::span<const Qubit> qubits) const {
    std::vector<bool> listed(qubits_.size(), false);
    for (auto q : qubits) {
        if (q >= qubits_.size() || listed[q]) {
            throw StructuralError("readout qubits must be distinct and inside the state");
        }
        listed[q] = true;
    }
    for (std::size_t q = 0; q < qubits_.size(); ++q) {
        if (qubits_[q].measured && !listed[q]) {
            throw StructuralError("qubit " + std::to_string(q) + " was measured during simulation but is not read out");
        }
    }
    ReadoutResult result{0, probability_};
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const auto& a = qubits_[qubits[k]].amplitudes;
        const double p0 = std::norm(a[0]);
        const double p1 = std::norm(a[1]);
        const bool one = p1 > p0;
        result.probability *= (one ? p1 : p0) / (p0 + p1);
        if (one) {
            result.value |= std::uint64_t{1} << k;
        }
    }
    return result;
}

} // namespace qmul
