// SPDX-License-Identifier: Apache-2.0

#include "qmul/circuit.hpp"

#include "qmul/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qmul {

double DyadicAngle::radians() const noexcept {
    return sign_ * std::ldexp(2.0 * std::numbers::pi, -static_cast<int>(denom_pow_));
}

std::complex<double> DyadicAngle::phase() const noexcept {
    switch (denom_pow_) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {-1.0, 0.0};
    case 2:
        return {0.0, static_cast<double>(sign_)};
    default:
        return std::polar(1.0, radians());
    }
}

std::string_view to_string(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Swap: return "swap";
    case GateKind::CPhase: return "cphase";
    case GateKind::Toffoli: return "toffoli";
    }
    return "?";
}

Gate::Gate(GateKind kind, std::array<Qubit, 3> qubits, std::uint8_t arity, DyadicAngle angle)
    : kind_(kind), qubits_(qubits), arity_(arity), angle_(angle) {
    for (std::uint8_t i = 0; i < arity_; ++i) {
        for (std::uint8_t j = i + 1; j < arity_; ++j) {
            if (qubits_[i] == qubits_[j]) {
                throw StructuralError("gate " + std::string(qmul::to_string(kind_)) + " repeats qubit " +
                                      std::to_string(qubits_[i]));
            }
        }
    }
}

Gate Gate::h(Qubit target) { return {GateKind::H, {target, 0, 0}, 1}; }
Gate Gate::x(Qubit target) { return {GateKind::X, {target, 0, 0}, 1}; }
Gate Gate::swap(Qubit a, Qubit b) { return {GateKind::Swap, {a, b, 0}, 2}; }
Gate Gate::cphase(Qubit control, Qubit target, DyadicAngle angle) {
    return {GateKind::CPhase, {control, target, 0}, 2, angle};
}
Gate Gate::toffoli(Qubit control1, Qubit control2, Qubit target) {
    return {GateKind::Toffoli, {control1, control2, target}, 3};
}

std::span<const Qubit> Gate::controls() const noexcept {
    switch (kind_) {
    case GateKind::CPhase: return {qubits_.data(), 1};
    case GateKind::Toffoli: return {qubits_.data(), 2};
    default: return {};
    }
}

std::span<const Qubit> Gate::targets() const noexcept {
    switch (kind_) {
    case GateKind::CPhase: return {qubits_.data() + 1, 1};
    case GateKind::Toffoli: return {qubits_.data() + 2, 1};
    default: return qubits();
    }
}

Qubit Gate::max_qubit() const noexcept {
    auto qs = qubits();
    return *std::max_element(qs.begin(), qs.end());
}

std::string Gate::to_string() const {
    std::ostringstream os;
    os << qmul::to_string(kind_);
    if (kind_ == GateKind::CPhase) {
        os << '(' << (angle_.sign() < 0 ? "-" : "") << "2pi/2^" << angle_.denom_pow() << ')';
    }
    for (std::uint8_t i = 0; i < arity_; ++i) {
        os << (i == 0 ? " q" : ", q") << qubits_[i];
    }
    return os.str();
}

bool operator==(const Gate& a, const Gate& b) noexcept {
    if (a.kind_ != b.kind_ || a.arity_ != b.arity_) {
        return false;
    }
    if (!std::equal(a.qubits().begin(), a.qubits().end(), b.qubits().begin())) {
        return false;
    }
    return a.kind_ != GateKind::CPhase || a.angle_ == b.angle_;
}

std::string_view to_string(BlockKind kind) noexcept {
    switch (kind) {
    case BlockKind::Prepare: return "prepare";
    case BlockKind::ToffoliStage: return "toffoli-stage";
    case BlockKind::Qft: return "qft";
    case BlockKind::Adder: return "adder";
    case BlockKind::Iqft: return "iqft";
    }
    return "?";
}

BlockKind block_kind_from_string(std::string_view name) {
    for (auto kind : {BlockKind::Prepare, BlockKind::ToffoliStage, BlockKind::Qft, BlockKind::Adder, BlockKind::Iqft}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw StructuralError("unknown block kind '" + std::string(name) + "'");
}

CircuitFragment CircuitFragment::block(BlockKind kind, std::string label, std::vector<Gate> gates) {
    CircuitFragment fragment;
    const auto count = gates.size();
    fragment.gates = std::move(gates);
    fragment.annotations.push_back({kind, std::move(label), 0, count});
    return fragment;
}

void CircuitFragment::append(const CircuitFragment& other) {
    const auto offset = gates.size();
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    for (auto annotation : other.annotations) {
        annotation.begin += offset;
        annotation.end += offset;
        annotations.push_back(std::move(annotation));
    }
}

Circuit::Circuit(std::size_t qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count_ == 0) {
        throw DomainError("circuit needs at least one qubit");
    }
}

Circuit::Circuit(std::size_t qubit_count, std::vector<Gate> gates, std::vector<Annotation> annotations)
    : Circuit(qubit_count) {
    for (const auto& gate : gates) {
        check_gate(gate);
    }
    gates_ = std::move(gates);
    for (const auto& annotation : annotations) {
        check_annotation(annotation);
    }
    annotations_ = std::move(annotations);
}

void Circuit::check_gate(const Gate& gate) const {
    if (gate.max_qubit() >= qubit_count_) {
        throw StructuralError("gate '" + gate.to_string() + "' addresses a qubit outside [0, " +
                              std::to_string(qubit_count_) + ")");
    }
}

void Circuit::check_annotation(const Annotation& annotation) const {
    if (annotation.begin > annotation.end || annotation.end > gates_.size()) {
        throw StructuralError("annotation '" + annotation.label + "' spans gates outside the circuit");
    }
}

void Circuit::add(const Gate& gate) {
    check_gate(gate);
    gates_.push_back(gate);
}

void Circuit::append(const CircuitFragment& fragment) {
    for (const auto& gate : fragment.gates) {
        check_gate(gate);
    }
    const auto offset = gates_.size();
    gates_.insert(gates_.end(), fragment.gates.begin(), fragment.gates.end());
    for (auto annotation : fragment.annotations) {
        annotation.begin += offset;
        annotation.end += offset;
        annotations_.push_back(std::move(annotation));
    }
}

} // namespace qmul
