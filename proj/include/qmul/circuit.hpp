// SPDX-License-Identifier: Apache-2.0

/**
 * @file circuit.hpp
 * @brief Gate set and circuit container.
 *
 * Qubits are zero-based global indices. Inside a register, index 0 of the
 * register's qubit list is its least-significant bit.
 */

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmul {

using Qubit = std::uint32_t;

/**
 * @brief Phase angle of the exact form sign * 2*pi / 2^k.
 *
 * The angle is kept symbolic so that inverse transforms negate it exactly
 * and no rounding accumulates during synthesis. It is only turned into a
 * floating-point phase when a simulator applies it.
 */
class DyadicAngle {
public:
    constexpr DyadicAngle() = default;
    constexpr DyadicAngle(int sign, unsigned denom_pow) : sign_(sign < 0 ? -1 : 1), denom_pow_(denom_pow) {}

    [[nodiscard]] constexpr int sign() const noexcept { return sign_; }
    [[nodiscard]] constexpr unsigned denom_pow() const noexcept { return denom_pow_; }
    [[nodiscard]] constexpr DyadicAngle negated() const noexcept { return {-sign_, denom_pow_}; }

    /// Angle in radians.
    [[nodiscard]] double radians() const noexcept;

    /// exp(i * angle). Quarter turns and coarser are returned exactly.
    [[nodiscard]] std::complex<double> phase() const noexcept;

    friend constexpr bool operator==(const DyadicAngle&, const DyadicAngle&) = default;

private:
    int sign_ = 1;
    unsigned denom_pow_ = 0;
};

enum class GateKind : std::uint8_t { H, X, Swap, CPhase, Toffoli };

[[nodiscard]] std::string_view to_string(GateKind kind) noexcept;

/**
 * @brief One gate with its qubit operands.
 *
 * Operand order: H/X {target}; Swap {a, b}; CPhase {control, target};
 * Toffoli {control1, control2, target}. Construct through the factories,
 * which reject repeated operands.
 */
class Gate {
public:
    static Gate h(Qubit target);
    static Gate x(Qubit target);
    static Gate swap(Qubit a, Qubit b);
    static Gate cphase(Qubit control, Qubit target, DyadicAngle angle);
    static Gate toffoli(Qubit control1, Qubit control2, Qubit target);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::span<const Qubit> qubits() const noexcept { return {qubits_.data(), arity_}; }
    [[nodiscard]] std::span<const Qubit> controls() const noexcept;
    [[nodiscard]] std::span<const Qubit> targets() const noexcept;
    /// Only meaningful for CPhase.
    [[nodiscard]] DyadicAngle angle() const noexcept { return angle_; }
    [[nodiscard]] Qubit max_qubit() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Gate& a, const Gate& b) noexcept;

private:
    Gate(GateKind kind, std::array<Qubit, 3> qubits, std::uint8_t arity, DyadicAngle angle = {});

    GateKind kind_;
    std::array<Qubit, 3> qubits_{};
    std::uint8_t arity_;
    DyadicAngle angle_{};
};

/// Block markers used by metrics and emitters. They never affect simulation.
enum class BlockKind : std::uint8_t { Prepare, ToffoliStage, Qft, Adder, Iqft };

[[nodiscard]] std::string_view to_string(BlockKind kind) noexcept;
[[nodiscard]] BlockKind block_kind_from_string(std::string_view name);

/// Marks gates [begin, end) as one logical block.
struct Annotation {
    BlockKind kind;
    std::string label;
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// A gate sequence over global qubit indices, not yet bound to a register size.
struct CircuitFragment {
    std::vector<Gate> gates;
    std::vector<Annotation> annotations;

    /// Wraps the whole fragment in one annotation.
    static CircuitFragment block(BlockKind kind, std::string label, std::vector<Gate> gates);

    void append(const CircuitFragment& other);
};

/**
 * @brief Ordered gate list over a fixed number of qubits.
 *
 * Every gate operand is checked against the qubit count on insertion, so a
 * Circuit that exists is well formed.
 */
class Circuit {
public:
    explicit Circuit(std::size_t qubit_count);
    Circuit(std::size_t qubit_count, std::vector<Gate> gates, std::vector<Annotation> annotations = {});

    void add(const Gate& gate);
    void append(const CircuitFragment& fragment);

    [[nodiscard]] std::size_t qubit_count() const noexcept { return qubit_count_; }
    [[nodiscard]] const std::vector<Gate>& gates() const noexcept { return gates_; }
    [[nodiscard]] const std::vector<Annotation>& annotations() const noexcept { return annotations_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    [[nodiscard]] auto begin() const noexcept { return gates_.begin(); }
    [[nodiscard]] auto end() const noexcept { return gates_.end(); }

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    void check_gate(const Gate& gate) const;
    void check_annotation(const Annotation& annotation) const;

    std::size_t qubit_count_;
    std::vector<Gate> gates_;
    std::vector<Annotation> annotations_;
};

} // namespace qmul
