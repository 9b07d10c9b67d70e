// SPDX-License-Identifier: Apache-2.0

#include "qmul/statevector.hpp"

#include "qmul/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>

namespace qmul {

namespace {

constexpr std::uint64_t bit(Qubit q) { return std::uint64_t{1} << q; }

// Visits every index whose bit at `q` is clear.
template <class F>
void for_each_clear(std::uint64_t dim, Qubit q, F&& f) {
    const auto b = bit(q);
    for (std::uint64_t block = 0; block < dim; block += 2 * b) {
        for (auto i = block; i < block + b; ++i) {
            f(i);
        }
    }
}

// Visits every index whose bits at `lo` < `hi` are clear.
template <class F>
void for_each_clear(std::uint64_t dim, Qubit lo, Qubit hi, F&& f) {
    const auto bl = bit(lo);
    const auto bh = bit(hi);
    for (std::uint64_t outer = 0; outer < dim; outer += 2 * bh) {
        for (auto block = outer; block < outer + bh; block += 2 * bl) {
            for (auto i = block; i < block + bl; ++i) {
                f(i);
            }
        }
    }
}

// Visits every index whose bits at `lo` < `mid` < `hi` are clear.
template <class F>
void for_each_clear(std::uint64_t dim, Qubit lo, Qubit mid, Qubit hi, F&& f) {
    const auto bl = bit(lo);
    const auto bm = bit(mid);
    const auto bh = bit(hi);
    for (std::uint64_t outer = 0; outer < dim; outer += 2 * bh) {
        for (auto middle = outer; middle < outer + bh; middle += 2 * bm) {
            for (auto block = middle; block < middle + bm; block += 2 * bl) {
                for (auto i = block; i < block + bl; ++i) {
                    f(i);
                }
            }
        }
    }
}

// Plain complex product; std::complex operator* adds NaN/Inf recovery we never need.
inline Amplitude mul(Amplitude a, Amplitude b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

} // namespace

std::size_t dense_limit_from_env() {
    const char* raw = std::getenv("QMUL_DENSE_LIMIT");
    if (raw == nullptr) {
        return kDefaultDenseLimit;
    }
    std::size_t value = 0;
    const auto* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value == 0 || value > 62) {
        return kDefaultDenseLimit;
    }
    return value;
}

StateVector::StateVector(std::size_t qubit_count, std::vector<Amplitude> amplitudes, std::size_t dense_limit)
    : qubit_count_(qubit_count) {
    if (qubit_count_ > dense_limit) {
        throw CapacityError(std::to_string(qubit_count_) + " qubits exceed the dense simulation limit of " +
                            std::to_string(dense_limit));
    }
    if (amplitudes.size() != (std::size_t{1} << qubit_count_)) {
        throw StructuralError("state vector needs exactly 2^m amplitudes");
    }
    amplitudes_ = std::move(amplitudes);
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::check_gate(const Gate& gate) const {
    if (gate.max_qubit() >= qubit_count_) {
        throw StructuralError("gate '" + gate.to_string() + "' addresses a qubit outside a " +
                              std::to_string(qubit_count_) + "-qubit state");
    }
}

void StateVector::apply(const Gate& gate) {
    check_gate(gate);
    const auto qs = gate.qubits();
    switch (gate.kind()) {
    case GateKind::H: apply_h(qs[0]); break;
    case GateKind::X: apply_x(qs[0]); break;
    case GateKind::Swap: apply_swap(qs[0], qs[1]); break;
    case GateKind::CPhase: apply_cphase(qs[0], qs[1], gate.angle().phase()); break;
    case GateKind::Toffoli: apply_toffoli(qs[0], qs[1], qs[2]); break;
    }
}

void StateVector::run(const Circuit& circuit) {
    if (circuit.qubit_count() != qubit_count_) {
        throw StructuralError("circuit has " + std::to_string(circuit.qubit_count()) + " qubits, state has " +
                              std::to_string(qubit_count_));
    }
    const auto& gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size();) {
        auto j = i;
        while (j < gates.size() && gates[j].kind() == GateKind::CPhase) {
            ++j;
        }
        if (j - i >= kMinFusedRun && apply_diagonal_run(std::span(gates).subspan(i, j - i))) {
            i = j;
            continue;
        }
        apply(gates[i]);
        ++i;
    }
}

bool StateVector::apply_diagonal_run(std::span<const Gate> run) {
    // Qubits touched by the run, assigned consecutive pattern bits.
    std::vector<int> slot(qubit_count_, -1);
    std::vector<Qubit> touched;
    for (const auto& gate : run) {
        for (auto q : gate.qubits()) {
            if (q >= qubit_count_) {
                check_gate(gate);
            }
            if (slot[q] < 0) {
                slot[q] = static_cast<int>(touched.size());
                touched.push_back(q);
            }
        }
    }
    if (touched.size() > kMaxFusedQubits) {
        return false;
    }

    std::vector<Amplitude> table(std::size_t{1} << touched.size(), Amplitude{1.0});
    for (const auto& gate : run) {
        const auto mask = (std::uint64_t{1} << slot[gate.qubits()[0]]) | (std::uint64_t{1} << slot[gate.qubits()[1]]);
        const auto phase = gate.angle().phase();
        for (std::uint64_t pattern = 0; pattern < table.size(); ++pattern) {
            if ((pattern & mask) == mask) {
                table[pattern] = mul(table[pattern], phase);
            }
        }
    }

    // pattern(i) = low[i & low_mask] | high[i >> low_bits]
    const std::size_t low_bits = std::min<std::size_t>(qubit_count_, 16);
    const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
    std::vector<std::uint32_t> low(std::size_t{1} << low_bits, 0);
    std::vector<std::uint32_t> high(std::size_t{1} << (qubit_count_ - low_bits), 0);
    for (std::size_t k = 0; k < touched.size(); ++k) {
        const auto q = touched[k];
        if (q < low_bits) {
            for (std::uint64_t v = 0; v < low.size(); ++v) {
                low[v] |= static_cast<std::uint32_t>(((v >> q) & 1U) << k);
            }
        } else {
            for (std::uint64_t v = 0; v < high.size(); ++v) {
                high[v] |= static_cast<std::uint32_t>(((v >> (q - low_bits)) & 1U) << k);
            }
        }
    }
    for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
        const auto pattern = low[i & low_mask] | high[i >> low_bits];
        amplitudes_[i] = mul(amplitudes_[i], table[pattern]);
    }
    return true;
}

void StateVector::apply_h(Qubit target) {
    const double s = std::numbers::sqrt2 / 2.0;
    const auto b = bit(target);
    for_each_clear(amplitudes_.size(), target, [&](std::uint64_t i) {
        const auto a0 = amplitudes_[i];
        const auto a1 = amplitudes_[i | b];
        amplitudes_[i] = s * (a0 + a1);
        amplitudes_[i | b] = s * (a0 - a1);
    });
}

void StateVector::apply_x(Qubit target) {
    const auto b = bit(target);
    for_each_clear(amplitudes_.size(), target, [&](std::uint64_t i) { std::swap(amplitudes_[i], amplitudes_[i | b]); });
}

void StateVector::apply_swap(Qubit a, Qubit b) {
    const auto ba = bit(a);
    const auto bb = bit(b);
    for_each_clear(amplitudes_.size(), std::min(a, b), std::max(a, b),
                   [&](std::uint64_t i) { std::swap(amplitudes_[i | ba], amplitudes_[i | bb]); });
}

void StateVector::apply_cphase(Qubit control, Qubit target, Amplitude phase) {
    const auto mask = bit(control) | bit(target);
    for_each_clear(amplitudes_.size(), std::min(control, target), std::max(control, target),
                   [&](std::uint64_t i) { amplitudes_[i | mask] = mul(amplitudes_[i | mask], phase); });
}

void StateVector::apply_toffoli(Qubit c1, Qubit c2, Qubit target) {
    std::array<Qubit, 3> pos{c1, c2, target};
    std::sort(pos.begin(), pos.end());
    const auto controls = bit(c1) | bit(c2);
    const auto t = bit(target);
    for_each_clear(amplitudes_.size(), pos[0], pos[1], pos[2], [&](std::uint64_t i) {
        std::swap(amplitudes_[i | controls], amplitudes_[i | controls | t]);
    });
}

StateVector init_basis(std::size_t qubit_count, std::uint64_t value, std::size_t dense_limit) {
    if (qubit_count > dense_limit) {
        throw CapacityError(std::to_string(qubit_count) + " qubits exceed the dense simulation limit of " +
                            std::to_string(dense_limit));
    }
    if (qubit_count < 64 && value >= (std::uint64_t{1} << qubit_count)) {
        throw DomainError("basis value " + std::to_string(value) + " does not fit in " + std::to_string(qubit_count) +
                          " qubits");
    }
    std::vector<Amplitude> amplitudes(std::size_t{1} << qubit_count);
    amplitudes[value] = 1.0;
    return StateVector(qubit_count, std::move(amplitudes), dense_limit);
}

StateVector apply(StateVector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

StateVector run(StateVector state, const Circuit& circuit) {
    state.run(circuit);
    return state;
}

ReadoutResult readout(const StateVector& state, std::span<const Qubit> qubits) {
    std::vector<bool> used(state.qubit_count(), false);
    for (auto q : qubits) {
        if (q >= state.qubit_count()) {
            throw StructuralError("readout qubit " + std::to_string(q) + " is outside the state");
        }
        if (used[q]) {
            throw StructuralError("readout lists qubit " + std::to_string(q) + " twice");
        }
        used[q] = true;
    }

    std::vector<double> marginal(std::size_t{1} << qubits.size(), 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        const double p = std::norm(amps[b]);
        if (p == 0.0) {
            continue;
        }
        std::uint64_t value = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            value |= ((b >> qubits[k]) & 1U) << k;
        }
        marginal[value] += p;
    }
    // max_element returns the first maximum, which is the lowest value.
    const auto best = std::max_element(marginal.begin(), marginal.end());
    return {static_cast<std::uint64_t>(best - marginal.begin()), *best};
}

} // namespace qmul
