// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qmul/adder.hpp"
#include "qmul/circuit.hpp"
#include "qmul/layout.hpp"
#include "qmul/qft.hpp"
#include "qmul/statevector.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace qmul {

/// Largest bit-width whose product still fits in 64 bits.
inline constexpr std::size_t kMaxMultiplierBits = 31;

struct MultiplierCircuit {
    std::size_t n = 0;
    RegisterLayout layout;
    Circuit circuit;
    AdderPlan adder;
    /// aux_registers[0]: s_0 .. s_{2n-1}, least significant first.
    std::vector<Qubit> result_qubits;
};

/**
 * @brief n^2 Toffolis writing the schoolbook partial products.
 *
 * Register aux[i] receives y_i AND x shifted left by i: Toffoli(y[i], x[j],
 * aux[i][i + j]). Loops run y bit-major from the least-significant bit, so
 * the first gate pairs the lowest bits of y and x and targets the lowest
 * qubit of aux[0].
 */
[[nodiscard]] CircuitFragment partial_product_stage(const RegisterLayout& layout);

/// Partial products followed by a single-QFT adder into aux[0]. Throws DomainError for n == 0 or n > 31.
[[nodiscard]] MultiplierCircuit build_multiplier(std::size_t n, QftOrdering ordering = QftOrdering::SwapFree);

enum class SimMode : std::uint8_t { Dense, Hybrid };

[[nodiscard]] std::string_view to_string(SimMode mode) noexcept;
/// "dense" or "hybrid"; throws DomainError otherwise.
[[nodiscard]] SimMode sim_mode_from_string(std::string_view name);

struct MultiplyResult {
    std::uint64_t product = 0;
    double probability = 0.0;
};

/**
 * Runs the multiplier on basis inputs |x>|y>.
 *
 * Dense mode evolves the full 2^(2n^2+n+1) state vector and throws
 * CapacityError above dense_limit. Hybrid mode runs the same gate list on a
 * ProductState.
 */
[[nodiscard]] MultiplyResult simulate_multiply(const MultiplierCircuit& multiplier, std::uint64_t x, std::uint64_t y,
                                               SimMode mode, std::size_t dense_limit = kDefaultDenseLimit);

[[nodiscard]] MultiplyResult simulate_multiply(std::uint64_t x, std::uint64_t y, std::size_t n, SimMode mode,
                                               std::size_t dense_limit = kDefaultDenseLimit,
                                               QftOrdering ordering = QftOrdering::SwapFree);

} // namespace qmul
