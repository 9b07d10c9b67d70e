// SPDX-License-Identifier: Apache-2.0

#include "qmul/adder.hpp"
#include "qmul/errors.hpp"
#include "qmul/metrics.hpp"
#include "qmul/multiplier.hpp"
#include "qmul/qft.hpp"
#include "qmul/statevector.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace qmul {
namespace {

std::vector<Qubit> range_qubits(std::size_t first, std::size_t count) {
    std::vector<Qubit> q(count);
    std::iota(q.begin(), q.end(), static_cast<Qubit>(first));
    return q;
}

std::uint64_t register_value(const StateVector& state, const std::vector<Qubit>& reg, double* probability = nullptr) {
    const auto r = readout(state, reg);
    if (probability != nullptr) {
        *probability = r.probability;
    }
    return r.value;
}

constexpr QftOrdering kOrderings[] = {QftOrdering::SwapFree, QftOrdering::ExplicitSwaps};

// =============================================================================
// QFT / IQFT synthesis
// =============================================================================

TEST(QftCircuitTest, OneQubitIsHadamard) {
    const auto f = qft_circuit(std::vector<Qubit>{4});
    ASSERT_EQ(f.gates.size(), 1u);
    EXPECT_EQ(f.gates[0], Gate::h(4));
    ASSERT_EQ(f.annotations.size(), 1u);
    EXPECT_EQ(f.annotations[0].kind, BlockKind::Qft);
}

TEST(QftCircuitTest, ThreeQubitsSwapFreeHasNoSwaps) {
    const auto f = qft_circuit(range_qubits(0, 3));
    Circuit c(3);
    c.append(f);
    const auto m = compute_metrics(c);
    EXPECT_EQ(m.count(GateKind::H), 3u);
    EXPECT_EQ(m.count(GateKind::CPhase), 3u);
    EXPECT_EQ(m.count(GateKind::Swap), 0u);
    EXPECT_EQ(m.total_gates, 6u);
}

TEST(QftCircuitTest, ZeroStateBecomesUniform) {
    for (auto ordering : kOrderings) {
        for (std::size_t m = 1; m <= 6; ++m) {
            Circuit c(m);
            c.append(qft_circuit(range_qubits(0, m), ordering));
            const auto s = run(init_basis(m, 0), c);
            const double expected = std::pow(2.0, -static_cast<double>(m) / 2.0);
            for (std::size_t i = 0; i < s.dimension(); ++i) {
                EXPECT_NEAR(std::abs(s[i] - expected), 0.0, 1e-12);
            }
        }
    }
}

TEST(QftCircuitTest, Errors) {
    EXPECT_THROW((void)qft_circuit(std::vector<Qubit>{}), DomainError);
    EXPECT_THROW((void)iqft_circuit(std::vector<Qubit>{}), DomainError);
    EXPECT_THROW((void)qft_circuit(std::vector<Qubit>{1, 2, 1}), StructuralError);
}

TEST(IqftCircuitTest, IsReversedQftWithNegatedAngles) {
    for (auto ordering : kOrderings) {
        const auto reg = std::vector<Qubit>{3, 0, 5, 2, 7};
        const auto forward = qft_circuit(reg, ordering).gates;
        const auto inverse = iqft_circuit(reg, ordering).gates;
        ASSERT_EQ(inverse.size(), forward.size());
        for (std::size_t i = 0; i < forward.size(); ++i) {
            const auto& f = forward[forward.size() - 1 - i];
            const auto& g = inverse[i];
            ASSERT_EQ(g.kind(), f.kind());
            EXPECT_TRUE(std::equal(g.qubits().begin(), g.qubits().end(), f.qubits().begin()));
            if (f.kind() == GateKind::CPhase) {
                EXPECT_EQ(g.angle(), f.angle().negated());
            }
        }
    }
    EXPECT_EQ(iqft_circuit(std::vector<Qubit>{0}).gates, std::vector<Gate>{Gate::h(0)});
}

TEST(IqftCircuitTest, UndoesQftOnRandomFiveQubitStates) {
    std::mt19937_64 rng(41);
    for (auto ordering : kOrderings) {
        Circuit c(5);
        c.append(qft_circuit(range_qubits(0, 5), ordering));
        c.append(iqft_circuit(range_qubits(0, 5), ordering));
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = testing::random_state(rng, 5);
            EXPECT_LT(testing::max_distance(run(s, c), s), 1e-9);
        }
    }
}

// =============================================================================
// Fourier addition
// =============================================================================

std::uint64_t draper_add(std::uint64_t a, std::uint64_t b, std::size_t m, std::size_t w, QftOrdering ordering) {
    const auto acc = range_qubits(0, m);
    const auto addend = range_qubits(m, w);
    Circuit c(m + w);
    c.append(qft_circuit(acc, ordering));
    c.append(fourier_add_block(addend, acc, ordering));
    c.append(iqft_circuit(acc, ordering));
    double p = 0;
    const auto value = register_value(run(init_basis(m + w, a | (b << m)), c), acc, &p);
    EXPECT_GE(p, 1.0 - 1e-9);
    return value;
}

TEST(FourierAddTest, Examples) {
    for (auto ordering : kOrderings) {
        EXPECT_EQ(draper_add(0, 0, 3, 3, ordering), 0u);
        EXPECT_EQ(draper_add(3, 2, 3, 3, ordering), 5u);
        EXPECT_EQ(draper_add(7, 1, 3, 3, ordering), 0u);
    }
}

TEST(FourierAddTest, NarrowAddendIntoWideAccumulator) {
    for (auto ordering : kOrderings) {
        EXPECT_EQ(draper_add(9, 3, 5, 2, ordering), 12u);
        EXPECT_EQ(draper_add(30, 3, 5, 2, ordering), 1u);
    }
}

TEST(FourierAddTest, AnglesFollowSignificance) {
    // Addend bit j reaches accumulator Fourier qubit p with k = p + 1 - j.
    const auto f = fourier_add_block(std::vector<Qubit>{10, 11}, range_qubits(0, 3));
    std::vector<Gate> expected{
        Gate::cphase(10, 2, DyadicAngle(1, 3)), Gate::cphase(11, 2, DyadicAngle(1, 2)),
        Gate::cphase(10, 1, DyadicAngle(1, 2)), Gate::cphase(11, 1, DyadicAngle(1, 1)),
        Gate::cphase(10, 0, DyadicAngle(1, 1)),
    };
    EXPECT_EQ(f.gates, expected);
}

TEST(FourierAddTest, Errors) {
    EXPECT_THROW((void)fourier_add_block(std::vector<Qubit>{2, 3}, std::vector<Qubit>{0, 1, 2}), StructuralError);
    EXPECT_THROW((void)fourier_add_block(range_qubits(3, 4), range_qubits(0, 3)), StructuralError);
    EXPECT_THROW((void)fourier_add_block(std::vector<Qubit>{5, 5}, range_qubits(0, 3)), StructuralError);
}

TEST(FourierAddTest, ZeroAddendIsNoOpOnAnyState) {
    std::mt19937_64 rng(43);
    for (auto ordering : kOrderings) {
        // Accumulator on qubits 0..3 in a random state, addend qubits 4..6 all zero.
        const auto acc_state = testing::random_state(rng, 4);
        std::vector<Amplitude> amps(std::size_t{1} << 7, 0.0);
        for (std::size_t i = 0; i < acc_state.dimension(); ++i) {
            amps[i] = acc_state[i];
        }
        const StateVector start(7, amps);
        Circuit c(7);
        c.append(fourier_add_block(range_qubits(4, 3), range_qubits(0, 4), ordering));
        EXPECT_EQ(testing::max_distance(run(start, c), start), 0.0);
    }
}

TEST(FourierAddTest, ExhaustiveModularSums) {
    for (auto ordering : kOrderings) {
        for (std::size_t m = 1; m <= 5; ++m) {
            const std::uint64_t size = std::uint64_t{1} << m;
            for (std::uint64_t a = 0; a < size; ++a) {
                for (std::uint64_t b = 0; b < size; ++b) {
                    ASSERT_EQ(draper_add(a, b, m, m, ordering), (a + b) % size) << "m=" << m << " a=" << a << " b=" << b;
                }
            }
        }
    }
}

// =============================================================================
// Parallel adder
// =============================================================================

TEST(ParallelAdderTest, ThreeAddendsIntoFiveQubitAccumulator) {
    AdderPlan plan;
    plan.accumulator = range_qubits(0, 5);
    plan.carry_qubits = {3, 4};
    plan.addends = {range_qubits(5, 3), range_qubits(8, 3), range_qubits(11, 3)};
    EXPECT_EQ(plan.carry_qubits.size(), carry_qubits_for(4)); // three addends plus the initial 0

    Circuit c(14);
    c.append(prepare_value(plan.addends[0], 5));
    c.append(prepare_value(plan.addends[1], 6));
    c.append(prepare_value(plan.addends[2], 7));
    c.append(parallel_adder(plan));
    EXPECT_EQ(register_value(run(init_basis(14, 0), c), plan.accumulator), 18u);

    const auto m = compute_metrics(c);
    EXPECT_EQ(m.qft_blocks, 1u);
    EXPECT_EQ(m.iqft_blocks, 1u);
}

TEST(ParallelAdderTest, NoAddendsLeavesAccumulator) {
    AdderPlan plan;
    plan.accumulator = range_qubits(0, 4);
    Circuit c(4);
    c.append(prepare_value(plan.accumulator, 11));
    c.append(parallel_adder(plan));
    double p = 0;
    EXPECT_EQ(register_value(run(init_basis(4, 0), c), plan.accumulator, &p), 11u);
    EXPECT_GE(p, 1.0 - 1e-9);
}

TEST(ParallelAdderTest, RandomThreeBitTriplesWithTwoCarryQubits) {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::uint64_t> pick(0, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::array<std::uint64_t, 3> values{pick(rng), pick(rng), pick(rng)};
        const auto sum = build_sum_circuit(3, values, 2, trial % 2 ? QftOrdering::SwapFree : QftOrdering::ExplicitSwaps);
        ASSERT_EQ(sum.plan.accumulator.size(), 5u);
        double p = 0;
        const auto got = register_value(run(init_basis(sum.circuit.qubit_count(), 0), sum.circuit), sum.plan.accumulator, &p);
        ASSERT_EQ(got, values[0] + values[1] + values[2]);
        EXPECT_GE(p, 1.0 - 1e-9);
    }
}

TEST(ParallelAdderTest, CarryCountFormula) {
    EXPECT_EQ(carry_qubits_for(1), 0u);
    EXPECT_EQ(carry_qubits_for(2), 1u);
    EXPECT_EQ(carry_qubits_for(3), 2u);
    EXPECT_EQ(carry_qubits_for(4), 2u);
    EXPECT_EQ(carry_qubits_for(5), 3u);
    EXPECT_EQ(carry_qubits_for(8), 3u);
}

TEST(ParallelAdderTest, SumCircuitDefaults) {
    const std::array<std::uint64_t, 2> pair{3, 3};
    const auto s = build_sum_circuit(2, pair, 1);
    EXPECT_EQ(register_value(run(init_basis(s.circuit.qubit_count(), 0), s.circuit), s.plan.accumulator), 6u);

    const std::array<std::uint64_t, 1> single{0};
    const auto z = build_sum_circuit(3, single);
    EXPECT_TRUE(z.plan.carry_qubits.empty());
    EXPECT_EQ(register_value(run(init_basis(z.circuit.qubit_count(), 0), z.circuit), z.plan.accumulator), 0u);

    const std::array<std::uint64_t, 2> too_big{8, 1};
    EXPECT_THROW((void)build_sum_circuit(3, too_big), DomainError);
    EXPECT_THROW((void)build_sum_circuit(3, std::span<const std::uint64_t>{}), DomainError);
}

TEST(ParallelAdderTest, PlanValidation) {
    AdderPlan overlap;
    overlap.accumulator = range_qubits(0, 3);
    overlap.addends = {range_qubits(2, 2)};
    EXPECT_THROW((void)parallel_adder(overlap), StructuralError);

    AdderPlan wide;
    wide.accumulator = range_qubits(0, 2);
    wide.addends = {range_qubits(2, 3)};
    EXPECT_THROW((void)parallel_adder(wide), StructuralError);

    AdderPlan stray_carry;
    stray_carry.accumulator = range_qubits(0, 2);
    stray_carry.carry_qubits = {5};
    EXPECT_THROW((void)parallel_adder(stray_carry), StructuralError);

    EXPECT_THROW((void)parallel_adder(AdderPlan{}), StructuralError);
}

// =============================================================================
// Partial products and the multiplier
// =============================================================================

std::vector<std::uint64_t> partial_products_after_stage(std::size_t n, std::uint64_t x, std::uint64_t y) {
    const auto layout = layout_for(n);
    Circuit c(layout.total_qubits);
    c.append(prepare_value(layout.x_qubits, x));
    c.append(prepare_value(layout.y_qubits, y));
    c.append(partial_product_stage(layout));
    const auto state = run(init_basis(layout.total_qubits, 0), c);
    std::vector<std::uint64_t> values;
    for (const auto& reg : layout.aux_registers) {
        values.push_back(register_value(state, reg));
    }
    return values;
}

TEST(PartialProductTest, WorkedExample) {
    EXPECT_EQ(partial_products_after_stage(3, 7, 5), (std::vector<std::uint64_t>{7, 0, 28}));
}

TEST(PartialProductTest, ZeroOperandLeavesRegistersClear) {
    for (std::uint64_t k = 0; k < 8; ++k) {
        EXPECT_EQ(partial_products_after_stage(3, 0, k), (std::vector<std::uint64_t>{0, 0, 0}));
        EXPECT_EQ(partial_products_after_stage(3, k, 0), (std::vector<std::uint64_t>{0, 0, 0}));
    }
}

TEST(PartialProductTest, ExhaustiveTwoBitShifts) {
    for (std::uint64_t x = 0; x < 4; ++x) {
        for (std::uint64_t y = 0; y < 4; ++y) {
            const auto got = partial_products_after_stage(2, x, y);
            EXPECT_EQ(got[0], (y & 1U) ? x : 0);
            EXPECT_EQ(got[1], (y & 2U) ? x << 1 : 0);
        }
    }
}

TEST(PartialProductTest, GateCountAndOrder) {
    const auto layout = layout_for(3);
    const auto stage = partial_product_stage(layout);
    ASSERT_EQ(stage.gates.size(), 9u);
    // First gate: lowest bits of y and x into the lowest qubit of aux[0].
    EXPECT_EQ(stage.gates.front(), Gate::toffoli(layout.y_qubits[0], layout.x_qubits[0], layout.aux_registers[0][0]));
    // Last gate: highest bits into aux[2] at offset 2 + 2.
    EXPECT_EQ(stage.gates.back(), Gate::toffoli(layout.y_qubits[2], layout.x_qubits[2], layout.aux_registers[2][4]));
}

TEST(PartialProductTest, RejectsBrokenLayout) {
    auto layout = layout_for(2);
    layout.aux_registers.pop_back();
    EXPECT_THROW((void)partial_product_stage(layout), StructuralError);
}

TEST(MultiplierTest, ThreeBitStructure) {
    const auto mult = build_multiplier(3);
    const auto m = compute_metrics(mult.circuit);
    EXPECT_EQ(mult.circuit.qubit_count(), 22u);
    EXPECT_EQ(m.count(GateKind::Toffoli), 9u);
    EXPECT_EQ(m.qft_blocks, 1u);
    EXPECT_EQ(m.iqft_blocks, 1u);
    EXPECT_EQ(m.qft_widths, std::vector<std::size_t>{6});
    std::size_t adders = 0;
    for (const auto& a : mult.circuit.annotations()) {
        adders += a.kind == BlockKind::Adder ? 1 : 0;
    }
    EXPECT_EQ(adders, 2u);
    EXPECT_EQ(mult.result_qubits, mult.layout.aux_registers[0]);
}

TEST(MultiplierTest, OneBitStructure) {
    const auto mult = build_multiplier(1);
    const auto m = compute_metrics(mult.circuit);
    EXPECT_EQ(mult.circuit.qubit_count(), 4u);
    EXPECT_EQ(m.count(GateKind::Toffoli), 1u);
    EXPECT_EQ(m.qft_widths, std::vector<std::size_t>{2});
}

TEST(MultiplierTest, StructuralInvariantsUpToEightBits) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (auto ordering : kOrderings) {
            const auto mult = build_multiplier(n, ordering);
            const auto m = compute_metrics(mult.circuit);
            EXPECT_EQ(m.count(GateKind::Toffoli), n * n);
            EXPECT_EQ(m.qft_blocks, 1u);
            EXPECT_EQ(m.iqft_blocks, 1u);
            EXPECT_EQ(m.qubit_count, 2 * n * n + n + 1);
            EXPECT_EQ(m.qft_widths, std::vector<std::size_t>{2 * n});
            EXPECT_EQ(mult.adder.addends.size(), n - 1);
        }
    }
}

TEST(MultiplierTest, BuildErrors) {
    EXPECT_THROW((void)build_multiplier(0), DomainError);
    EXPECT_THROW((void)build_multiplier(kMaxMultiplierBits + 1), DomainError);
}

TEST(SimulateMultiplyTest, WorkedExampleBothModes) {
    for (auto mode : {SimMode::Dense, SimMode::Hybrid}) {
        const auto r = simulate_multiply(7, 5, 3, mode);
        EXPECT_EQ(r.product, 35u);
        EXPECT_GE(r.probability, 1.0 - 1e-9);
    }
}

TEST(SimulateMultiplyTest, AnnihilatorAndIdentityHybrid) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto mult = build_multiplier(n);
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            EXPECT_EQ(simulate_multiply(mult, 0, k, SimMode::Hybrid).product, 0u);
            EXPECT_EQ(simulate_multiply(mult, 1, k, SimMode::Hybrid).product, k);
        }
    }
}

TEST(SimulateMultiplyTest, ExhaustiveSmallDenseAgreesWithHybrid) {
    for (std::size_t n = 1; n <= 2; ++n) {
        for (auto ordering : kOrderings) {
            const auto mult = build_multiplier(n, ordering);
            for (std::uint64_t x = 0; x < (1u << n); ++x) {
                for (std::uint64_t y = 0; y < (1u << n); ++y) {
                    const auto dense = simulate_multiply(mult, x, y, SimMode::Dense);
                    const auto hybrid = simulate_multiply(mult, x, y, SimMode::Hybrid);
                    EXPECT_EQ(dense.product, x * y);
                    EXPECT_EQ(hybrid.product, x * y);
                    EXPECT_GE(dense.probability, 1.0 - 1e-9);
                    EXPECT_NEAR(dense.probability, hybrid.probability, 1e-9);
                }
            }
        }
    }
}

TEST(SimulateMultiplyTest, ExhaustiveHybridUpToSixBits) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto mult = build_multiplier(n, n % 2 ? QftOrdering::SwapFree : QftOrdering::ExplicitSwaps);
        for (std::uint64_t x = 0; x < (1u << n); ++x) {
            for (std::uint64_t y = 0; y < (1u << n); ++y) {
                const auto r = simulate_multiply(mult, x, y, SimMode::Hybrid);
                ASSERT_EQ(r.product, x * y) << "n=" << n;
                ASSERT_GE(r.probability, 1.0 - 1e-9);
            }
        }
    }
}

TEST(SimulateMultiplyTest, Errors) {
    EXPECT_THROW((void)simulate_multiply(8, 1, 3, SimMode::Hybrid), DomainError);
    EXPECT_THROW((void)simulate_multiply(1, 8, 3, SimMode::Dense), DomainError);
    EXPECT_THROW((void)simulate_multiply(9, 11, 4, SimMode::Dense), CapacityError);
    EXPECT_THROW((void)simulate_multiply(1, 1, 3, SimMode::Dense, 21), CapacityError);
    EXPECT_THROW((void)simulate_multiply(0, 0, 0, SimMode::Hybrid), DomainError);
    EXPECT_THROW((void)sim_mode_from_string("sparse"), DomainError);
}

TEST(SimulateMultiplyTest, DenseLimitIsConfigurable) {
    EXPECT_EQ(simulate_multiply(3, 3, 2, SimMode::Dense, 11).product, 9u);
    EXPECT_THROW((void)simulate_multiply(3, 3, 2, SimMode::Dense, 10), CapacityError);
}

} // namespace
} // namespace qmul
