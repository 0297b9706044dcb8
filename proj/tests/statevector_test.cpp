/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/statevector.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <gtest/gtest.h>

#include "qcsim/io.hpp"
#include "support/oracles.hpp"

using namespace qcsim;

namespace {

constexpr double kSqrtHalf = 0.70710678118654752;

std::vector<Gate> one_of_each_gate() {
    return {
        Gate::hadamard(0),
        Gate::pauli_x(1),
        Gate::pauli_y(0),
        Gate::pauli_z(2),
        Gate::phase(1, 0.37),
        Gate::rot_x(2, 1.1),
        Gate::rot_y(0, -0.6),
        Gate::rot_z(1, 2.3),
        Gate::cnot(0, 2),
        Gate::controlled_phase(2, 1, 0.81),
        Gate::diagonal_phase({0, 2}, [](std::uint64_t sub) { return 0.25 * double(sub); }),
    };
}

} // namespace

TEST(StateVector, BasisStateConstruction) {
    StateVector s1(1, 0);
    EXPECT_EQ(s1.amplitude(0), cplx(1.0, 0.0));
    EXPECT_EQ(s1.amplitude(1), cplx(0.0, 0.0));

    StateVector s2(2, 3); // |11>
    for (std::uint64_t i = 0; i < 4; ++i)
        EXPECT_EQ(s2.amplitude(i), (i == 3 ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));

    StateVector s3(3, 5);
    EXPECT_EQ(s3.amplitude(5), cplx(1.0, 0.0));
    EXPECT_NEAR(s3.norm_sq(), 1.0, 1e-15);

    EXPECT_THROW(StateVector(2, 4), std::invalid_argument);
    EXPECT_THROW(StateVector(0, 0), std::invalid_argument);
}

TEST(StateVector, HadamardOnZero) {
    StateVector s(1, 0);
    s.apply(Gate::hadamard(0));
    EXPECT_NEAR(std::abs(s.amplitude(0) - kSqrtHalf), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(1) - kSqrtHalf), 0.0, 1e-15);
}

TEST(StateVector, CnotMakesBellState) {
    // (|00> + |10>)/sqrt(2) with qubit 0 in superposition, then CNOT 0 -> 1.
    StateVector s(2, 0);
    s.apply(Gate::hadamard(0));
    s.apply(Gate::cnot(0, 1));
    EXPECT_NEAR(std::abs(s.amplitude(0) - kSqrtHalf), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(3) - kSqrtHalf), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude(2)), 0.0, 1e-15);
}

TEST(StateVector, PauliXIsInvolution) {
    SeededRng rng(7);
    StateVector s = oracles::random_state(3, rng);
    const StateVector before = s;
    s.apply(Gate::pauli_x(1));
    s.apply(Gate::pauli_x(1));
    EXPECT_LT(oracles::state_distance(s, before), 1e-15);
}

TEST(StateVector, GateMatricesAreUnitary) {
    for (const Gate& g : one_of_each_gate()) {
        if (g.kind == GateKind::DiagonalPhase) continue;
        if (g.is_two_qubit()) {
            const auto u = g.unitary4();
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    cplx acc{0, 0};
                    for (int k = 0; k < 4; ++k) acc += u[r * 4 + k] * std::conj(u[c * 4 + k]);
                    EXPECT_NEAR(std::abs(acc - (r == c ? 1.0 : 0.0)), 0.0, kMatrixTol);
                }
        } else {
            const auto u = g.unitary2();
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    cplx acc{0, 0};
                    for (int k = 0; k < 2; ++k) acc += u[r * 2 + k] * std::conj(u[c * 2 + k]);
                    EXPECT_NEAR(std::abs(acc - (r == c ? 1.0 : 0.0)), 0.0, kMatrixTol);
                }
        }
    }
}

TEST(StateVector, EveryGatePreservesNorm) {
    SeededRng rng(11);
    for (const Gate& g : one_of_each_gate()) {
        StateVector s = oracles::random_state(3, rng);
        s.apply(g);
        EXPECT_NEAR(s.norm_sq(), 1.0, kStateTol) << "gate kind " << int(g.kind);
    }
}

TEST(StateVector, UnitarityRoundTrip) {
    SeededRng rng(13);
    for (const Gate& g : one_of_each_gate()) {
        StateVector s = oracles::random_state(3, rng);
        const StateVector before = s;
        s.apply(g);
        s.apply(g.inverse());
        EXPECT_LT(oracles::state_distance(s, before), kStateTol) << "gate kind " << int(g.kind);
    }
}

TEST(StateVector, DisjointGatesCommute) {
    SeededRng rng(17);
    const Gate a = Gate::rot_y(0, 0.9);
    const Gate b = Gate::controlled_phase(2, 3, 1.3);
    StateVector s1 = oracles::random_state(4, rng);
    StateVector s2 = s1;
    s1.apply(a);
    s1.apply(b);
    s2.apply(b);
    s2.apply(a);
    EXPECT_LT(oracles::state_distance(s1, s2), 1e-12);
}

TEST(StateVector, DiagonalPhaseGathersTargetBits) {
    SeededRng rng(37);
    const StateVector before = oracles::random_state(3, rng);
    StateVector s = before;
    // sub-index gathers qubit 0 into bit 0 and qubit 2 into bit 1
    s.apply(Gate::diagonal_phase({0, 2}, [](std::uint64_t sub) {
        return 0.3 * static_cast<double>(sub) + 0.1;
    }));
    for (std::uint64_t x = 0; x < 8; ++x) {
        const std::uint64_t sub = (x & 1u) | (((x >> 2) & 1u) << 1);
        const cplx expected =
            before.amplitude(x) * std::exp(cplx{0.0, 0.3 * static_cast<double>(sub) + 0.1});
        EXPECT_NEAR(std::abs(s.amplitude(x) - expected), 0.0, 1e-15);
    }
}

TEST(StateVector, InvalidQubitIndexThrows) {
    StateVector s(2, 0);
    EXPECT_THROW(s.apply(Gate::hadamard(2)), std::invalid_argument);
    EXPECT_THROW(s.apply(Gate::cnot(0, 5)), std::invalid_argument);
    EXPECT_THROW(Gate::cnot(1, 1), std::invalid_argument);
}

TEST(Qft, SingleQubitEqualsHadamard) {
    SeededRng rng(19);
    StateVector s = oracles::random_state(1, rng);
    StateVector h = s;
    s.apply_qft(0, 1);
    h.apply(Gate::hadamard(0));
    EXPECT_LT(oracles::state_distance(s, h), 1e-14);
}

TEST(Qft, VacuumGoesToUniform) {
    StateVector s(5, 0);
    s.apply_qft(0, 5);
    const double expected = 1.0 / std::sqrt(32.0);
    for (std::uint64_t i = 0; i < 32; ++i)
        EXPECT_NEAR(std::abs(s.amplitude(i) - expected), 0.0, 1e-12);
}

TEST(Qft, MatchesDenseDftUpToSixQubits) {
    for (int n = 1; n <= 6; ++n) {
        SeededRng rng(100 + static_cast<std::uint64_t>(n));
        StateVector s = oracles::random_state(n, rng);
        const Eigen::MatrixXcd f = oracles::dft_matrix(n);
        Eigen::VectorXcd expected(static_cast<Eigen::Index>(s.dim()));
        for (std::uint64_t i = 0; i < s.dim(); ++i)
            expected(static_cast<Eigen::Index>(i)) = s.amplitude(i);
        expected = f * expected;
        s.apply_qft(0, n);
        EXPECT_LT(oracles::max_abs_diff(s, expected), 1e-10) << "n = " << n;
    }
}

TEST(Qft, SubRegisterActsLocally) {
    // QFT on qubits [1, 4) of a product state only transforms that factor.
    SeededRng rng(23);
    StateVector low = oracles::random_state(1, rng);
    StateVector mid = oracles::random_state(3, rng);
    StateVector high = oracles::random_state(1, rng);
    StateVector full = tensor_product(tensor_product(low, mid), high);

    full.apply_qft(1, 3);
    StateVector mid_f = mid;
    mid_f.apply_qft(0, 3);
    const StateVector expected = tensor_product(tensor_product(low, mid_f), high);
    EXPECT_LT(oracles::state_distance(full, expected), 1e-12);
}

TEST(Qft, InverseRoundTrip) {
    SeededRng rng(29);
    StateVector s = oracles::random_state(6, rng);
    const StateVector before = s;
    s.apply_qft(1, 4);
    s.apply_qft(1, 4, /*inverse=*/true);
    EXPECT_LT(oracles::state_distance(s, before), kStateTol);
}

TEST(Qft, EmptyRangeThrows) {
    StateVector s(3, 0);
    EXPECT_THROW(s.apply_qft(0, 0), std::invalid_argument);
    EXPECT_THROW(s.apply_qft(2, 2), std::invalid_argument);
}

TEST(Measure, BasisStateIsCertain) {
    StateVector s(2, 3);
    SeededRng rng(1);
    const std::vector<int> qubits{0, 1};
    const auto rec = s.measure(qubits, rng);
    EXPECT_EQ(rec.outcome, 3u);
    EXPECT_NEAR(rec.probability, 1.0, 1e-12);
    EXPECT_EQ(rec.bit_string(), "11");
}

TEST(Measure, BellStateCollapsesConsistently) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        StateVector s(2, 0);
        s.apply(Gate::hadamard(0));
        s.apply(Gate::cnot(0, 1));
        SeededRng rng(seed);
        const std::vector<int> qubits{0};
        const auto rec = s.measure(qubits, rng);
        EXPECT_NEAR(rec.probability, 0.5, 1e-12);
        const std::uint64_t expected = rec.outcome ? 3 : 0;
        EXPECT_NEAR(std::abs(s.amplitude(expected)), 1.0, 1e-12);
    }
}

TEST(Measure, FrequenciesFollowBornRule) {
    // sqrt(0.25)|0> + sqrt(0.75)|1>, 1e5 seeded samples: freq(1) = 0.75 +- 0.01
    std::vector<cplx> amps{std::sqrt(0.25), std::sqrt(0.75)};
    const StateVector base = StateVector::from_amplitudes(1, std::move(amps));
    SeededRng rng(424242);
    const std::vector<int> qubits{0};
    std::uint64_t ones = 0;
    const int n_samples = 100000;
    for (int i = 0; i < n_samples; ++i) {
        StateVector copy = base;
        ones += copy.measure(qubits, rng).outcome;
    }
    EXPECT_NEAR(static_cast<double>(ones) / n_samples, 0.75, 0.01);
}

TEST(Measure, SeededTrajectoriesAreReproducible) {
    auto run = [](std::uint64_t seed) {
        SeededRng rng(seed);
        StateVector s(4, 0);
        for (int q = 0; q < 4; ++q) s.apply(Gate::hadamard(q));
        std::vector<std::uint64_t> outcomes;
        for (int q = 0; q < 4; ++q) {
            const std::vector<int> qubits{q};
            outcomes.push_back(s.measure(qubits, rng).outcome);
        }
        return outcomes;
    };
    EXPECT_EQ(run(5), run(5));
    EXPECT_EQ(run(5), run(5)); // and stable across repeated evaluation
}

TEST(LoadAmplitudes, DeltaMassGivesBasisState) {
    std::vector<double> mass(8, 0.0);
    mass[5] = 3.25;
    const StateVector s = load_amplitudes(mass);
    EXPECT_NEAR(std::abs(s.amplitude(5)), 1.0, 1e-12);
}

TEST(LoadAmplitudes, UniformMassGivesUniformState) {
    std::vector<double> mass(16, 0.125);
    const StateVector s = load_amplitudes(mass);
    for (std::uint64_t i = 0; i < 16; ++i)
        EXPECT_NEAR(std::abs(s.amplitude(i) - 0.25), 0.0, 1e-12);
}

TEST(LoadAmplitudes, GaussianMatchesDirectNormalization) {
    const int points = 64;
    std::vector<double> mass(points);
    for (int j = 0; j < points; ++j) {
        const double x = (j - 31.5) / 8.0;
        mass[static_cast<std::size_t>(j)] = std::exp(-x * x);
    }
    const StateVector s = load_amplitudes(mass);

    double total = 0.0;
    for (double w : mass) total += w;
    std::vector<cplx> direct(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j)
        direct[static_cast<std::size_t>(j)] = std::sqrt(mass[static_cast<std::size_t>(j)] / total);
    const StateVector reference = StateVector::from_amplitudes(6, std::move(direct));
    EXPECT_GT(s.fidelity(reference), 1.0 - 1e-10);
}

TEST(LoadAmplitudes, PhaseFunctionIsApplied) {
    std::vector<double> mass(4, 1.0);
    const StateVector s =
        load_amplitudes(mass, [](std::uint64_t x) { return 0.5 * static_cast<double>(x); });
    for (std::uint64_t x = 0; x < 4; ++x) {
        const cplx expected = 0.5 * std::exp(cplx{0.0, 0.5 * static_cast<double>(x)});
        EXPECT_NEAR(std::abs(s.amplitude(x) - expected), 0.0, 1e-12);
    }
}

TEST(LoadAmplitudes, RejectsBadTargets) {
    EXPECT_THROW(load_amplitudes(std::vector<double>(8, 0.0)), std::invalid_argument);
    EXPECT_THROW(load_amplitudes(std::vector<double>{1.0, -0.5}), std::invalid_argument);
    EXPECT_THROW(load_amplitudes(std::vector<double>{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST(ExpectationDiagonal, MatchesDirectSum) {
    SeededRng rng(31);
    const StateVector s = oracles::random_state(3, rng);
    std::vector<double> values(8);
    for (std::size_t i = 0; i < 8; ++i) values[i] = static_cast<double>(i) - 3.5;
    double direct = 0.0;
    for (std::uint64_t i = 0; i < 8; ++i) direct += std::norm(s.amplitude(i)) * values[i];
    EXPECT_NEAR(expectation_diagonal(s, values), direct, 1e-12);
}

TEST(Fixtures, AmplitudeFileRoundTrip) {
    const StateVector bell = [] {
        StateVector s(2, 0);
        s.apply(Gate::hadamard(0));
        s.apply(Gate::cnot(0, 1));
        return s;
    }();
    std::ifstream in(std::string(QCSIM_TEST_DATA_DIR) + "/bell_state.txt");
    ASSERT_TRUE(in.good());
    const auto amps = qcsim::io::read_amplitudes(in);
    ASSERT_EQ(amps.size(), 4u);
    const StateVector loaded = StateVector::from_amplitudes(2, amps);
    EXPECT_GT(loaded.fidelity(bell), 1.0 - 1e-12);
}
