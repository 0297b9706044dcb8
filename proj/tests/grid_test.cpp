/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qcsim/dense.hpp"
#include "qcsim/grid.hpp"
#include "support/oracles.hpp"

using namespace qcsim;

namespace {

constexpr double kPi = std::numbers::pi;

GridSpec desk_grid(int n_qubits = 8) { return GridSpec{n_qubits, -10.0, 10.0, 1}; }

ParticleSet one_particle(double mass = 1.0, double charge = 0.0) {
    return ParticleSet{{Particle{mass, charge}}};
}

GridWavefunction gaussian_packet(const GridSpec& g, double center, double sigma, double k0,
                                 double mass = 1.0) {
    const GaussianSpec packet{center, sigma, k0};
    return init_gaussian(g, one_particle(mass), std::span<const GaussianSpec>(&packet, 1));
}

DiagonalPotential zero_potential(const GridSpec& g, const ParticleSet& p) {
    return potential_on_grid(g, p, [](std::span<const double>) { return 0.0; });
}

DiagonalPotential harmonic_potential(const GridSpec& g, const ParticleSet& p, double m,
                                     double omega) {
    return potential_on_grid(g, p, [m, omega](std::span<const double> x) {
        return 0.5 * m * omega * omega * x[0] * x[0];
    });
}

} // namespace

TEST(GridSpec, MomentumLatticeIsWrapped) {
    const GridSpec g{3, 0.0, 8.0, 1};
    EXPECT_NEAR(g.momentum(0), 0.0, 1e-15);
    EXPECT_NEAR(g.momentum(1), 2.0 * kPi / 8.0, 1e-15);
    EXPECT_NEAR(g.momentum(3), 6.0 * kPi / 8.0, 1e-15);
    EXPECT_NEAR(g.momentum(4), -kPi, 1e-15);       // wrap point
    EXPECT_NEAR(g.momentum(7), -2.0 * kPi / 8.0, 1e-15);
    EXPECT_NEAR(g.dx(), 1.0, 1e-15);
}

TEST(InitGaussian, CenterAndNorm) {
    const GridSpec g = desk_grid();
    const GridWavefunction wfn = gaussian_packet(g, 1.25, 0.8, 0.0);
    EXPECT_NEAR(wfn.state().norm_sq(), 1.0, 1e-10);
    EXPECT_NEAR(wfn.mean_position(0), 1.25, g.dx() / 2.0);
}

TEST(InitGaussian, VarianceMatchesSigmaSquared) {
    const GridSpec g = desk_grid(); // 256 points
    const double sigma = 0.9;
    const GridWavefunction wfn = gaussian_packet(g, -0.5, sigma, 0.0);
    EXPECT_NEAR(wfn.position_variance(0), sigma * sigma, 0.02 * sigma * sigma);
}

TEST(InitGaussian, MomentumBoostSetsMeanMomentum) {
    const GridSpec g = desk_grid();
    const double k0 = 12.0 * 2.0 * kPi / g.length(); // lattice-aligned
    const GridWavefunction wfn = gaussian_packet(g, 0.0, 0.7, k0);
    EXPECT_NEAR(wfn.mean_momentum(0), k0, 1e-6);
}

TEST(InitGaussian, OverflowingPacketIsRejected) {
    const GridSpec g = desk_grid();
    const GaussianSpec packet{9.5, 2.0, 0.0}; // leaks through the right edge
    EXPECT_THROW(
        init_gaussian(g, one_particle(), std::span<const GaussianSpec>(&packet, 1)),
        std::invalid_argument);
}

TEST(SplitOperator, PlaneWaveIsKineticEigenstate) {
    // V = 0, single step on a lattice plane wave: state unchanged up to the
    // phase e^{-i p^2 dt / 2m}.
    const GridSpec g{6, -8.0, 8.0, 1};
    const ParticleSet particles = one_particle(1.5);
    const double p0 = 2.0 * kPi / g.length() * 5.0;

    std::vector<double> mass(g.points(), 1.0);
    const StateVector plane =
        load_amplitudes(mass, [&](std::uint64_t j) { return p0 * g.coord(j); });
    GridWavefunction wfn(g, particles, plane);

    const double dt = 0.37;
    split_operator_step(wfn, zero_potential(g, particles), dt);

    const cplx expected_phase = std::exp(cplx{0.0, -p0 * p0 * dt / (2.0 * 1.5)});
    const cplx overlap = plane.inner(wfn.state());
    EXPECT_NEAR(std::abs(overlap), 1.0, 1e-10);
    EXPECT_NEAR(std::abs(overlap - expected_phase), 0.0, 1e-9);
}

TEST(SplitOperator, FreeGaussianDispersionMatchesAnalytic) {
    const GridSpec g = desk_grid(); // n = 8
    const double sigma = 0.7, mass = 1.0;
    GridWavefunction wfn = gaussian_packet(g, 0.0, sigma, 0.0, mass);
    const DiagonalPotential v = zero_potential(g, wfn.particles());

    const double t = 2.0, dt = 0.01;
    propagate(wfn, v, t, dt);
    const double expected =
        sigma * std::sqrt(1.0 + std::pow(t / (2.0 * mass * sigma * sigma), 2));
    EXPECT_NEAR(std::sqrt(wfn.position_variance(0)), expected, 0.01 * expected);
}

TEST(SplitOperator, CoherentStateReturnsAfterOnePeriod) {
    const GridSpec g = desk_grid();
    const double omega = 1.0, mass = 1.0;
    const double sigma = 1.0 / std::sqrt(2.0 * mass * omega); // ground-state width
    GridWavefunction wfn = gaussian_packet(g, 2.0, sigma, 0.0, mass);
    const GridWavefunction initial = wfn;
    const DiagonalPotential v = harmonic_potential(g, wfn.particles(), mass, omega);

    const double period = 2.0 * kPi / omega;
    const int steps = 2048;
    propagate(wfn, v, period, period / steps);

    EXPECT_NEAR(wfn.mean_position(0), 2.0, g.dx());
    EXPECT_GT(wfn.state().fidelity(initial.state()), 0.999);
}

TEST(SplitOperator, NormConservedOverManySteps) {
    const GridSpec g = desk_grid();
    GridWavefunction wfn = gaussian_packet(g, 1.0, 0.8, 0.0);
    const DiagonalPotential v = harmonic_potential(g, wfn.particles(), 1.0, 1.0);
    for (int i = 0; i < 1000; ++i) split_operator_step(wfn, v, 0.003);
    EXPECT_NEAR(wfn.state().norm_sq(), 1.0, 1e-10);
}

TEST(SplitOperator, TimeReversalRestoresInitialState) {
    const GridSpec g = desk_grid();
    GridWavefunction wfn = gaussian_packet(g, -1.0, 0.75, 0.0);
    const GridWavefunction initial = wfn;
    const DiagonalPotential v = harmonic_potential(g, wfn.particles(), 1.0, 0.8);
    propagate(wfn, v, 1.0, 0.01);
    propagate(wfn, v, -1.0, -0.01);
    EXPECT_GT(wfn.state().fidelity(initial.state()), 1.0 - 1e-8);
}

TEST(SplitOperator, StrangSplittingIsSecondOrder) {
    // Fidelity error against the dense propagator shrinks ~4x when dt halves.
    const GridSpec g{6, -8.0, 8.0, 1};
    const double omega = 1.3;
    GridWavefunction base = gaussian_packet(g, 1.0, 0.8, 0.0);
    const DiagonalPotential v = harmonic_potential(g, base.particles(), 1.0, omega);

    // Dense H = F^dag diag(p^2/2m) F + diag(V), diagonalized once.
    const Eigen::MatrixXcd f = oracles::dft_matrix(6);
    Eigen::VectorXd kinetic(64), pot(64);
    for (int k = 0; k < 64; ++k) {
        // to_momentum is the inverse QFT, so momentum index k corresponds to
        // the +k lattice frequency.
        kinetic(k) = 0.5 * std::pow(g.momentum(static_cast<std::uint64_t>(k)), 2);
        pot(k) = v[static_cast<std::uint64_t>(k)];
    }
    const Eigen::MatrixXcd h_dense =
        f.adjoint() * kinetic.cast<cplx>().asDiagonal() * f +
        Eigen::MatrixXcd(pot.cast<cplx>().asDiagonal());

    const double t = 0.5;
    const Eigen::VectorXcd exact =
        oracles::expm_hermitian(h_dense, t) * to_vector(base.state());

    auto error_at = [&](double dt) {
        GridWavefunction wfn = base;
        propagate(wfn, v, t, dt);
        return oracles::max_abs_diff(wfn.state(), exact);
    };
    const double ratio = error_at(0.02) / error_at(0.01);
    EXPECT_NEAR(ratio, 4.0, 1.0);
}

TEST(SplitOperator, FirstOrderSplitMatchesLiteralForm) {
    // The first-order split is exp(-iT dt) exp(-iV dt); one step must equal
    // the dense product in that exact order.
    const GridSpec g{5, -6.0, 6.0, 1};
    GridWavefunction wfn = gaussian_packet(g, 0.5, 0.5, 0.0);
    const DiagonalPotential v = harmonic_potential(g, wfn.particles(), 1.0, 1.1);

    const Eigen::MatrixXcd f = oracles::dft_matrix(5);
    Eigen::VectorXd kinetic(32), pot(32);
    for (int k = 0; k < 32; ++k) {
        kinetic(k) = 0.5 * std::pow(g.momentum(static_cast<std::uint64_t>(k)), 2);
        pot(k) = v[static_cast<std::uint64_t>(k)];
    }
    const double dt = 0.21;
    const Eigen::MatrixXcd u_t = oracles::expm_hermitian(
        Eigen::MatrixXcd(kinetic.cast<cplx>().asDiagonal()), dt);
    const Eigen::MatrixXcd u_v = oracles::expm_hermitian(
        Eigen::MatrixXcd(pot.cast<cplx>().asDiagonal()), dt);
    const Eigen::VectorXcd expected = f.adjoint() * u_t * f * u_v * to_vector(wfn.state());

    split_operator_step(wfn, v, dt, /*strang=*/false);
    EXPECT_LT(oracles::max_abs_diff(wfn.state(), expected), 1e-10);
}

TEST(SplitOperator, KineticApplicationMatchesDenseMatrix) {
    // QFT-based kinetic phase equals the dense diagonal-in-momentum matrix.
    const GridSpec g{8, -5.0, 5.0, 1};
    SeededRng rng(97);
    const StateVector psi = oracles::random_state(8, rng);
    GridWavefunction wfn(g, one_particle(2.0), psi);

    const DiagonalPotential v = zero_potential(g, wfn.particles());
    const double dt = 0.17;
    split_operator_step(wfn, v, dt);

    const Eigen::MatrixXcd f = oracles::dft_matrix(8);
    Eigen::VectorXcd phases(256);
    for (int k = 0; k < 256; ++k) {
        const double p = g.momentum(static_cast<std::uint64_t>(k));
        const double angle = -dt * p * p / (2.0 * 2.0);
        phases(k) = cplx{std::cos(angle), std::sin(angle)};
    }
    const Eigen::VectorXcd expected = f.adjoint() * phases.asDiagonal() * f * to_vector(psi);
    EXPECT_LT(oracles::max_abs_diff(wfn.state(), expected), 1e-10);
}

TEST(Propagate, FreeParticleMomentumIsConserved) {
    const GridSpec g{7, -12.0, 12.0, 1};
    const double k0 = 2.0 * kPi / g.length() * 8.0;
    GridWavefunction wfn = gaussian_packet(g, -3.0, 0.9, k0);
    const DiagonalPotential v = zero_potential(g, wfn.particles());
    const auto trace = propagate(wfn, v, 1.0, 0.02);
    for (const auto& row : trace.rows) {
        EXPECT_NEAR(row.p_mean[0], trace.rows.front().p_mean[0], 1e-10);
        EXPECT_NEAR(row.norm, 1.0, 1e-10);
    }
}

TEST(Propagate, HarmonicEnergyDriftIsSecondOrder) {
    const GridSpec g = desk_grid();
    const double omega = 1.0;
    GridWavefunction base = gaussian_packet(g, 1.5, 0.7, 0.0);
    const DiagonalPotential v = harmonic_potential(g, base.particles(), 1.0, omega);
    const double period = 2.0 * kPi / omega;

    auto drift_at = [&](double dt) {
        GridWavefunction wfn = base;
        const auto trace = propagate(wfn, v, period, dt);
        double worst = 0.0;
        for (const auto& row : trace.rows)
            worst = std::max(worst, std::abs(row.energy - trace.rows.front().energy));
        return worst;
    };
    const double ratio = drift_at(period / 512.0) / drift_at(period / 1024.0);
    EXPECT_NEAR(ratio, 4.0, 1.0);
}

TEST(Propagate, DenseEigenstateIsStationary) {
    // Eigenstate of the discretized H from dense diagonalization (n = 6):
    // populations move by less than 1e-6 over many steps.
    const GridSpec g{6, -8.0, 8.0, 1};
    const ParticleSet particles = one_particle();
    const DiagonalPotential v = harmonic_potential(g, particles, 1.0, 1.0);

    const Eigen::MatrixXcd f = oracles::dft_matrix(6);
    Eigen::VectorXd kinetic(64), pot(64);
    for (int k = 0; k < 64; ++k) {
        kinetic(k) = 0.5 * std::pow(g.momentum(static_cast<std::uint64_t>(k)), 2);
        pot(k) = v[static_cast<std::uint64_t>(k)];
    }
    const Eigen::MatrixXcd h_dense =
        f.adjoint() * kinetic.cast<cplx>().asDiagonal() * f +
        Eigen::MatrixXcd(pot.cast<cplx>().asDiagonal());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h_dense);

    GridWavefunction wfn(g, particles, state_from_vector(solver.eigenvectors().col(2), true));
    const auto initial = wfn.state().register_probabilities(0, 6);
    propagate(wfn, v, 1.0, 0.001);
    const auto final_probs = wfn.state().register_probabilities(0, 6);
    for (std::size_t i = 0; i < initial.size(); ++i)
        EXPECT_NEAR(final_probs[i], initial[i], 1e-6);
}

TEST(Propagate, RejectsNonCommensurateTime) {
    const GridSpec g{5, -6.0, 6.0, 1};
    GridWavefunction wfn = gaussian_packet(g, 0.0, 0.7, 0.0);
    const DiagonalPotential v = zero_potential(g, wfn.particles());
    EXPECT_THROW(propagate(wfn, v, 1.0, 0.3), std::invalid_argument);
}

TEST(Coulomb, TwoChargesAtLargeSeparation) {
    // Fixed configuration: energy ~ q1 q2 / r with the softening correction.
    const GridSpec g{4, 0.0, 16.0, 1};
    const ParticleSet two{{Particle{1.0, 1.0}, Particle{1.0, 1.0}}};
    const double eps = 0.25;
    const DiagonalPotential v = coulomb_potential(g, two, eps);

    const std::uint64_t config = 0 | (12 << 4); // x1 = 0, x2 = 12
    const double r = 12.0;
    EXPECT_NEAR(v[config], 1.0 / std::sqrt(r * r + eps * eps), 1e-12);
    EXPECT_NEAR(v[config], 1.0 / r, 2e-4); // epsilon correction is tiny here
}

TEST(Coulomb, SingleParticleHasZeroPotential) {
    const GridSpec g{5, -4.0, 4.0, 1};
    const DiagonalPotential v = coulomb_potential(g, one_particle(1.0, 1.0), 0.1);
    for (double value : v) EXPECT_EQ(value, 0.0);
}

TEST(Coulomb, TwoParticleTableMatchesDirectDoubleLoop) {
    const GridSpec g{3, -2.0, 2.0, 1};
    const ParticleSet two{{Particle{1.0, 1.0}, Particle{2.0, -1.0}}};
    const double eps = 0.3;
    const DiagonalPotential v = coulomb_potential(g, two, eps);
    for (std::uint64_t j2 = 0; j2 < 8; ++j2)
        for (std::uint64_t j1 = 0; j1 < 8; ++j1) {
            const double r = g.coord(j1) - g.coord(j2);
            const double expected = -1.0 / std::sqrt(r * r + eps * eps);
            EXPECT_EQ(v[(j2 << 3) | j1], expected);
        }
}

TEST(Propagate, TwoDimensionalCoherentMotion) {
    // 2D harmonic trap: the x packet is displaced, the y packet sits at the
    // minimum; x oscillates with the classical period while y stays put.
    const GridSpec g{5, -8.0, 8.0, 2};
    const ParticleSet particle = one_particle();
    const double sigma = 1.0 / std::sqrt(2.0);
    const GaussianSpec packets[2] = {{1.5, sigma, 0.0}, {0.0, sigma, 0.0}};
    GridWavefunction wfn = init_gaussian(g, particle, packets);
    const DiagonalPotential v = potential_on_grid(g, particle, [](std::span<const double> x) {
        return 0.5 * (x[0] * x[0] + x[1] * x[1]);
    });

    const double period = 2.0 * kPi;
    propagate(wfn, v, period / 2.0, period / 1024.0); // half period: x flips sign
    EXPECT_NEAR(wfn.mean_position(0), -1.5, 2.0 * g.dx());
    EXPECT_NEAR(wfn.mean_position(1), 0.0, g.dx());
    EXPECT_NEAR(wfn.state().norm_sq(), 1.0, 1e-10);
}

TEST(Symmetry, SwapSymmetricStateStaysSymmetric) {
    // Two identical 1D particles with a symmetric initial state: amplitudes
    // at swapped configurations stay equal through propagation.
    const GridSpec g{4, -6.0, 6.0, 1};
    const ParticleSet two{{Particle{1.0, 1.0}, Particle{1.0, 1.0}}};

    const GaussianSpec packets[2] = {{-1.0, 0.5, 0.0}, {1.0, 0.5, 0.0}};
    GridWavefunction ab = init_gaussian(g, two, packets);
    const GaussianSpec swapped[2] = {{1.0, 0.5, 0.0}, {-1.0, 0.5, 0.0}};
    GridWavefunction ba = init_gaussian(g, two, swapped);

    std::vector<cplx> sym(ab.state().dim());
    for (std::uint64_t i = 0; i < ab.state().dim(); ++i)
        sym[i] = ab.state().amplitude(i) + ba.state().amplitude(i);
    GridWavefunction wfn(g, two, StateVector::from_amplitudes(8, std::move(sym), true));

    const DiagonalPotential v = coulomb_potential(g, two, g.dx() / 2.0);
    propagate(wfn, v, 0.5, 0.01);

    for (std::uint64_t j2 = 0; j2 < 16; ++j2)
        for (std::uint64_t j1 = 0; j1 < 16; ++j1) {
            const cplx a = wfn.state().amplitude((j2 << 4) | j1);
            const cplx b = wfn.state().amplitude((j1 << 4) | j2);
            EXPECT_NEAR(std::abs(a - b), 0.0, 1e-10);
        }
}
