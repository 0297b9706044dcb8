/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qcsim/statevector.hpp"

namespace qcsim {

/// Uniform spatial grid of 2^n points per dimension over [x_lo, x_hi), shared
/// by every degree of freedom. Atomic units (hbar = m_e = e = 1); lengths in
/// bohr. Periodic boundaries are implied by the Fourier kinetic step, and the
/// momentum lattice uses signed (wrapped) frequencies.
struct GridSpec {
    int n_qubits = 1;
    double x_lo = 0.0;
    double x_hi = 1.0;
    int dims = 1;

    std::uint64_t points() const { return std::uint64_t{1} << n_qubits; }
    double length() const { return x_hi - x_lo; }
    double dx() const { return length() / static_cast<double>(points()); }
    double coord(std::uint64_t index) const { return x_lo + static_cast<double>(index) * dx(); }
    /// Momentum of Fourier index k: 2 pi wrap(k) / L with wrap(k) in
    /// [-N/2, N/2).
    double momentum(std::uint64_t k) const;

    void validate() const;
};

struct Particle {
    double mass = 1.0;   // electron masses
    double charge = 0.0; // elementary charges
};

struct ParticleSet {
    std::vector<Particle> particles;

    int count() const { return static_cast<int>(particles.size()); }
    void validate() const;
};

/// Diagonal potential sampled on every grid configuration, in Hartree.
using DiagonalPotential = std::vector<double>;

/// Wavefunction of B particles on the grid: one n-qubit register per degree
/// of freedom (particle-major, dimension-minor; dof 0 lives on the lowest
/// qubits), dims*B*n qubits in total.
class GridWavefunction {
public:
    GridWavefunction(GridSpec grid, ParticleSet particles, StateVector state);

    const GridSpec& grid() const { return grid_; }
    const ParticleSet& particles() const { return particles_; }
    StateVector& state() { return state_; }
    const StateVector& state() const { return state_; }

    int n_dof() const { return particles_.count() * grid_.dims; }
    int total_qubits() const { return n_dof() * grid_.n_qubits; }
    int dof_first_qubit(int dof) const { return dof * grid_.n_qubits; }
    /// Mass of the particle owning the given degree of freedom.
    double dof_mass(int dof) const;

    /// Grid index of one degree of freedom inside a configuration index.
    std::uint64_t dof_index(std::uint64_t config, int dof) const;
    /// Position coordinates of every degree of freedom for a configuration.
    std::vector<double> positions(std::uint64_t config) const;

    double mean_position(int dof) const;
    double position_variance(int dof) const;
    /// <p> of one degree of freedom, computed by rotating that register to
    /// the momentum representation with the QFT.
    double mean_momentum(int dof) const;
    /// <T> = sum over dofs of <p^2/2m>, same route.
    double kinetic_energy() const;
    double potential_energy(const DiagonalPotential& v) const;

private:
    GridSpec grid_;
    ParticleSet particles_;
    StateVector state_;
};

/// Gaussian factor for one degree of freedom: amplitude proportional to
/// exp(-(x-center)^2/(4 sigma^2)) exp(i momentum x), so the position variance
/// of the loaded density is sigma^2.
struct GaussianSpec {
    double center = 0.0;
    double sigma = 1.0;
    double momentum = 0.0;
};

/// Product of per-dof Gaussians, each loaded with the amplitude-loading
/// recursion. Throws when a packet is not contained in the box (boundary
/// amplitude above 1e-6 of the peak).
GridWavefunction init_gaussian(const GridSpec& grid, const ParticleSet& particles,
                               std::span<const GaussianSpec> packets);

/// Pairwise softened Coulomb energy on every configuration:
/// sum_{i<j} q_i q_j / sqrt(r_ij^2 + softening^2).
DiagonalPotential coulomb_potential(const GridSpec& grid, const ParticleSet& particles,
                                    double softening);

/// Arbitrary diagonal potential from a callback on dof positions.
DiagonalPotential potential_on_grid(const GridSpec& grid, const ParticleSet& particles,
                                    const std::function<double(std::span<const double>)>& v);

/// One split-operator step of exp(-i(T+V)dt): symmetric (Strang) splitting
/// exp(-iV dt/2) exp(-iT dt) exp(-iV dt/2) by default; `strang = false`
/// selects the first-order split exp(-iT dt) exp(-iV dt). The kinetic factor
/// is applied in the momentum representation reached through the QFT.
/// Negative dt propagates backwards.
void split_operator_step(GridWavefunction& wfn, const DiagonalPotential& v, double dt,
                         bool strang = true);

struct TraceRow {
    int step = 0;
    double time = 0.0;
    double norm = 0.0;
    double energy = 0.0;
    std::vector<double> x_mean; // per dof
    std::vector<double> p_mean; // per dof
};

struct ObservableTrace {
    std::vector<TraceRow> rows;
};

/// k = t_total/dt split-operator steps (t_total must be an integer multiple
/// of dt within 1e-9 relative); records norm, energy, <x>, <p> per step,
/// including the initial row.
ObservableTrace propagate(GridWavefunction& wfn, const DiagonalPotential& v, double t_total,
                          double dt, bool strang = true);

} // namespace qcsim
