/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Rotate one dof register to the momentum representation. The physics
// convention (plane wave exp(+ikx) lands on the +k lattice point) is the
// adjoint of the Fourier kernel used by apply_qft.
void to_momentum(StateVector& state, int first, int count) {
    state.apply_qft(first, count, /*inverse=*/true);
}

void from_momentum(StateVector& state, int first, int count) {
    state.apply_qft(first, count, /*inverse=*/false);
}

void apply_potential_phase(GridWavefunction& wfn, const DiagonalPotential& v, double dt) {
    auto amps = wfn.state().mutable_amplitudes();
    const std::uint64_t dim = wfn.state().dim();
    for (std::uint64_t i = 0; i < dim; ++i) {
        const double angle = -dt * v[i];
        amps[i] *= cplx{std::cos(angle), std::sin(angle)};
    }
}

// exp(-i dt T) with T = sum_dof p^2 / (2 m_dof); all registers must already
// be in the momentum representation.
void apply_kinetic_phase(GridWavefunction& wfn, double dt) {
    const GridSpec& g = wfn.grid();
    const std::uint64_t points = g.points();
    const int n = g.n_qubits;
    auto amps = wfn.state().mutable_amplitudes();
    const std::uint64_t dim = wfn.state().dim();

    std::vector<double> kin(points);
    for (int dof = 0; dof < wfn.n_dof(); ++dof) {
        const double inv_2m = 0.5 / wfn.dof_mass(dof);
        for (std::uint64_t k = 0; k < points; ++k) {
            const double p = g.momentum(k);
            kin[k] = p * p * inv_2m;
        }
        const int shift = dof * n;
        for (std::uint64_t i = 0; i < dim; ++i) {
            const double angle = -dt * kin[(i >> shift) & (points - 1)];
            amps[i] *= cplx{std::cos(angle), std::sin(angle)};
        }
    }
}

} // namespace

double GridSpec::momentum(std::uint64_t k) const {
    const auto n = static_cast<std::int64_t>(points());
    auto wrapped = static_cast<std::int64_t>(k);
    if (wrapped >= n / 2) wrapped -= n;
    return kTwoPi * static_cast<double>(wrapped) / length();
}

void GridSpec::validate() const {
    if (n_qubits < 1 || n_qubits > 24)
        throw std::invalid_argument("GridSpec: qubits per dimension out of range [1, 24]");
    if (!(x_hi > x_lo)) throw std::invalid_argument("GridSpec: empty extent");
    if (dims < 1 || dims > 3) throw std::invalid_argument("GridSpec: dims out of range [1, 3]");
}

void ParticleSet::validate() const {
    if (particles.empty()) throw std::invalid_argument("ParticleSet: no particles");
    for (const auto& p : particles)
        if (!(p.mass > 0.0)) throw std::invalid_argument("ParticleSet: masses must be positive");
}

GridWavefunction::GridWavefunction(GridSpec grid, ParticleSet particles, StateVector state)
    : grid_(grid), particles_(std::move(particles)), state_(std::move(state)) {
    grid_.validate();
    particles_.validate();
    if (state_.n_qubits() != total_qubits())
        throw std::invalid_argument("GridWavefunction: register has " +
                                    std::to_string(state_.n_qubits()) + " qubits, expected " +
                                    std::to_string(total_qubits()));
}

double GridWavefunction::dof_mass(int dof) const {
    return particles_.particles[static_cast<std::size_t>(dof / grid_.dims)].mass;
}

std::uint64_t GridWavefunction::dof_index(std::uint64_t config, int dof) const {
    return (config >> (dof * grid_.n_qubits)) & (grid_.points() - 1);
}

std::vector<double> GridWavefunction::positions(std::uint64_t config) const {
    std::vector<double> pos(static_cast<std::size_t>(n_dof()));
    for (int d = 0; d < n_dof(); ++d)
        pos[static_cast<std::size_t>(d)] = grid_.coord(dof_index(config, d));
    return pos;
}

double GridWavefunction::mean_position(int dof) const {
    const auto probs = state_.register_probabilities(dof_first_qubit(dof), grid_.n_qubits);
    double acc = 0.0;
    for (std::uint64_t j = 0; j < probs.size(); ++j) acc += probs[j] * grid_.coord(j);
    return acc;
}

double GridWavefunction::position_variance(int dof) const {
    const auto probs = state_.register_probabilities(dof_first_qubit(dof), grid_.n_qubits);
    double mean = 0.0, second = 0.0;
    for (std::uint64_t j = 0; j < probs.size(); ++j) {
        const double x = grid_.coord(j);
        mean += probs[j] * x;
        second += probs[j] * x * x;
    }
    return second - mean * mean;
}

double GridWavefunction::mean_momentum(int dof) const {
    StateVector copy = state_;
    to_momentum(copy, dof_first_qubit(dof), grid_.n_qubits);
    const auto probs = copy.register_probabilities(dof_first_qubit(dof), grid_.n_qubits);
    double acc = 0.0;
    for (std::uint64_t k = 0; k < probs.size(); ++k) acc += probs[k] * grid_.momentum(k);
    return acc;
}

double GridWavefunction::kinetic_energy() const {
    StateVector copy = state_;
    for (int dof = 0; dof < n_dof(); ++dof)
        to_momentum(copy, dof_first_qubit(dof), grid_.n_qubits);
    double acc = 0.0;
    for (int dof = 0; dof < n_dof(); ++dof) {
        const auto probs = copy.register_probabilities(dof_first_qubit(dof), grid_.n_qubits);
        const double inv_2m = 0.5 / dof_mass(dof);
        for (std::uint64_t k = 0; k < probs.size(); ++k) {
            const double p = grid_.momentum(k);
            acc += probs[k] * p * p * inv_2m;
        }
    }
    return acc;
}

double GridWavefunction::potential_energy(const DiagonalPotential& v) const {
    return expectation_diagonal(state_, v);
}

GridWavefunction init_gaussian(const GridSpec& grid, const ParticleSet& particles,
                               std::span<const GaussianSpec> packets) {
    grid.validate();
    particles.validate();
    const int n_dof = particles.count() * grid.dims;
    if (static_cast<int>(packets.size()) != n_dof)
        throw std::invalid_argument("init_gaussian: expected one packet per degree of freedom");

    StateVector combined(1, 0); // placeholder, replaced by the first factor
    for (int dof = 0; dof < n_dof; ++dof) {
        const GaussianSpec& p = packets[static_cast<std::size_t>(dof)];
        if (!(p.sigma > 0.0)) throw std::invalid_argument("init_gaussian: sigma must be positive");

        const std::uint64_t points = grid.points();
        std::vector<double> mass(points);
        double peak = 0.0;
        for (std::uint64_t j = 0; j < points; ++j) {
            const double d = grid.coord(j) - p.center;
            mass[j] = std::exp(-d * d / (2.0 * p.sigma * p.sigma));
            peak = std::max(peak, mass[j]);
        }
        // |amplitude| at the box edges must stay below 1e-6 of the peak.
        const double edge = std::max(mass.front(), mass.back());
        if (peak <= 0.0 || std::sqrt(edge / peak) >= 1e-6)
            throw std::invalid_argument("init_gaussian: packet for dof " + std::to_string(dof) +
                                        " is not contained in the box");

        const double k0 = p.momentum;
        StateVector factor = load_amplitudes(
            mass, [&grid, k0](std::uint64_t j) { return k0 * grid.coord(j); });
        combined = (dof == 0) ? std::move(factor) : tensor_product(combined, factor);
    }
    return GridWavefunction(grid, particles, std::move(combined));
}

DiagonalPotential coulomb_potential(const GridSpec& grid, const ParticleSet& particles,
                                    double softening) {
    if (softening < 0.0) throw std::invalid_argument("coulomb_potential: softening must be >= 0");
    return potential_on_grid(grid, particles, [&](std::span<const double> pos) {
        double acc = 0.0;
        const int b = particles.count();
        for (int i = 0; i < b; ++i) {
            for (int j = i + 1; j < b; ++j) {
                double r2 = 0.0;
                for (int d = 0; d < grid.dims; ++d) {
                    const double diff = pos[static_cast<std::size_t>(i * grid.dims + d)] -
                                        pos[static_cast<std::size_t>(j * grid.dims + d)];
                    r2 += diff * diff;
                }
                acc += particles.particles[static_cast<std::size_t>(i)].charge *
                       particles.particles[static_cast<std::size_t>(j)].charge /
                       std::sqrt(r2 + softening * softening);
            }
        }
        return acc;
    });
}

DiagonalPotential potential_on_grid(const GridSpec& grid, const ParticleSet& particles,
                                    const std::function<double(std::span<const double>)>& v) {
    grid.validate();
    particles.validate();
    if (!v) throw std::invalid_argument("potential_on_grid: missing callback");
    const int n_dof = particles.count() * grid.dims;
    const int total_qubits = n_dof * grid.n_qubits;
    if (total_qubits > 26) throw std::invalid_argument("potential_on_grid: register too large");

    const std::uint64_t dim = std::uint64_t{1} << total_qubits;
    const std::uint64_t points = grid.points();
    DiagonalPotential table(dim);
    std::vector<double> pos(static_cast<std::size_t>(n_dof));
    for (std::uint64_t config = 0; config < dim; ++config) {
        for (int d = 0; d < n_dof; ++d)
            pos[static_cast<std::size_t>(d)] =
                grid.coord((config >> (d * grid.n_qubits)) & (points - 1));
        table[config] = v(pos);
    }
    return table;
}

void split_operator_step(GridWavefunction& wfn, const DiagonalPotential& v, double dt,
                         bool strang) {
    if (dt == 0.0) throw std::invalid_argument("split_operator_step: dt must be nonzero");
    if (v.size() != wfn.state().dim())
        throw std::invalid_argument("split_operator_step: potential table size mismatch");
    const int n = wfn.grid().n_qubits;

    if (strang) {
        apply_potential_phase(wfn, v, dt / 2.0);
        for (int dof = 0; dof < wfn.n_dof(); ++dof)
            to_momentum(wfn.state(), wfn.dof_first_qubit(dof), n);
        apply_kinetic_phase(wfn, dt);
        for (int dof = 0; dof < wfn.n_dof(); ++dof)
            from_momentum(wfn.state(), wfn.dof_first_qubit(dof), n);
        apply_potential_phase(wfn, v, dt / 2.0);
    } else {
        apply_potential_phase(wfn, v, dt);
        for (int dof = 0; dof < wfn.n_dof(); ++dof)
            to_momentum(wfn.state(), wfn.dof_first_qubit(dof), n);
        apply_kinetic_phase(wfn, dt);
        for (int dof = 0; dof < wfn.n_dof(); ++dof)
            from_momentum(wfn.state(), wfn.dof_first_qubit(dof), n);
    }
}

ObservableTrace propagate(GridWavefunction& wfn, const DiagonalPotential& v, double t_total,
                          double dt, bool strang) {
    if (dt == 0.0) throw std::invalid_argument("propagate: dt must be nonzero");
    const double ratio = t_total / dt;
    const auto k = static_cast<std::int64_t>(std::llround(ratio));
    if (k < 0 || std::abs(ratio - static_cast<double>(k)) > 1e-9 * std::max(1.0, std::abs(ratio)))
        throw std::invalid_argument("propagate: t_total must be a whole number of steps");

    auto record = [&](int step) {
        TraceRow row;
        row.step = step;
        row.time = static_cast<double>(step) * dt;
        row.norm = std::sqrt(wfn.state().norm_sq());
        row.energy = wfn.kinetic_energy() + wfn.potential_energy(v);
        for (int dof = 0; dof < wfn.n_dof(); ++dof) {
            row.x_mean.push_back(wfn.mean_position(dof));
            row.p_mean.push_back(wfn.mean_momentum(dof));
        }
        return row;
    };

    ObservableTrace trace;
    trace.rows.push_back(record(0));
    for (std::int64_t step = 1; step <= k; ++step) {
        split_operator_step(wfn, v, dt, strang);
        trace.rows.push_back(record(static_cast<int>(step)));
    }
    return trace;
}

} // namespace qcsim
