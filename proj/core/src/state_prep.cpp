/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/state_prep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcsim/dense.hpp"
#include "qcsim/trotter.hpp"

namespace qcsim {

StateVector prepare_fock(const std::vector<bool>& occupations) {
    const int m = static_cast<int>(occupations.size());
    if (m < 1) throw std::invalid_argument("prepare_fock: empty occupation list");
    std::uint64_t index = 0;
    for (int i = 0; i < m; ++i)
        if (occupations[static_cast<std::size_t>(i)]) index |= std::uint64_t{1} << i;
    return StateVector(m, index);
}

StateVector prepare_fock(std::string_view occupations) {
    std::vector<bool> occ;
    occ.reserve(occupations.size());
    for (char c : occupations) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("prepare_fock: occupation string must be over {0,1}");
        occ.push_back(c == '1');
    }
    return prepare_fock(occ);
}

Schedule linear_schedule() {
    return [](double tau) { return SchedulePoint{1.0 - tau, tau}; };
}

StateVector evolve_time_dependent(StateVector state, const PauliSum& h_a, const PauliSum& h_b,
                                  const Schedule& schedule, double t_run, double dt, int order) {
    if (!(t_run > 0.0)) throw std::invalid_argument("evolve_time_dependent: t_run must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("evolve_time_dependent: dt must be > 0");
    if (!schedule) throw std::invalid_argument("evolve_time_dependent: missing schedule");
    if (h_a.n_qubits() != state.n_qubits() || h_b.n_qubits() != state.n_qubits())
        throw std::invalid_argument("evolve_time_dependent: qubit count mismatch");

    const auto n_steps = static_cast<std::uint64_t>(std::max(1.0, std::round(t_run / dt)));
    const double step = t_run / static_cast<double>(n_steps);

    // Frozen union term list; per step only the two envelope factors change.
    PauliSum a = h_a, b = h_b;
    a.collect();
    b.collect();

    for (std::uint64_t k = 0; k < n_steps; ++k) {
        const double tau = (static_cast<double>(k) + 0.5) / static_cast<double>(n_steps);
        const SchedulePoint env = schedule(tau);
        PauliSum h = a.scaled(env.a) + b.scaled(env.b);
        TrotterEvolver evolver(h, step, 1, order);
        evolver.apply_step(state);
    }
    return state;
}

AspResult adiabatic_state_prep(const PauliSum& h_start, const PauliSum& h_end,
                               const Schedule& schedule, double t_run, double dt,
                               const StateVector* start, int order) {
    if (!(t_run > 0.0)) throw std::invalid_argument("adiabatic_state_prep: t_run must be > 0");

    StateVector psi = start ? *start : ground_state(h_start);

    AspResult result{psi, std::nullopt, std::nullopt};
    std::optional<StateVector> target;
    if (h_end.n_qubits() <= kDenseCapQubits) {
        target = ground_state(h_end);
        result.initial_overlap_sq = target->fidelity(psi);
    }

    result.state = evolve_time_dependent(std::move(psi), h_start, h_end, schedule, t_run, dt, order);
    if (target) result.ground_fidelity = target->fidelity(result.state);
    return result;
}

double CetsSpec::partition_function() const {
    if (energies.empty()) throw std::invalid_argument("CetsSpec: empty spectrum");
    if (beta < 0.0) throw std::invalid_argument("CetsSpec: beta must be >= 0");
    const double e_min = *std::min_element(energies.begin(), energies.end());
    double z_shifted = 0.0;
    for (double e : energies) z_shifted += std::exp(-beta * (e - e_min));
    return z_shifted * std::exp(-beta * e_min);
}

std::vector<double> CetsSpec::gibbs_weights() const {
    if (energies.empty()) throw std::invalid_argument("CetsSpec: empty spectrum");
    if (beta < 0.0) throw std::invalid_argument("CetsSpec: beta must be >= 0");
    const double e_min = *std::min_element(energies.begin(), energies.end());
    std::vector<double> w(energies.size());
    double z_shifted = 0.0;
    for (std::size_t k = 0; k < energies.size(); ++k) {
        w[k] = std::exp(-beta * (energies[k] - e_min));
        z_shifted += w[k];
    }
    for (double& x : w) x /= z_shifted;
    return w;
}

StateVector prepare_cets(const CetsSpec& spec, std::span<const std::uint64_t> basis_map) {
    const std::size_t levels = spec.energies.size();
    if (!basis_map.empty() && basis_map.size() != levels)
        throw std::invalid_argument("prepare_cets: basis map size mismatch");

    std::uint64_t max_index = levels - 1;
    for (std::uint64_t m : basis_map) max_index = std::max(max_index, m);
    int reg_qubits = 1;
    while ((std::uint64_t{1} << reg_qubits) <= max_index) ++reg_qubits;

    const std::vector<double> weights = spec.gibbs_weights();

    const std::uint64_t reg_dim = std::uint64_t{1} << reg_qubits;
    std::vector<cplx> amps(reg_dim * reg_dim, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < levels; ++k) {
        const std::uint64_t m = basis_map.empty() ? k : basis_map[k];
        const std::uint64_t pair_index = (m << reg_qubits) | m;
        amps[pair_index] += std::sqrt(weights[k]);
    }
    return StateVector::from_amplitudes(2 * reg_qubits, std::move(amps), /*renormalize=*/true);
}

std::vector<double> reduced_diagonal(const StateVector& state, int register_qubits) {
    if (register_qubits < 1 || register_qubits >= state.n_qubits())
        throw std::invalid_argument("reduced_diagonal: register width out of range");
    return state.register_probabilities(0, register_qubits);
}

} // namespace qcsim
