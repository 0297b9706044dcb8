/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <functional>
#include <optional>
#include <span>

#include "qcsim/pauli.hpp"

namespace qcsim {

/// Computational basis state with qubit i set when occupations[i] is true
/// (|1> = occupied). One qubit per spin-orbital.
StateVector prepare_fock(const std::vector<bool>& occupations);
/// Same from a string of '0'/'1'; the leftmost character is mode 0.
StateVector prepare_fock(std::string_view occupations);

/// Envelope pair (A(tau), B(tau)) for interpolating Hamiltonians.
struct SchedulePoint {
    double a = 0.0;
    double b = 0.0;
};
using Schedule = std::function<SchedulePoint(double)>;

/// A(tau) = 1 - tau, B(tau) = tau.
Schedule linear_schedule();

/// Trotterized integration of H(tau) = A(tau) H_a + B(tau) H_b from tau=0 to
/// 1 over wall time t_run, sampling the envelopes at each step midpoint.
/// Step count is round(t_run/dt), at least 1.
StateVector evolve_time_dependent(StateVector state, const PauliSum& h_a, const PauliSum& h_b,
                                  const Schedule& schedule, double t_run, double dt,
                                  int order = 2);

struct AspResult {
    StateVector state;
    /// |<ground(h_end)|state>|^2 when the end Hamiltonian fits the dense cap.
    std::optional<double> ground_fidelity;
    /// |<ground(h_end)|start>|^2, the sudden-limit fidelity, same condition.
    std::optional<double> initial_overlap_sq;
};

/// Adiabatic state preparation: starts from `start` (or the dense-oracle
/// ground state of h_start when omitted) and integrates the interpolation to
/// h_end. Requires t_run > 0.
AspResult adiabatic_state_prep(const PauliSum& h_start, const PauliSum& h_end,
                               const Schedule& schedule, double t_run, double dt,
                               const StateVector* start = nullptr, int order = 2);

/// Spectrum + inverse temperature for a coherent thermal-state encoding.
struct CetsSpec {
    std::vector<double> energies;
    double beta = 0.0; // 1/energy units, must be >= 0

    /// Z = sum_k exp(-beta E_k), computed with the minimum energy factored
    /// out so large beta cannot overflow.
    double partition_function() const;
    /// exp(-beta E_k)/Z per level, numerically stable.
    std::vector<double> gibbs_weights() const;
};

/// Two-register pure state sum_k sqrt(exp(-beta E_k)/Z) |m_k>|m_k> where m_k
/// is basis_map[k] (identity when empty). Tracing out either register yields
/// the Gibbs weights on the diagonal. Register width is the smallest qubit
/// count holding every mapped index.
StateVector prepare_cets(const CetsSpec& spec, std::span<const std::uint64_t> basis_map = {});

/// Diagonal of the reduced density matrix of the low `register_qubits` qubits
/// (the remaining qubits are traced out), computed classically.
std::vector<double> reduced_diagonal(const StateVector& state, int register_qubits);

} // namespace qcsim
