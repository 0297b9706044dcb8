/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/trotter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcsim {

void apply_pauli_exponential(StateVector& state, const std::string& letters, double angle) {
    // Strings shorter than the register act as identity on the higher qubits.
    if (letters.size() > static_cast<std::size_t>(state.n_qubits()))
        throw std::invalid_argument("apply_pauli_exponential: string longer than register");
    if (angle == 0.0) return;

    std::uint64_t z_mask = 0;
    std::vector<int> x_qubits, y_qubits;
    for (std::size_t q = 0; q < letters.size(); ++q) {
        switch (letters[q]) {
        case 'I': break;
        case 'X': x_qubits.push_back(static_cast<int>(q)); z_mask |= std::uint64_t{1} << q; break;
        case 'Y': y_qubits.push_back(static_cast<int>(q)); z_mask |= std::uint64_t{1} << q; break;
        case 'Z': z_mask |= std::uint64_t{1} << q; break;
        default:
            throw std::invalid_argument("apply_pauli_exponential: invalid letter");
        }
    }

    if (z_mask == 0) { // identity string: global phase
        state.multiply_global_phase(std::exp(cplx{0.0, -angle}));
        return;
    }

    // Conjugate X -> Z with H and Y -> Z with H S+, rotate the Z string, undo.
    for (int q : x_qubits) state.apply(Gate::hadamard(q));
    for (int q : y_qubits) {
        state.apply(Gate::phase(q, -std::numbers::pi / 2)); // S+
        state.apply(Gate::hadamard(q));
    }

    state.apply_phase_rotation(z_mask, angle);

    for (int q : y_qubits) {
        state.apply(Gate::hadamard(q));
        state.apply(Gate::phase(q, std::numbers::pi / 2)); // S
    }
    for (int q : x_qubits) state.apply(Gate::hadamard(q));
}

TrotterEvolver::TrotterEvolver(const PauliSum& hamiltonian, double time, std::uint64_t n_steps,
                               int order)
    : n_qubits_(hamiltonian.n_qubits()) {
    if (!std::isfinite(time)) throw std::invalid_argument("TrotterEvolver: non-finite time");
    if (n_steps < 1) throw std::invalid_argument("TrotterEvolver: need at least one step");
    if (order != 1 && order != 2) throw std::invalid_argument("TrotterEvolver: order must be 1 or 2");

    PauliSum collected = hamiltonian;
    collected.collect();
    if (collected.max_abs_imag() > kMatrixTol)
        throw std::invalid_argument("TrotterEvolver: Hamiltonian coefficients must be real");

    plan_.ordered_terms = collected.terms(); // collect() sorts lexicographically
    plan_.n_steps = n_steps;
    plan_.dt = time / static_cast<double>(n_steps);
    plan_.order = order;
}

void TrotterEvolver::apply_step(StateVector& state) const {
    if (plan_.order == 1) {
        for (const auto& term : plan_.ordered_terms)
            apply_pauli_exponential(state, term.letters, term.coefficient.real() * plan_.dt);
        return;
    }
    const double half = plan_.dt / 2.0;
    for (auto it = plan_.ordered_terms.begin(); it != plan_.ordered_terms.end(); ++it)
        apply_pauli_exponential(state, it->letters, it->coefficient.real() * half);
    for (auto it = plan_.ordered_terms.rbegin(); it != plan_.ordered_terms.rend(); ++it)
        apply_pauli_exponential(state, it->letters, it->coefficient.real() * half);
}

void TrotterEvolver::apply(StateVector& state) const {
    for (std::uint64_t s = 0; s < plan_.n_steps; ++s) apply_step(state);
}

} // namespace qcsim
