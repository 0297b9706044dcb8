/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <cstdint>

#include "qcsim/pauli.hpp"

namespace qcsim {

/// Frozen description of a Trotterized evolution: term order, step size and
/// count, and splitting order. n_steps * dt equals the requested total time
/// exactly (dt is computed as time / n_steps).
struct TrotterPlan {
    std::vector<PauliTerm> ordered_terms; // collected, lexicographic by letters
    double dt = 0.0;
    std::uint64_t n_steps = 1;
    int order = 1; // 1 = first-order product, 2 = symmetric (Strang)

    double total_time() const { return dt * static_cast<double>(n_steps); }
};

/// exp(-i angle P) for a single Pauli string, applied exactly: per-qubit basis
/// changes (H for X, S H for Y) conjugate the string to Z...Z, whose
/// exponential is one diagonal parity-phase pass. An all-identity string
/// contributes the global phase exp(-i angle).
void apply_pauli_exponential(StateVector& state, const std::string& letters, double angle);

/// Approximates exp(-i H t) as n_steps products of per-term exponentials.
/// Each exponential is exact, so the only error is the splitting error:
/// O(dt) per unit time at order 1, O(dt^2) at order 2. Coefficients must be
/// real (Hermitian H).
class TrotterEvolver {
public:
    TrotterEvolver(const PauliSum& hamiltonian, double time, std::uint64_t n_steps, int order);

    const TrotterPlan& plan() const { return plan_; }
    int n_qubits() const { return n_qubits_; }

    void apply(StateVector& state) const;      // all steps
    void apply_step(StateVector& state) const; // a single step

private:
    TrotterPlan plan_;
    int n_qubits_;
};

} // namespace qcsim
