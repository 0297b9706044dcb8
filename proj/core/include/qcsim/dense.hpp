/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <Eigen/Dense>

#include "qcsim/pauli.hpp"

namespace qcsim {

/// Size cap for dense constructions (2^cap x 2^cap matrices).
inline constexpr int kDenseCapQubits = 12;

/// Full 2^n x 2^n matrix of a Pauli sum. Throws resource_error above `cap`.
Eigen::MatrixXcd dense_matrix(const PauliSum& sum, int cap = kDenseCapQubits);

struct EigenSystem {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXcd eigenvectors; // columns
};

/// Dense self-adjoint diagonalization of a Hermitian Pauli sum.
EigenSystem diagonalize(const PauliSum& sum, int cap = kDenseCapQubits);

/// Normalized ground state (eigenvector of the smallest eigenvalue).
StateVector ground_state(const PauliSum& sum, int cap = kDenseCapQubits);

Eigen::VectorXcd to_vector(const StateVector& state);
StateVector state_from_vector(const Eigen::VectorXcd& v, bool renormalize = false);

/// Applies a dense unitary acting on the lowest log2(u.rows()) qubits. When
/// `control` >= 0 (a qubit above the block), only the control=1 subspace is
/// transformed, i.e. the full operation is |0><0| x I + |1><1| x U.
void apply_unitary_block(StateVector& state, const Eigen::MatrixXcd& u, int control = -1);

} // namespace qcsim
