/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <vector>

#include "qcsim/pauli.hpp"

namespace qcsim {

/// Second-quantized electronic Hamiltonian over M spin-orbitals:
///
///   H = sum_pq h_pq a+_p a_q + 1/2 sum_pqrs h_pqrs a+_p a+_q a_r a_s + const
///
/// with the two-body tensor multiplying the operators exactly in that
/// (physicist) order. Indices are 0-based in this API; the text file format
/// (see io.hpp) is 1-based. Units are Hartree.
class SecondQuantizedHamiltonian {
public:
    explicit SecondQuantizedHamiltonian(int n_spin_orbitals);

    int n_spin_orbitals() const { return m_; }

    double one_body(int p, int q) const;
    void set_one_body(int p, int q, double value);

    double two_body(int p, int q, int r, int s) const;
    void set_two_body(int p, int q, int r, int s, double value);

    double constant() const { return constant_; }
    void set_constant(double value) { constant_ = value; }

    /// Throws std::invalid_argument unless h_pq = h_qp and h_pqrs = h_srqp
    /// within kMatrixTol (the conditions for a Hermitian operator with real
    /// tensors).
    void validate() const;

private:
    int m_;
    double constant_ = 0.0;
    std::vector<double> h1_; // m^2
    std::vector<double> h2_; // m^4

    std::size_t idx1(int p, int q) const;
    std::size_t idx2(int p, int q, int r, int s) const;
};

/// Maps the Hamiltonian through the Jordan-Wigner transformation and collects
/// terms. The result has real coefficients (the identity term absorbs scalar
/// contributions); non-Hermitian input tensors raise std::invalid_argument.
PauliSum assemble_hamiltonian(const SecondQuantizedHamiltonian& h);

} // namespace qcsim
