/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qcsim/statevector.hpp"

namespace qcsim {

/// Scalar coefficient times a tensor product of Pauli letters.
/// letters[q] is the action on qubit q and is one of 'I', 'X', 'Y', 'Z'.
struct PauliTerm {
    cplx coefficient{1.0, 0.0};
    std::string letters;

    bool is_identity() const;
    int weight() const; // number of non-identity letters

    /// Bit masks of the qubits carrying each letter kind.
    std::uint64_t mask_of(char letter) const;
};

/// Product with the single-qubit multiplication table (XY = iZ, ...).
PauliTerm operator*(const PauliTerm& a, const PauliTerm& b);

/// Linear combination of Pauli strings over a fixed qubit count.
class PauliSum {
public:
    PauliSum() = default;
    explicit PauliSum(int n_qubits);

    static PauliSum identity(int n_qubits, cplx coefficient = 1.0);
    /// coefficient * letter on `qubit`, identity elsewhere.
    static PauliSum single(int n_qubits, int qubit, char letter, cplx coefficient = 1.0);

    int n_qubits() const { return n_qubits_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<PauliTerm>& terms() const { return terms_; }

    void add_term(PauliTerm term);
    PauliSum& operator+=(const PauliSum& other);
    PauliSum operator+(const PauliSum& other) const;
    PauliSum operator*(const PauliSum& other) const;
    PauliSum scaled(cplx factor) const;

    /// Merge duplicate strings (summing coefficients), drop coefficients with
    /// magnitude below `drop_tol`, and sort terms lexicographically by letters.
    void collect(double drop_tol = 1e-13);

    /// True when every collected coefficient is real within `tol`; a Pauli sum
    /// with real coefficients is Hermitian.
    bool is_hermitian(double tol = 1e-12) const;
    double max_abs_imag() const;

    /// Spectral bounds [c_I - S, c_I + S] with S the sum of non-identity
    /// coefficient magnitudes; every eigenvalue lies inside.
    std::pair<double, double> gershgorin_bounds() const;

    std::string to_string() const;

private:
    int n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// <psi|A|psi> for a Hermitian Pauli sum; throws std::invalid_argument when a
/// collected coefficient has imaginary part above kMatrixTol. The result is
/// real within kStateTol by construction.
double expectation(const StateVector& state, const PauliSum& observable);

} // namespace qcsim
