/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/dense.hpp"

#include <bit>
#include <stdexcept>

#include "qcsim/errors.hpp"

namespace qcsim {

Eigen::MatrixXcd dense_matrix(const PauliSum& sum, int cap) {
    const int n = sum.n_qubits();
    if (n < 1) throw std::invalid_argument("dense_matrix: empty sum has no qubit count");
    if (n > cap)
        throw resource_error("dense_matrix: " + std::to_string(n) + " qubits exceeds cap of " +
                             std::to_string(cap));
    const std::uint64_t dim = std::uint64_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& term : sum.terms()) {
        const std::uint64_t flip = term.mask_of('X') | term.mask_of('Y');
        const std::uint64_t ymask = term.mask_of('Y');
        const std::uint64_t zmask = term.mask_of('Z');
        const cplx base = term.coefficient * i_pow[std::popcount(ymask) & 3];
        for (std::uint64_t x = 0; x < dim; ++x) {
            const bool neg = std::popcount(x & (ymask | zmask)) & 1;
            m(static_cast<Eigen::Index>(x ^ flip), static_cast<Eigen::Index>(x)) +=
                neg ? -base : base;
        }
    }
    return m;
}

EigenSystem diagonalize(const PauliSum& sum, int cap) {
    Eigen::MatrixXcd m = dense_matrix(sum, cap);
    const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-10)
        throw std::invalid_argument("diagonalize: matrix not Hermitian (deviation " +
                                    std::to_string(herm_dev) + ")");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("diagonalize: eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

StateVector ground_state(const PauliSum& sum, int cap) {
    EigenSystem sys = diagonalize(sum, cap);
    return state_from_vector(sys.eigenvectors.col(0), /*renormalize=*/true);
}

Eigen::VectorXcd to_vector(const StateVector& state) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(state.dim()));
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dim(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
    return v;
}

StateVector state_from_vector(const Eigen::VectorXcd& v, bool renormalize) {
    const auto size = static_cast<std::uint64_t>(v.size());
    if (size < 2 || (size & (size - 1)) != 0)
        throw std::invalid_argument("state_from_vector: length must be a power of two >= 2");
    int n = 0;
    while ((std::uint64_t{1} << n) < size) ++n;
    std::vector<cplx> amps(size);
    for (std::uint64_t i = 0; i < size; ++i) amps[i] = v(static_cast<Eigen::Index>(i));
    return StateVector::from_amplitudes(n, std::move(amps), renormalize);
}

void apply_unitary_block(StateVector& state, const Eigen::MatrixXcd& u, int control) {
    const auto block = static_cast<std::uint64_t>(u.rows());
    if (u.rows() != u.cols() || block < 2 || (block & (block - 1)) != 0)
        throw std::invalid_argument("apply_unitary_block: matrix must be square 2^k x 2^k");
    int k = 0;
    while ((std::uint64_t{1} << k) < block) ++k;
    if (k > state.n_qubits())
        throw std::invalid_argument("apply_unitary_block: block wider than register");
    if (control >= 0 && control < k)
        throw std::invalid_argument("apply_unitary_block: control must sit above the block");

    auto amps = state.mutable_amplitudes();
    Eigen::VectorXcd slice(static_cast<Eigen::Index>(block));
    const std::uint64_t n_blocks = state.dim() >> k;
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
        if (control >= 0 && ((b >> (control - k)) & 1u) == 0) continue;
        const std::uint64_t offset = b << k;
        for (std::uint64_t i = 0; i < block; ++i)
            slice(static_cast<Eigen::Index>(i)) = amps[offset + i];
        Eigen::VectorXcd mixed = u * slice;
        for (std::uint64_t i = 0; i < block; ++i)
            amps[offset + i] = mixed(static_cast<Eigen::Index>(i));
    }
}

} // namespace qcsim
