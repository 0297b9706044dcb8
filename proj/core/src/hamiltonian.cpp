/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qcsim/jordan_wigner.hpp"

namespace qcsim {

SecondQuantizedHamiltonian::SecondQuantizedHamiltonian(int n_spin_orbitals) : m_(n_spin_orbitals) {
    if (m_ < 1 || m_ > 16)
        throw std::invalid_argument("SecondQuantizedHamiltonian: spin-orbital count " +
                                    std::to_string(m_) + " out of supported range [1, 16]");
    h1_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    h2_.assign(static_cast<std::size_t>(m_) * m_ * m_ * m_, 0.0);
}

std::size_t SecondQuantizedHamiltonian::idx1(int p, int q) const {
    if (p < 0 || p >= m_ || q < 0 || q >= m_)
        throw std::invalid_argument("one-body index out of range");
    return static_cast<std::size_t>(p) * m_ + q;
}

std::size_t SecondQuantizedHamiltonian::idx2(int p, int q, int r, int s) const {
    for (int i : {p, q, r, s})
        if (i < 0 || i >= m_) throw std::invalid_argument("two-body index out of range");
    return ((static_cast<std::size_t>(p) * m_ + q) * m_ + r) * m_ + s;
}

double SecondQuantizedHamiltonian::one_body(int p, int q) const { return h1_[idx1(p, q)]; }
void SecondQuantizedHamiltonian::set_one_body(int p, int q, double value) { h1_[idx1(p, q)] = value; }

double SecondQuantizedHamiltonian::two_body(int p, int q, int r, int s) const {
    return h2_[idx2(p, q, r, s)];
}
void SecondQuantizedHamiltonian::set_two_body(int p, int q, int r, int s, double value) {
    h2_[idx2(p, q, r, s)] = value;
}

void SecondQuantizedHamiltonian::validate() const {
    for (int p = 0; p < m_; ++p)
        for (int q = 0; q < m_; ++q)
            if (std::abs(one_body(p, q) - one_body(q, p)) > kMatrixTol)
                throw std::invalid_argument("one-body tensor not symmetric at (" +
                                            std::to_string(p) + "," + std::to_string(q) + ")");
    for (int p = 0; p < m_; ++p)
        for (int q = 0; q < m_; ++q)
            for (int r = 0; r < m_; ++r)
                for (int s = 0; s < m_; ++s)
                    if (std::abs(two_body(p, q, r, s) - two_body(s, r, q, p)) > kMatrixTol)
                        throw std::invalid_argument(
                            "two-body tensor breaks Hermiticity at (" + std::to_string(p) + "," +
                            std::to_string(q) + "," + std::to_string(r) + "," + std::to_string(s) +
                            ")");
}

PauliSum assemble_hamiltonian(const SecondQuantizedHamiltonian& h) {
    h.validate();
    const int m = h.n_spin_orbitals();
    PauliSum total(m);

    std::vector<PauliSum> create(static_cast<std::size_t>(m));
    std::vector<PauliSum> annihilate(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        create[static_cast<std::size_t>(i)] = jordan_wigner(LadderKind::Creation, i, m);
        annihilate[static_cast<std::size_t>(i)] = jordan_wigner(LadderKind::Annihilation, i, m);
    }

    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const double c = h.one_body(p, q);
            if (c == 0.0) continue;
            total += (create[static_cast<std::size_t>(p)] * annihilate[static_cast<std::size_t>(q)])
                         .scaled(c);
        }

    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            if (p == q) continue; // a+_p a+_p = 0
            PauliSum left =
                create[static_cast<std::size_t>(p)] * create[static_cast<std::size_t>(q)];
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s) {
                    if (r == s) continue;
                    const double c = h.two_body(p, q, r, s);
                    if (c == 0.0) continue;
                    total += (left * annihilate[static_cast<std::size_t>(r)] *
                              annihilate[static_cast<std::size_t>(s)])
                                 .scaled(0.5 * c);
                }
        }

    if (h.constant() != 0.0) total += PauliSum::identity(m, h.constant());

    total.collect();
    if (total.max_abs_imag() > kMatrixTol)
        throw std::invalid_argument("assemble_hamiltonian: collected coefficients not real");
    // Drop the now-irrelevant imaginary dust so downstream code sees a
    // manifestly Hermitian sum.
    PauliSum real_sum(m);
    for (const auto& t : total.terms())
        real_sum.add_term({cplx{t.coefficient.real(), 0.0}, t.letters});
    real_sum.collect();
    return real_sum;
}

} // namespace qcsim
