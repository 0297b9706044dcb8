/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcsim/errors.hpp"

namespace qcsim {

QuboProblem::QuboProblem(int n_spins) : n_(n_spins) {
    if (n_ < 1 || n_ > 24)
        throw std::invalid_argument("QuboProblem: spin count out of range [1, 24]");
    h_.assign(static_cast<std::size_t>(n_), 0.0);
    j_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
}

std::size_t QuboProblem::pair_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw std::invalid_argument("QuboProblem: bad coupling index pair");
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * n_ + j;
}

void QuboProblem::set_field(int i, double h) {
    if (i < 0 || i >= n_) throw std::invalid_argument("QuboProblem: field index out of range");
    h_[static_cast<std::size_t>(i)] = h;
}

void QuboProblem::set_coupling(int i, int j, double value) { j_[pair_index(i, j)] = value; }

double QuboProblem::field(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("QuboProblem: field index out of range");
    return h_[static_cast<std::size_t>(i)];
}

double QuboProblem::coupling(int i, int j) const { return j_[pair_index(i, j)]; }

double QuboProblem::max_abs_coefficient() const {
    double worst = 0.0;
    for (double h : h_) worst = std::max(worst, std::abs(h));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs(coupling(i, j)));
    return worst;
}

void QuboProblem::validate_bounds() const {
    if (max_abs_coefficient() > 1.0 + 1e-12)
        throw std::invalid_argument("QuboProblem: coefficients exceed the unit bound; rescale");
}

RescaledQubo rescale_to_unit(const QuboProblem& raw) {
    const double scale = raw.max_abs_coefficient();
    if (scale == 0.0) return {raw, 1.0};
    QuboProblem out(raw.n_spins());
    for (int i = 0; i < raw.n_spins(); ++i) {
        out.set_field(i, raw.field(i) / scale);
        for (int j = i + 1; j < raw.n_spins(); ++j)
            out.set_coupling(i, j, raw.coupling(i, j) / scale);
    }
    return {out, scale};
}

double qubo_energy(const QuboProblem& p, std::span<const int> spins) {
    if (static_cast<int>(spins.size()) != p.n_spins())
        throw std::invalid_argument("qubo_energy: assignment length mismatch");
    for (int s : spins)
        if (s != 1 && s != -1) throw std::invalid_argument("qubo_energy: spins must be +-1");
    double e = 0.0;
    for (int i = 0; i < p.n_spins(); ++i) {
        e -= p.field(i) * spins[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p.n_spins(); ++j) {
            const double c = p.coupling(i, j);
            if (c != 0.0)
                e += c * spins[static_cast<std::size_t>(i)] * spins[static_cast<std::size_t>(j)];
        }
    }
    return e;
}

int spin_from_bit(std::uint64_t bits, int i) { return ((bits >> i) & 1u) ? -1 : 1; }

std::vector<int> spins_from_bits(std::uint64_t bits, int n) {
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = spin_from_bit(bits, i);
    return s;
}

PauliSum build_final_hamiltonian(const QuboProblem& p) {
    const int n = p.n_spins();
    PauliSum h_f(n);
    for (int i = 0; i < n; ++i) {
        if (p.field(i) != 0.0) h_f += PauliSum::single(n, i, 'Z', -p.field(i));
        for (int j = i + 1; j < n; ++j) {
            const double c = p.coupling(i, j);
            if (c == 0.0) continue;
            std::string letters(static_cast<std::size_t>(n), 'I');
            letters[static_cast<std::size_t>(i)] = 'Z';
            letters[static_cast<std::size_t>(j)] = 'Z';
            PauliSum zz(n);
            zz.add_term({cplx{c, 0.0}, std::move(letters)});
            h_f += zz;
        }
    }
    h_f.collect();
    return h_f;
}

void AnnealSchedule::validate() const {
    if (t_run < 0.0) throw std::invalid_argument("AnnealSchedule: t_run must be >= 0");
    if (!envelopes) throw std::invalid_argument("AnnealSchedule: missing envelope functions");
    const SchedulePoint start = envelopes(0.0);
    const SchedulePoint end = envelopes(1.0);
    if (!(start.a >= 10.0 * start.b))
        throw std::invalid_argument("AnnealSchedule: A(0) must dominate B(0) by 10x");
    if (!(end.b >= 10.0 * end.a))
        throw std::invalid_argument("AnnealSchedule: B(1) must dominate A(1) by 10x");
}

AnnealResult anneal(const QuboProblem& p, const AnnealSchedule& schedule, double dt,
                    SeededRng& rng, int n_samples) {
    schedule.validate();
    const int n = p.n_spins();

    // H_i = -sum_i X_i; the uniform superposition is its ground state.
    PauliSum h_i(n);
    for (int i = 0; i < n; ++i) h_i += PauliSum::single(n, i, 'X', -1.0);
    const PauliSum h_f = build_final_hamiltonian(p);

    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<cplx> uniform(dim, cplx{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
    StateVector state = StateVector::from_amplitudes(n, std::move(uniform));

    if (schedule.t_run > 0.0)
        state = evolve_time_dependent(std::move(state), h_i, h_f, schedule.envelopes,
                                      schedule.t_run, dt, /*order=*/2);

    const BruteForceResult oracle = brute_force_minimize(p);
    double success = 0.0;
    for (std::uint64_t bits : oracle.argmin) success += std::norm(state.amplitude(bits));

    AnnealResult result{std::move(state), success, oracle.min_energy, oracle.argmin, {}};
    if (n_samples > 0) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        for (int s = 0; s < n_samples; ++s) {
            StateVector copy = result.final_state;
            result.samples.push_back(copy.measure(all, rng));
        }
    }
    return result;
}

BruteForceResult brute_force_minimize(const QuboProblem& p, int cap) {
    const int n = p.n_spins();
    if (n > cap)
        throw resource_error("brute_force_minimize: " + std::to_string(n) +
                             " variables exceeds cap of " + std::to_string(cap));

    // Nonzero couplings per spin, for a term-list evaluation.
    std::vector<std::vector<std::pair<int, double>>> couplings(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double c = p.coupling(i, j);
            if (c != 0.0) couplings[static_cast<std::size_t>(i)].push_back({j, c});
        }

    const std::uint64_t dim = std::uint64_t{1} << n;
    BruteForceResult result;
    result.landscape.reserve(dim);
    result.min_energy = std::numeric_limits<double>::infinity();
    for (std::uint64_t bits = 0; bits < dim; ++bits) {
        double e = 0.0;
        for (int i = 0; i < n; ++i) {
            const int si = spin_from_bit(bits, i);
            e -= p.field(i) * si;
            for (const auto& [j, c] : couplings[static_cast<std::size_t>(i)])
                e += c * si * spin_from_bit(bits, j);
        }
        result.landscape.push_back({bits, e});
        result.min_energy = std::min(result.min_energy, e);
    }
    for (const auto& row : result.landscape)
        if (row.energy == result.min_energy) result.argmin.push_back(row.bits);
    std::stable_sort(result.landscape.begin(), result.landscape.end(),
                     [](const LandscapeRow& a, const LandscapeRow& b) {
                         if (a.energy != b.energy) return a.energy < b.energy;
                         return a.bits < b.bits;
                     });
    return result;
}

} // namespace qcsim
