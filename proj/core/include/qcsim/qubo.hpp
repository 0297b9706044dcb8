/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcsim/pauli.hpp"
#include "qcsim/state_prep.hpp"

namespace qcsim {

/// Ising-form objective E(s) = -sum_i h_i s_i + sum_{i<j} J_ij s_i s_j over
/// spins s_i = +-1, with |h_i| <= 1 and |J_ij| <= 1 (validate_bounds).
/// Assignments are packed into bits with bit i = 1 meaning s_i = -1, matching
/// the sigma_z convention |0> -> +1, |1> -> -1.
class QuboProblem {
public:
    explicit QuboProblem(int n_spins);

    int n_spins() const { return n_; }
    void set_field(int i, double h);
    void set_coupling(int i, int j, double value); // i != j, stored unordered
    double field(int i) const;
    double coupling(int i, int j) const;

    double max_abs_coefficient() const;
    /// Throws unless every |h_i| and |J_ij| is <= 1 (tiny slack for rounding).
    void validate_bounds() const;

private:
    int n_;
    std::vector<double> h_;
    std::vector<double> j_; // dense n x n, upper triangle used

    std::size_t pair_index(int i, int j) const;
};

struct RescaledQubo {
    QuboProblem problem;
    double scale; // original coefficients = scale * rescaled coefficients
};

/// Uniform division by the largest coefficient magnitude; minimizer sets are
/// invariant under this positive rescaling.
RescaledQubo rescale_to_unit(const QuboProblem& raw);

double qubo_energy(const QuboProblem& p, std::span<const int> spins);

int spin_from_bit(std::uint64_t bits, int i);
std::vector<int> spins_from_bits(std::uint64_t bits, int n);

/// Diagonal H_f = -sum h_i Z_i + sum_{i<j} J_ij Z_i Z_j; its eigenvalue on a
/// basis state equals qubo_energy of the corresponding assignment.
PauliSum build_final_hamiltonian(const QuboProblem& p);

/// Time envelope for H(tau) = A(tau) H_i + B(tau) H_f. The endpoints must be
/// dominated: A(0) >= 10 B(0) and B(1) >= 10 A(1).
struct AnnealSchedule {
    double t_run = 1.0;
    Schedule envelopes = linear_schedule();

    void validate() const;
};

struct AnnealResult {
    StateVector final_state;
    double success_probability; // Born weight on the exact minimizer set
    double min_energy;
    std::vector<std::uint64_t> minimizers;
    std::vector<MeasurementRecord> samples; // only when n_samples > 0
};

/// Trotterized annealing from the uniform superposition (ground state of
/// H_i = -sum X_i). t_run = 0 returns the initial state (sudden limit). The
/// rng only feeds the optional measurement samples; the evolution itself is
/// deterministic.
AnnealResult anneal(const QuboProblem& p, const AnnealSchedule& schedule, double dt,
                    SeededRng& rng, int n_samples = 0);

struct LandscapeRow {
    std::uint64_t bits = 0;
    double energy = 0.0;
};

struct BruteForceResult {
    double min_energy = 0.0;
    std::vector<std::uint64_t> argmin;     // ascending assignment bits
    std::vector<LandscapeRow> landscape;   // sorted by (energy, bits)
};

/// Exhaustive enumeration; throws resource_error above `cap` variables.
BruteForceResult brute_force_minimize(const QuboProblem& p, int cap = 24);

} // namespace qcsim
