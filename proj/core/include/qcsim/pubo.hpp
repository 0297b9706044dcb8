/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include "qcsim/qubo.hpp"

namespace qcsim {

struct PuboTerm {
    std::vector<int> vars; // sorted ascending, unique; empty = constant
    double coefficient = 0.0;
};

/// Polynomial over binary variables q_i in {0, 1}:
/// E(q) = sum over terms of coefficient * prod_{i in vars} q_i.
/// Assignments are packed with bit i = q_i.
class PuboProblem {
public:
    explicit PuboProblem(int n_vars);

    int n_vars() const { return n_; }
    int degree() const;
    const std::vector<PuboTerm>& terms() const { return terms_; }

    /// Variables are deduplicated and sorted; duplicate subsets across calls
    /// are merged by collect().
    void add_term(std::vector<int> vars, double coefficient);
    /// Merge duplicate subsets and drop zero coefficients.
    void collect();

    double energy(std::uint64_t assignment_bits) const;

private:
    int n_;
    std::vector<PuboTerm> terms_;
};

struct AncillaSubstitution {
    int ancilla; // new variable index
    int var_a;   // the replaced product q_a q_b
    int var_b;
    double penalty;
};

/// Result of quadratizing a PUBO and casting it into the unit-bounded spin
/// form: for any assignment of the original variables, extending with the
/// penalty-consistent ancilla values satisfies
///   pubo(q) = energy_scale * E_qubo(s(q_ext)) + energy_offset,
/// and every penalty violation costs more than the spread of the terms it
/// touches, so minimizers survive the reduction.
struct QuboReduction {
    QuboProblem qubo; // rescaled, n_original + ancillas spins
    double energy_scale = 1.0;
    double energy_offset = 0.0;
    int n_original = 0;
    std::vector<AncillaSubstitution> ancillas;

    int n_reduced() const { return n_original + static_cast<int>(ancillas.size()); }
    /// Strip ancilla bits off a reduced assignment.
    std::uint64_t project(std::uint64_t reduced_bits) const;
    /// Consistent completion: each ancilla takes the value of its product.
    std::uint64_t extend(std::uint64_t original_bits) const;
    /// energy_scale * E_qubo + energy_offset at a reduced assignment.
    double reduced_energy(std::uint64_t reduced_bits) const;
};

/// Rosenberg-style quadratization for polynomials of degree <= 4: repeatedly
/// substitutes the most frequent variable pair in the cubic-and-above terms
/// with an ancilla, adding the penalty
///   P (q_a q_b - 2 q_a z - 2 q_b z + 3 z),
/// P = 1 + sum of |coefficients| of the substituted terms. The spin form is
/// rescaled by the next power of two above the largest coefficient magnitude
/// (an exact division, so degenerate minimizers stay degenerate). Throws
/// std::invalid_argument above degree 4.
QuboReduction reduce_to_qubo(const PuboProblem& p);

/// Exhaustive enumeration; throws resource_error above `cap` variables.
BruteForceResult brute_force_minimize(const PuboProblem& p, int cap = 24);

} // namespace qcsim
