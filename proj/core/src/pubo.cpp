/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/pubo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "qcsim/errors.hpp"

namespace qcsim {

PuboProblem::PuboProblem(int n_vars) : n_(n_vars) {
    if (n_ < 1 || n_ > 24)
        throw std::invalid_argument("PuboProblem: variable count out of range [1, 24]");
}

int PuboProblem::degree() const {
    std::size_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.vars.size());
    return static_cast<int>(d);
}

void PuboProblem::add_term(std::vector<int> vars, double coefficient) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end()); // q_i^2 = q_i
    for (int v : vars)
        if (v < 0 || v >= n_)
            throw std::invalid_argument("PuboProblem: variable index " + std::to_string(v) +
                                        " out of range");
    terms_.push_back({std::move(vars), coefficient});
}

void PuboProblem::collect() {
    std::map<std::vector<int>, double> merged;
    for (const auto& t : terms_) merged[t.vars] += t.coefficient;
    terms_.clear();
    for (auto& [vars, coeff] : merged)
        if (coeff != 0.0) terms_.push_back({vars, coeff});
}

double PuboProblem::energy(std::uint64_t assignment_bits) const {
    double e = 0.0;
    for (const auto& t : terms_) {
        bool active = true;
        for (int v : t.vars)
            if (((assignment_bits >> v) & 1u) == 0) {
                active = false;
                break;
            }
        if (active) e += t.coefficient;
    }
    return e;
}

std::uint64_t QuboReduction::project(std::uint64_t reduced_bits) const {
    return reduced_bits & ((std::uint64_t{1} << n_original) - 1);
}

std::uint64_t QuboReduction::extend(std::uint64_t original_bits) const {
    std::uint64_t bits = original_bits & ((std::uint64_t{1} << n_original) - 1);
    // Substitutions are recorded in creation order, so chained pairs only
    // reference bits fixed earlier.
    for (const auto& sub : ancillas) {
        const std::uint64_t qa = (bits >> sub.var_a) & 1u;
        const std::uint64_t qb = (bits >> sub.var_b) & 1u;
        bits |= (qa & qb) << sub.ancilla;
    }
    return bits;
}

double QuboReduction::reduced_energy(std::uint64_t reduced_bits) const {
    const auto spins = spins_from_bits(reduced_bits, qubo.n_spins());
    return energy_scale * qubo_energy(qubo, spins) + energy_offset;
}

QuboReduction reduce_to_qubo(const PuboProblem& p) {
    PuboProblem work = p;
    work.collect();
    if (work.degree() > 4)
        throw std::invalid_argument("reduce_to_qubo: degree " + std::to_string(work.degree()) +
                                    " unsupported (max 4)");

    std::vector<AncillaSubstitution> ancillas;

    // Mutable term list over a growing variable set.
    std::vector<PuboTerm> terms = work.terms();
    int n_total = p.n_vars();

    auto max_degree = [&terms] {
        std::size_t d = 0;
        for (const auto& t : terms) d = std::max(d, t.vars.size());
        return static_cast<int>(d);
    };

    while (max_degree() >= 3) {
        // Most frequent pair among the degree >= 3 terms; ties break toward
        // the lexicographically smallest pair for determinism.
        std::map<std::pair<int, int>, int> pair_count;
        for (const auto& t : terms) {
            if (t.vars.size() < 3) continue;
            for (std::size_t a = 0; a < t.vars.size(); ++a)
                for (std::size_t b = a + 1; b < t.vars.size(); ++b)
                    ++pair_count[{t.vars[a], t.vars[b]}];
        }
        std::pair<int, int> best{-1, -1};
        int best_count = 0;
        for (const auto& [pair, count] : pair_count)
            if (count > best_count) {
                best = pair;
                best_count = count;
            }

        double involved = 0.0;
        for (const auto& t : terms) {
            if (t.vars.size() < 3) continue;
            if (std::binary_search(t.vars.begin(), t.vars.end(), best.first) &&
                std::binary_search(t.vars.begin(), t.vars.end(), best.second))
                involved += std::abs(t.coefficient);
        }
        const double penalty = 1.0 + involved;
        const int z = n_total++;

        for (auto& t : terms) {
            if (t.vars.size() < 3) continue;
            if (std::binary_search(t.vars.begin(), t.vars.end(), best.first) &&
                std::binary_search(t.vars.begin(), t.vars.end(), best.second)) {
                std::vector<int> vars;
                for (int v : t.vars)
                    if (v != best.first && v != best.second) vars.push_back(v);
                vars.push_back(z);
                t.vars = std::move(vars); // stays sorted: z is the largest index
            }
        }
        terms.push_back({{best.first, best.second}, penalty});
        terms.push_back({{best.first, z}, -2.0 * penalty});
        terms.push_back({{best.second, z}, -2.0 * penalty});
        terms.push_back({{z}, 3.0 * penalty});
        ancillas.push_back({z, best.first, best.second, penalty});
    }

    // Collect the quadratic polynomial.
    std::map<std::vector<int>, double> quad;
    for (const auto& t : terms) quad[t.vars] += t.coefficient;

    // Substitute q_i = (1 - s_i)/2 into c0 + sum a_i q_i + sum b_ij q_i q_j:
    //   E = C - sum H_i s_i + sum G_ij s_i s_j
    //   C = c0 + sum a_i/2 + sum b_ij/4
    //   H_i = a_i/2 + sum_j b_ij/4,   G_ij = b_ij/4
    double c0 = 0.0;
    std::vector<double> h(static_cast<std::size_t>(n_total), 0.0);
    QuboProblem raw(n_total);
    for (const auto& [vars, coeff] : quad) {
        if (vars.empty()) {
            c0 += coeff;
        } else if (vars.size() == 1) {
            c0 += coeff / 2.0;
            h[static_cast<std::size_t>(vars[0])] += coeff / 2.0;
        } else {
            c0 += coeff / 4.0;
            h[static_cast<std::size_t>(vars[0])] += coeff / 4.0;
            h[static_cast<std::size_t>(vars[1])] += coeff / 4.0;
            raw.set_coupling(vars[0], vars[1], raw.coupling(vars[0], vars[1]) + coeff / 4.0);
        }
    }
    for (int i = 0; i < n_total; ++i) raw.set_field(i, h[static_cast<std::size_t>(i)]);

    // Scale by the next power of two above the largest magnitude: the bounds
    // |h|, |J| <= 1 still hold and the division is exact in floating point,
    // so energy ties between equivalent assignments survive the reduction.
    const double max_mag = raw.max_abs_coefficient();
    double scale = 1.0;
    if (max_mag > 0.0) {
        scale = std::exp2(std::ceil(std::log2(max_mag)));
        if (scale < max_mag) scale *= 2.0; // guards log2 rounding at the seam
    }
    QuboProblem rescaled(n_total);
    for (int i = 0; i < n_total; ++i) {
        rescaled.set_field(i, raw.field(i) / scale);
        for (int j = i + 1; j < n_total; ++j)
            rescaled.set_coupling(i, j, raw.coupling(i, j) / scale);
    }
    return QuboReduction{std::move(rescaled), scale, c0, p.n_vars(), std::move(ancillas)};
}

BruteForceResult brute_force_minimize(const PuboProblem& p, int cap) {
    const int n = p.n_vars();
    if (n > cap)
        throw resource_error("brute_force_minimize: " + std::to_string(n) +
                             " variables exceeds cap of " + std::to_string(cap));
    PuboProblem collected = p;
    collected.collect();

    const std::uint64_t dim = std::uint64_t{1} << n;
    BruteForceResult result;
    result.landscape.reserve(dim);
    result.min_energy = std::numeric_limits<double>::infinity();
    for (std::uint64_t bits = 0; bits < dim; ++bits) {
        const double e = collected.energy(bits);
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
