/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/fold.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace qcsim {

namespace {

const char* pair_of(Direction d) {
    switch (d) {
    case Direction::Up: return "11";
    case Direction::Down: return "00";
    case Direction::Left: return "10";
    case Direction::Right: return "01";
    }
    throw std::invalid_argument("unknown direction");
}

Direction direction_of(char a, char b) {
    if (a == '1' && b == '1') return Direction::Up;
    if (a == '0' && b == '0') return Direction::Down;
    if (a == '1' && b == '0') return Direction::Left;
    if (a == '0' && b == '1') return Direction::Right;
    throw std::invalid_argument("directions must be encoded over {0,1}");
}

std::pair<int, int> step_of(Direction d) {
    switch (d) {
    case Direction::Up: return {0, 1};
    case Direction::Down: return {0, -1};
    case Direction::Left: return {-1, 0};
    case Direction::Right: return {1, 0};
    }
    throw std::invalid_argument("unknown direction");
}

// Coefficients of the quartic fold energy over 0-based bond-bit indices.
struct FoldTerm {
    std::array<int, 4> vars; // -1 padding
    int n_vars;
    double coefficient;
};

constexpr FoldTerm kFoldTerms[] = {
    {{-1, -1, -1, -1}, 0, 4.0},  {{0, -1, -1, -1}, 1, -3.0}, {{1, -1, -1, -1}, 1, 4.0},
    {{0, 1, -1, -1}, 2, -4.0},   {{2, -1, -1, -1}, 1, -1.0}, {{0, 2, -1, -1}, 2, 1.0},
    {{1, 2, -1, -1}, 2, -2.0},   {{3, -1, -1, -1}, 1, 4.0},  {{0, 3, -1, -1}, 2, -2.0},
    {{1, 3, -1, -1}, 2, -8.0},   {{0, 1, 3, -1}, 3, 5.0},    {{2, 3, -1, -1}, 2, -2.0},
    {{1, 2, 3, -1}, 3, 5.0},     {{0, 1, 2, 3}, 4, -1.0},
};

} // namespace

std::string encode_fold(std::span<const Direction> directions) {
    if (directions.empty()) throw std::invalid_argument("encode_fold: no bonds");
    if (directions.front() != Direction::Right)
        throw std::invalid_argument("encode_fold: the first bond is fixed to point right");
    std::string bits;
    bits.reserve(directions.size() * 2);
    for (Direction d : directions) bits += pair_of(d);
    return bits;
}

std::vector<Direction> directions_from_bits(std::string_view bits) {
    std::string compact;
    for (char c : bits)
        if (c != ' ') compact += c;
    if (compact.empty() || compact.size() % 2 != 0)
        throw std::invalid_argument("directions_from_bits: need an even number of bits");
    std::vector<Direction> directions;
    for (std::size_t i = 0; i < compact.size(); i += 2)
        directions.push_back(direction_of(compact[i], compact[i + 1]));
    return directions;
}

std::vector<std::pair<int, int>> decode_fold(std::string_view bits) {
    const auto directions = directions_from_bits(bits);
    std::vector<std::pair<int, int>> beads{{0, 0}};
    for (Direction d : directions) {
        const auto [dx, dy] = step_of(d);
        beads.push_back({beads.back().first + dx, beads.back().second + dy});
    }
    return beads;
}

double HpModel::contact_energy(std::size_t i, std::size_t j) const {
    const char a = labels.at(i), b = labels.at(j);
    if (a == 'H' && b == 'H') return e_hh;
    if (a == 'P' && b == 'P') return e_pp;
    return e_hp;
}

std::span<const std::pair<int, int>> chaperone_sites() {
    static const std::pair<int, int> sites[] = {{1, -1}, {2, -1}, {2, 0}};
    return sites;
}

WalkScore score_walk(std::span<const std::pair<int, int>> beads, const HpModel& hp) {
    if (hp.labels.size() != beads.size())
        throw std::invalid_argument("score_walk: one HP label per bead required");
    WalkScore score;
    for (const auto& bead : beads)
        for (const auto& site : chaperone_sites())
            if (bead == site) ++score.chaperone_overlaps;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        for (std::size_t j = i + 1; j < beads.size(); ++j) {
            if (beads[i] == beads[j]) ++score.chain_overlaps;
            if (j == i + 1) continue; // bonded neighbors are not contacts
            const int dist = std::abs(beads[i].first - beads[j].first) +
                             std::abs(beads[i].second - beads[j].second);
            if (dist == 1) score.contact_energy += hp.contact_energy(i, j);
        }
    }
    return score;
}

PuboProblem folding_instance() {
    PuboProblem p(4);
    for (const auto& term : kFoldTerms) {
        std::vector<int> vars;
        for (int k = 0; k < term.n_vars; ++k) vars.push_back(term.vars[static_cast<std::size_t>(k)]);
        p.add_term(std::move(vars), term.coefficient);
    }
    p.collect();
    return p;
}

double fold_energy(const std::array<int, 4>& q) {
    for (int b : q)
        if (b != 0 && b != 1) throw std::invalid_argument("fold_energy: bits must be 0/1");
    double e = 0.0;
    for (const auto& term : kFoldTerms) {
        double prod = term.coefficient;
        for (int k = 0; k < term.n_vars; ++k)
            prod *= q[static_cast<std::size_t>(term.vars[static_cast<std::size_t>(k)])];
        e += prod;
    }
    return e;
}

std::string fold_bit_string(std::uint64_t assignment_bits) {
    std::string bits = "01";
    for (int i = 0; i < 4; ++i) bits += ((assignment_bits >> i) & 1u) ? '1' : '0';
    return bits;
}

std::vector<std::pair<int, int>> fold_walk(std::uint64_t assignment_bits) {
    return decode_fold(fold_bit_string(assignment_bits));
}

} // namespace qcsim
