/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "qcsim/pubo.hpp"

namespace qcsim {

/// 2D lattice walk directions with the bit-pair encoding
/// up = "11", down = "00", left = "10", right = "01".
enum class Direction { Right, Up, Left, Down };

/// Bond list -> bit string ("01" for the fixed first bond, then one pair per
/// bond). The first direction must be Right.
std::string encode_fold(std::span<const Direction> directions);

/// Bit string -> bond directions; spaces between pairs are accepted.
std::vector<Direction> directions_from_bits(std::string_view bits);

/// Bit string -> bead coordinates on Z^2 starting at (0,0).
std::vector<std::pair<int, int>> decode_fold(std::string_view bits);

/// Free-energy penalty per bead overlapping the chaperone region.
inline constexpr double kChaperonePenalty = 4.0;
/// Free-energy penalty per coinciding bead pair (chain self-overlap).
inline constexpr double kChainOverlapPenalty = 2.0;

/// Hydrophobic/polar residue labels with the standard contact energies
/// E_HH = -1, E_HP = E_PP = 0.
struct HpModel {
    std::string labels; // 'H' or 'P' per residue

    double e_hh = -1.0;
    double e_hp = 0.0;
    double e_pp = 0.0;

    double contact_energy(std::size_t i, std::size_t j) const;
};

/// Lattice cells blocked by the chaperone molecule for the built-in
/// four-residue instance: the region below and right of the stretched chain
/// that forbids the clockwise fold, {(1,-1), (2,-1), (2,0)}.
std::span<const std::pair<int, int>> chaperone_sites();

struct WalkScore {
    int chaperone_overlaps = 0;
    int chain_overlaps = 0;    // coinciding bead pairs
    double contact_energy = 0; // non-bonded nearest-neighbor contacts

    double total() const {
        return kChaperonePenalty * chaperone_overlaps + kChainOverlapPenalty * chain_overlaps +
               contact_energy;
    }
};

/// Scores a walk against the chaperone region and the HP contact model.
WalkScore score_walk(std::span<const std::pair<int, int>> beads, const HpModel& hp);

/// The quartic free-energy polynomial of the chaperone-assisted four-residue
/// fold over the bond bits (q1, q2, q3, q4) = bits 0..3:
///
///   E = 4 - 3 q1 + 4 q2 - 4 q1 q2 - q3 + q1 q3 - 2 q2 q3 + 4 q4
///       - 2 q1 q4 - 8 q2 q4 + 5 q1 q2 q4 - 2 q3 q4 + 5 q2 q3 q4
///       - q1 q2 q3 q4
PuboProblem folding_instance();

/// Direct evaluation of the same polynomial.
double fold_energy(const std::array<int, 4>& q);

/// Assignment bits -> the full bond bit string "01 q1q2 q3q4" (no spaces).
std::string fold_bit_string(std::uint64_t assignment_bits);

/// Bead coordinates of an assignment: first bond right, second bond (q1,q2),
/// third bond (q3,q4).
std::vector<std::pair<int, int>> fold_walk(std::uint64_t assignment_bits);

} // namespace qcsim
