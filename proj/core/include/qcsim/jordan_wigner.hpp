/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include "qcsim/pauli.hpp"

namespace qcsim {

enum class LadderKind { Creation, Annihilation };

/// Jordan-Wigner image of a single fermionic ladder operator on `mode`
/// (0-based) out of `n_modes`. Occupation convention: |1> = occupied, so the
/// creation image is sigma^- = |1><0| = (X - iY)/2 on the mode's qubit,
/// dressed with a trailing Z string on all higher modes. The annihilation
/// image uses sigma^+ = (X + iY)/2.
PauliSum jordan_wigner(LadderKind kind, int mode, int n_modes);

/// Occupation-number operator for one mode: (I - Z)/2 on its qubit.
PauliSum mode_number_operator(int mode, int n_modes);

/// Total particle-number operator: sum of all mode number operators.
PauliSum total_number_operator(int n_modes);

} // namespace qcsim
