/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/jordan_wigner.hpp"

#include <stdexcept>

namespace qcsim {

PauliSum jordan_wigner(LadderKind kind, int mode, int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("jordan_wigner: need at least one mode");
    if (mode < 0 || mode >= n_modes)
        throw std::invalid_argument("jordan_wigner: mode " + std::to_string(mode) +
                                    " out of range for " + std::to_string(n_modes) + " modes");

    std::string x_letters(static_cast<std::size_t>(n_modes), 'I');
    x_letters[static_cast<std::size_t>(mode)] = 'X';
    std::string y_letters = x_letters;
    y_letters[static_cast<std::size_t>(mode)] = 'Y';
    for (int q = mode + 1; q < n_modes; ++q) {
        x_letters[static_cast<std::size_t>(q)] = 'Z';
        y_letters[static_cast<std::size_t>(q)] = 'Z';
    }

    // sigma^-+ = (X -+ iY)/2
    const cplx y_coeff =
        (kind == LadderKind::Creation) ? cplx{0.0, -0.5} : cplx{0.0, 0.5};
    PauliSum image(n_modes);
    image.add_term({cplx{0.5, 0.0}, std::move(x_letters)});
    image.add_term({y_coeff, std::move(y_letters)});
    return image;
}

PauliSum mode_number_operator(int mode, int n_modes) {
    if (mode < 0 || mode >= n_modes)
        throw std::invalid_argument("mode_number_operator: mode out of range");
    PauliSum n_op = PauliSum::identity(n_modes, 0.5);
    n_op += PauliSum::single(n_modes, mode, 'Z', -0.5);
    return n_op;
}

PauliSum total_number_operator(int n_modes) {
    PauliSum total(n_modes);
    for (int mode = 0; mode < n_modes; ++mode) total += mode_number_operator(mode, n_modes);
    total.collect();
    return total;
}

} // namespace qcsim
