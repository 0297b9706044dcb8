/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qcsim/io.hpp"

namespace qcsim::pipelines {

/// Batch pipelines behind the CLI subcommands. Each validates its full
/// configuration up front (rejecting unknown keys), writes the CSV artifacts
/// under `out_path`, prints summary verdict lines to `out` and warnings to
/// `err`, and throws:
///   std::invalid_argument / qcsim::parse_error  -> validation failure
///   qcsim::resource_error                       -> size-cap violation

void run_pea(io::Config& cfg, std::uint64_t seed, const std::string& out_path, std::ostream& out,
             std::ostream& err);

void run_dynamics(io::Config& cfg, std::uint64_t seed, const std::string& out_path,
                  std::ostream& out, std::ostream& err);

void run_fold(io::Config& cfg, std::uint64_t seed, const std::string& out_path, std::ostream& out,
              std::ostream& err);

void run_qubo(io::Config& cfg, std::uint64_t seed, const std::string& out_path, std::ostream& out,
              std::ostream& err);

void run_cets(io::Config& cfg, std::uint64_t seed, const std::string& out_path, std::ostream& out,
              std::ostream& err);

/// "fold.csv" -> "fold_sweep.csv" (saves the annealing sweep next to the
/// landscape table).
std::string sweep_path_for(const std::string& out_path);

} // namespace qcsim::pipelines
