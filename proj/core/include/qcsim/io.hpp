/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcsim/hamiltonian.hpp"
#include "qcsim/phase_estimation.hpp"
#include "qcsim/pubo.hpp"

namespace qcsim::io {

/// Integrals file: blank lines and '#' comments allowed, then
///   M <count>
///   1e p q value
///   2e p q r s value
/// with 1-based spin-orbital indices and values in Hartree. Setting an entry
/// also sets its Hermitian partner (q p, resp. s r q p); re-setting either to
/// a different value is an error. Unspecified entries are zero.
SecondQuantizedHamiltonian parse_integrals(std::istream& in);
SecondQuantizedHamiltonian parse_integrals_file(const std::filesystem::path& path);

/// QUBO/PUBO file over binary variables: header "vars N" then term lines
///   c i j ... coeff
/// with strictly ascending 1-based indices (none for a constant term).
PuboProblem parse_pubo(std::istream& in);
PuboProblem parse_pubo_file(const std::filesystem::path& path);

/// Shortest decimal form that round-trips a double exactly (17 significant
/// digits).
std::string format_g17(double value);

/// Comma-separated CSV with a header row and LF line endings; numeric cells
/// are serialized with format_g17.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& cells);
    static std::string cell(double value) { return format_g17(value); }

private:
    std::ostream& out_;
    std::size_t columns_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(std::istream& in);

/// Flat "key = value" configuration, one pair per line, '#' comments.
/// Accessors mark keys as consumed; require_all_consumed() rejects leftovers
/// so typos fail loudly before any computation starts.
class Config {
public:
    static Config parse(std::istream& in);
    static Config parse_file(const std::filesystem::path& path);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key);
    std::string get_string(const std::string& key, const std::string& fallback);
    double get_double(const std::string& key, double lo, double hi);
    double get_double(const std::string& key, double lo, double hi, double fallback);
    long long get_int(const std::string& key, long long lo, long long hi);
    long long get_int(const std::string& key, long long lo, long long hi, long long fallback);
    std::vector<std::string> get_list(const std::string& key);
    std::vector<std::string> get_list(const std::string& key,
                                      const std::vector<std::string>& fallback);
    std::vector<double> get_double_list(const std::string& key);
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback);

    void require_all_consumed() const;

private:
    std::map<std::string, std::string> values_;
    std::set<std::string> consumed_;

    const std::string* lookup(const std::string& key);
};

/// Spectral lines as CSV rows (bits, phase, energy, weight).
void write_spectral_csv(std::ostream& out, const SpectralResult& result);

/// Test-fixture amplitude vectors: one "re im" pair per line.
std::vector<cplx> read_amplitudes(std::istream& in);

} // namespace qcsim::io
