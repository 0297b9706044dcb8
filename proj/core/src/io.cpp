/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcsim/errors.hpp"

namespace qcsim::io {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_double(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw parse_error("expected a number, got '" + tok + "'", line_no);
    }
}

long long parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + tok + "'", line_no);
    }
}

std::ifstream open_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path.string());
    return in;
}

// Lines stripped of comments, paired with their 1-based numbers.
std::vector<std::pair<int, std::vector<std::string>>> content_lines(std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = tokenize(line);
        if (!tokens.empty()) out.push_back({line_no, std::move(tokens)});
    }
    return out;
}

} // namespace

SecondQuantizedHamiltonian parse_integrals(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw parse_error("missing 'M <count>' header", 1);

    const auto& [header_no, header] = lines.front();
    if (header.size() != 2 || header[0] != "M")
        throw parse_error("expected header 'M <count>'", header_no);
    const long long m = parse_int(header[1], header_no);
    if (m < 1 || m > 16) throw parse_error("spin-orbital count out of range [1, 16]", header_no);

    SecondQuantizedHamiltonian h(static_cast<int>(m));
    std::set<std::pair<int, int>> set1;
    std::set<std::array<int, 4>> set2;

    auto check_index = [m](long long idx, int line_no) {
        if (idx < 1 || idx > m)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": index " +
                                        std::to_string(idx) + " exceeds M=" + std::to_string(m));
        return static_cast<int>(idx - 1);
    };

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& [line_no, tok] = lines[li];
        if (tok[0] == "1e") {
            if (tok.size() != 4) throw parse_error("expected '1e p q value'", line_no);
            const int p = check_index(parse_int(tok[1], line_no), line_no);
            const int q = check_index(parse_int(tok[2], line_no), line_no);
            const double v = parse_double(tok[3], line_no);
            if (set1.count({p, q}) && std::abs(h.one_body(p, q) - v) > 1e-12)
                throw parse_error("entry (" + tok[1] + "," + tok[2] +
                                      ") conflicts with its symmetric partner",
                                  line_no);
            h.set_one_body(p, q, v);
            h.set_one_body(q, p, v);
            set1.insert({p, q});
            set1.insert({q, p});
        } else if (tok[0] == "2e") {
            if (tok.size() != 6) throw parse_error("expected '2e p q r s value'", line_no);
            const int p = check_index(parse_int(tok[1], line_no), line_no);
            const int q = check_index(parse_int(tok[2], line_no), line_no);
            const int r = check_index(parse_int(tok[3], line_no), line_no);
            const int s = check_index(parse_int(tok[4], line_no), line_no);
            const double v = parse_double(tok[5], line_no);
            if (set2.count({p, q, r, s}) && std::abs(h.two_body(p, q, r, s) - v) > 1e-12)
                throw parse_error("two-electron entry conflicts with its Hermitian partner",
                                  line_no);
            h.set_two_body(p, q, r, s, v);
            h.set_two_body(s, r, q, p, v);
            set2.insert({p, q, r, s});
            set2.insert({s, r, q, p});
        } else {
            throw parse_error("unknown record '" + tok[0] + "' (expected 1e or 2e)", line_no);
        }
    }
    h.validate();
    return h;
}

SecondQuantizedHamiltonian parse_integrals_file(const std::filesystem::path& path) {
    auto in = open_file(path);
    return parse_integrals(in);
}

PuboProblem parse_pubo(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw parse_error("missing 'vars N' header", 1);

    const auto& [header_no, header] = lines.front();
    if (header.size() != 2 || header[0] != "vars")
        throw parse_error("expected header 'vars <count>'", header_no);
    const long long n = parse_int(header[1], header_no);
    if (n < 1 || n > 24) throw parse_error("variable count out of range [1, 24]", header_no);

    PuboProblem p(static_cast<int>(n));
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& [line_no, tok] = lines[li];
        if (tok[0] != "c") throw parse_error("expected term line starting with 'c'", line_no);
        if (tok.size() < 2) throw parse_error("term line needs a coefficient", line_no);
        std::vector<int> vars;
        for (std::size_t k = 1; k + 1 < tok.size(); ++k) {
            const long long idx = parse_int(tok[k], line_no);
            if (idx < 1 || idx > n)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": index " +
                                            std::to_string(idx) + " exceeds vars=" +
                                            std::to_string(n));
            if (!vars.empty() && static_cast<int>(idx - 1) <= vars.back())
                throw parse_error("indices must be strictly ascending", line_no);
            vars.push_back(static_cast<int>(idx - 1));
        }
        p.add_term(std::move(vars), parse_double(tok.back(), line_no));
    }
    p.collect();
    return p;
}

PuboProblem parse_pubo_file(const std::filesystem::path& path) {
    auto in = open_file(path);
    return parse_pubo(in);
}

std::string format_g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), columns_(header.size()) {
    if (header.empty()) throw std::invalid_argument("CsvWriter: empty header");
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::invalid_argument("CsvWriter: expected " + std::to_string(columns_) +
                                    " cells, got " + std::to_string(cells.size()));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.eof()) break;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream is(line);
        while (std::getline(is, cell, ',')) cells.push_back(cell);
        if (line.empty()) cells.clear();
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

Config Config::parse(std::istream& in) {
    Config cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value'", line_no);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw parse_error("empty key", line_no);
        if (cfg.values_.count(key)) throw parse_error("duplicate key '" + key + "'", line_no);
        cfg.values_[key] = value;
    }
    return cfg;
}

Config Config::parse_file(const std::filesystem::path& path) {
    auto in = open_file(path);
    return parse(in);
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

const std::string* Config::lookup(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) return nullptr;
    consumed_.insert(key);
    return &it->second;
}

std::string Config::get_string(const std::string& key) {
    const std::string* v = lookup(key);
    if (!v) throw std::invalid_argument("config: missing required key '" + key + "'");
    return *v;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) {
    const std::string* v = lookup(key);
    return v ? *v : fallback;
}

double Config::get_double(const std::string& key, double lo, double hi) {
    const std::string raw = get_string(key);
    double v = 0.0;
    try {
        v = parse_double(raw, 0);
    } catch (const parse_error&) {
        throw std::invalid_argument("config: '" + key + "' is not a number: " + raw);
    }
    if (v < lo || v > hi)
        throw std::invalid_argument("config: '" + key + "' = " + raw + " outside [" +
                                    format_g17(lo) + ", " + format_g17(hi) + "]");
    return v;
}

double Config::get_double(const std::string& key, double lo, double hi, double fallback) {
    return has(key) ? get_double(key, lo, hi) : (consumed_.insert(key), fallback);
}

long long Config::get_int(const std::string& key, long long lo, long long hi) {
    const std::string raw = get_string(key);
    long long v = 0;
    try {
        v = parse_int(raw, 0);
    } catch (const parse_error&) {
        throw std::invalid_argument("config: '" + key + "' is not an integer: " + raw);
    }
    if (v < lo || v > hi)
        throw std::invalid_argument("config: '" + key + "' = " + raw + " outside [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

long long Config::get_int(const std::string& key, long long lo, long long hi, long long fallback) {
    return has(key) ? get_int(key, lo, hi) : (consumed_.insert(key), fallback);
}

std::vector<std::string> Config::get_list(const std::string& key) {
    const std::string raw = get_string(key);
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(raw);
    while (std::getline(is, item, ',')) {
        const std::string t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    if (out.empty()) throw std::invalid_argument("config: '" + key + "' has no entries");
    return out;
}

std::vector<std::string> Config::get_list(const std::string& key,
                                          const std::vector<std::string>& fallback) {
    return has(key) ? get_list(key) : (consumed_.insert(key), fallback);
}

std::vector<double> Config::get_double_list(const std::string& key) {
    std::vector<double> out;
    for (const auto& item : get_list(key)) {
        try {
            out.push_back(parse_double(item, 0));
        } catch (const parse_error&) {
            throw std::invalid_argument("config: '" + key + "' entry is not a number: " + item);
        }
    }
    return out;
}

std::vector<double> Config::get_double_list(const std::string& key,
                                            const std::vector<double>& fallback) {
    return has(key) ? get_double_list(key) : (consumed_.insert(key), fallback);
}

void Config::require_all_consumed() const {
    std::string unknown;
    for (const auto& [key, value] : values_)
        if (!consumed_.count(key)) unknown += (unknown.empty() ? "" : ", ") + key;
    if (!unknown.empty())
        throw std::invalid_argument("config: unknown keys: " + unknown);
}

void write_spectral_csv(std::ostream& out, const SpectralResult& result) {
    CsvWriter csv(out, {"bits", "phase", "energy", "weight"});
    for (const auto& line : result.lines)
        csv.row({std::to_string(line.bits), format_g17(line.phase), format_g17(line.energy),
                 format_g17(line.weight)});
}

std::vector<cplx> read_amplitudes(std::istream& in) {
    std::vector<cplx> amps;
    const auto lines = content_lines(in);
    for (const auto& [line_no, tok] : lines) {
        if (tok.size() != 2) throw parse_error("expected 're im'", line_no);
        amps.emplace_back(parse_double(tok[0], line_no), parse_double(tok[1], line_no));
    }
    return amps;
}

} // namespace qcsim::io
