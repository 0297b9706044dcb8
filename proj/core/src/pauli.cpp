/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcsim {

namespace {

bool valid_letter(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

// Single-qubit product a*b = phase * letter.
void letter_product(char a, char b, char& out, cplx& phase) {
    if (a == 'I') { out = b; return; }
    if (b == 'I') { out = a; return; }
    if (a == b) { out = 'I'; return; }
    // cyclic: XY=iZ, YZ=iX, ZX=iY; reversed order flips the sign
    constexpr cplx plus_i{0.0, 1.0};
    constexpr cplx minus_i{0.0, -1.0};
    auto cyc = [](char x, char y) {
        return (x == 'X' && y == 'Y') || (x == 'Y' && y == 'Z') || (x == 'Z' && y == 'X');
    };
    if (cyc(a, b)) {
        phase *= plus_i;
    } else {
        phase *= minus_i;
    }
    out = "XYZ"[3 - ((a - 'X') + (b - 'X'))]; // the remaining letter
}

} // namespace

bool PauliTerm::is_identity() const {
    return letters.find_first_not_of('I') == std::string::npos;
}

int PauliTerm::weight() const {
    int w = 0;
    for (char c : letters)
        if (c != 'I') ++w;
    return w;
}

std::uint64_t PauliTerm::mask_of(char letter) const {
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < letters.size(); ++q)
        if (letters[q] == letter) mask |= std::uint64_t{1} << q;
    return mask;
}

PauliTerm operator*(const PauliTerm& a, const PauliTerm& b) {
    if (a.letters.size() != b.letters.size())
        throw std::invalid_argument("PauliTerm product: length mismatch");
    PauliTerm out;
    out.coefficient = a.coefficient * b.coefficient;
    out.letters.resize(a.letters.size());
    for (std::size_t q = 0; q < a.letters.size(); ++q)
        letter_product(a.letters[q], b.letters[q], out.letters[q], out.coefficient);
    return out;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("PauliSum: qubit count must be positive");
}

PauliSum PauliSum::identity(int n_qubits, cplx coefficient) {
    PauliSum s(n_qubits);
    s.add_term({coefficient, std::string(static_cast<std::size_t>(n_qubits), 'I')});
    return s;
}

PauliSum PauliSum::single(int n_qubits, int qubit, char letter, cplx coefficient) {
    if (qubit < 0 || qubit >= n_qubits)
        throw std::invalid_argument("PauliSum::single: qubit out of range");
    PauliSum s(n_qubits);
    std::string letters(static_cast<std::size_t>(n_qubits), 'I');
    letters[static_cast<std::size_t>(qubit)] = letter;
    s.add_term({coefficient, std::move(letters)});
    return s;
}

void PauliSum::add_term(PauliTerm term) {
    if (n_qubits_ == 0) n_qubits_ = static_cast<int>(term.letters.size());
    if (term.letters.size() != static_cast<std::size_t>(n_qubits_))
        throw std::invalid_argument("add_term: string length " +
                                    std::to_string(term.letters.size()) + " != qubit count " +
                                    std::to_string(n_qubits_));
    for (char c : term.letters)
        if (!valid_letter(c))
            throw std::invalid_argument(std::string("add_term: invalid letter '") + c + "'");
    terms_.push_back(std::move(term));
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
    if (other.empty()) return *this;
    if (n_qubits_ == 0) n_qubits_ = other.n_qubits_;
    if (other.n_qubits_ != n_qubits_)
        throw std::invalid_argument("PauliSum +=: qubit count mismatch");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
    PauliSum out = *this;
    out += other;
    return out;
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
    if (other.n_qubits_ != n_qubits_)
        throw std::invalid_argument("PauliSum *: qubit count mismatch");
    PauliSum out(n_qubits_);
    out.terms_.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) out.terms_.push_back(a * b);
    return out;
}

PauliSum PauliSum::scaled(cplx factor) const {
    PauliSum out = *this;
    for (auto& t : out.terms_) t.coefficient *= factor;
    return out;
}

void PauliSum::collect(double drop_tol) {
    std::map<std::string, cplx> merged;
    for (const auto& t : terms_) merged[t.letters] += t.coefficient;
    terms_.clear();
    for (auto& [letters, coeff] : merged)
        if (std::abs(coeff) > drop_tol) terms_.push_back({coeff, letters});
}

bool PauliSum::is_hermitian(double tol) const {
    PauliSum copy = *this;
    copy.collect(0.0);
    return copy.max_abs_imag() <= tol;
}

double PauliSum::max_abs_imag() const {
    double worst = 0.0;
    for (const auto& t : terms_) worst = std::max(worst, std::abs(t.coefficient.imag()));
    return worst;
}

std::pair<double, double> PauliSum::gershgorin_bounds() const {
    double center = 0.0, spread = 0.0;
    PauliSum copy = *this;
    copy.collect();
    for (const auto& t : copy.terms()) {
        if (t.is_identity())
            center += t.coefficient.real();
        else
            spread += std::abs(t.coefficient);
    }
    return {center - spread, center + spread};
}

std::string PauliSum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coefficient.real();
        if (t.coefficient.imag() != 0.0) os << (t.coefficient.imag() < 0 ? "" : "+") << t.coefficient.imag() << "i";
        os << ")*" << t.letters;
    }
    if (first) os << "0";
    return os.str();
}

double expectation(const StateVector& state, const PauliSum& observable) {
    if (!observable.empty() && observable.n_qubits() != state.n_qubits())
        throw std::invalid_argument("expectation: observable qubit count mismatch");
    PauliSum collected = observable;
    collected.collect();
    if (collected.max_abs_imag() > kMatrixTol)
        throw std::invalid_argument("expectation: observable is not Hermitian (imag coefficient " +
                                    std::to_string(collected.max_abs_imag()) + ")");

    const auto amps = state.amplitudes();
    const std::uint64_t n = state.dim();
    cplx acc{0.0, 0.0};
    for (const auto& term : collected.terms()) {
        const std::uint64_t flip = term.mask_of('X') | term.mask_of('Y');
        const std::uint64_t ymask = term.mask_of('Y');
        const std::uint64_t zmask = term.mask_of('Z');
        const int y_count = std::popcount(ymask);
        // P|x> = i^{y_count} (-1)^{popcount(x & (Y|Z masks))} |x ^ flip>
        cplx term_acc{0.0, 0.0};
        for (std::uint64_t x = 0; x < n; ++x) {
            const int sign_bits = std::popcount(x & (ymask | zmask)) & 1;
            cplx c = std::conj(amps[x ^ flip]) * amps[x];
            term_acc += sign_bits ? -c : c;
        }
        constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        acc += term.coefficient * i_pow[y_count & 3] * term_acc;
    }
    return acc.real();
}

} // namespace qcsim
