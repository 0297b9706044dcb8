/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcsim {

namespace {

constexpr cplx kI{0.0, 1.0};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

SeededRng SeededRng::derive(std::uint64_t index) const {
    return SeededRng(splitmix64(seed_ ^ splitmix64(index + 1)));
}

Gate Gate::hadamard(int q) { return Gate{GateKind::Hadamard, q, -1, 0.0, {}, {}}; }
Gate Gate::pauli_x(int q) { return Gate{GateKind::PauliX, q, -1, 0.0, {}, {}}; }
Gate Gate::pauli_y(int q) { return Gate{GateKind::PauliY, q, -1, 0.0, {}, {}}; }
Gate Gate::pauli_z(int q) { return Gate{GateKind::PauliZ, q, -1, 0.0, {}, {}}; }
Gate Gate::phase(int q, double theta) { return Gate{GateKind::Phase, q, -1, theta, {}, {}}; }
Gate Gate::rot_x(int q, double theta) { return Gate{GateKind::RotX, q, -1, theta, {}, {}}; }
Gate Gate::rot_y(int q, double theta) { return Gate{GateKind::RotY, q, -1, theta, {}, {}}; }
Gate Gate::rot_z(int q, double theta) { return Gate{GateKind::RotZ, q, -1, theta, {}, {}}; }

Gate Gate::cnot(int control, int target) {
    if (control == target) throw std::invalid_argument("cnot: control equals target");
    return Gate{GateKind::ControlledNot, target, control, 0.0, {}, {}};
}

Gate Gate::controlled_phase(int control, int target, double theta) {
    if (control == target) throw std::invalid_argument("controlled_phase: control equals target");
    return Gate{GateKind::ControlledPhase, target, control, theta, {}, {}};
}

Gate Gate::diagonal_phase(std::vector<int> targets, std::function<double(std::uint64_t)> angle) {
    if (targets.empty()) throw std::invalid_argument("diagonal_phase: empty target list");
    if (!angle) throw std::invalid_argument("diagonal_phase: missing angle function");
    Gate g;
    g.kind = GateKind::DiagonalPhase;
    g.diag_targets = std::move(targets);
    g.diag_angle = std::move(angle);
    return g;
}

std::array<cplx, 4> Gate::unitary2() const {
    const double s = 1.0 / std::numbers::sqrt2;
    const double h = theta / 2.0;
    switch (kind) {
    case GateKind::Hadamard: return {s, s, s, -s};
    case GateKind::PauliX: return {0, 1, 1, 0};
    case GateKind::PauliY: return {0, -kI, kI, 0};
    case GateKind::PauliZ: return {1, 0, 0, -1};
    case GateKind::Phase: return {1, 0, 0, std::exp(kI * theta)};
    case GateKind::RotX: return {std::cos(h), -kI * std::sin(h), -kI * std::sin(h), std::cos(h)};
    case GateKind::RotY: return {std::cos(h), -std::sin(h), std::sin(h), std::cos(h)};
    case GateKind::RotZ: return {std::exp(-kI * h), 0, 0, std::exp(kI * h)};
    default:
        throw std::invalid_argument("unitary2: not a single-qubit gate");
    }
}

std::array<cplx, 16> Gate::unitary4() const {
    std::array<cplx, 16> u{};
    auto at = [&u](int r, int c) -> cplx& { return u[r * 4 + c]; };
    switch (kind) {
    case GateKind::ControlledNot:
        // basis index = (control_bit << 1) | target_bit
        at(0, 0) = 1;
        at(1, 1) = 1;
        at(2, 3) = 1;
        at(3, 2) = 1;
        return u;
    case GateKind::ControlledPhase:
        at(0, 0) = 1;
        at(1, 1) = 1;
        at(2, 2) = 1;
        at(3, 3) = std::exp(kI * theta);
        return u;
    default:
        throw std::invalid_argument("unitary4: not a two-qubit gate");
    }
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
    case GateKind::Hadamard:
    case GateKind::PauliX:
    case GateKind::PauliY:
    case GateKind::PauliZ:
    case GateKind::ControlledNot:
        return g; // involutions
    case GateKind::Phase:
    case GateKind::RotX:
    case GateKind::RotY:
    case GateKind::RotZ:
    case GateKind::ControlledPhase:
        g.theta = -theta;
        return g;
    case GateKind::DiagonalPhase: {
        auto fn = diag_angle;
        g.diag_angle = [fn](std::uint64_t sub) { return -fn(sub); };
        return g;
    }
    }
    throw std::invalid_argument("inverse: unknown gate kind");
}

std::string MeasurementRecord::bit_string() const {
    std::string s(static_cast<std::size_t>(n_bits), '0');
    for (int i = 0; i < n_bits; ++i)
        if ((outcome >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

StateVector::StateVector(int n_qubits, std::uint64_t basis_index) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 30)
        throw std::invalid_argument("StateVector: qubit count out of range: " +
                                    std::to_string(n_qubits));
    const std::uint64_t n = std::uint64_t{1} << n_qubits;
    if (basis_index >= n)
        throw std::invalid_argument("StateVector: basis index " + std::to_string(basis_index) +
                                    " out of range for " + std::to_string(n_qubits) + " qubits");
    amps_.assign(n, cplx{0.0, 0.0});
    amps_[basis_index] = 1.0;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cplx> amplitudes,
                                         bool renormalize) {
    StateVector s(n_qubits, 0);
    if (amplitudes.size() != s.dim())
        throw std::invalid_argument("from_amplitudes: expected " + std::to_string(s.dim()) +
                                    " amplitudes, got " + std::to_string(amplitudes.size()));
    s.amps_ = std::move(amplitudes);
    if (renormalize) s.normalize();
    return s;
}

double StateVector::norm_sq() const {
    double acc = 0.0;
    for (const cplx& a : amps_) acc += std::norm(a);
    return acc;
}

void StateVector::normalize() {
    const double n2 = norm_sq();
    if (n2 <= 0.0) throw std::invalid_argument("normalize: zero-norm state");
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : amps_) a *= inv;
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= n_qubits_)
        throw std::invalid_argument("qubit index " + std::to_string(q) +
                                    " out of range for " + std::to_string(n_qubits_) + " qubits");
}

void StateVector::apply_unitary2(int q, const std::array<cplx, 4>& u) {
    const std::uint64_t step = std::uint64_t{1} << q;
    const std::uint64_t n = dim();
    for (std::uint64_t base = 0; base < n; base += 2 * step) {
        for (std::uint64_t i = base; i < base + step; ++i) {
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i + step];
            amps_[i] = u[0] * a0 + u[1] * a1;
            amps_[i + step] = u[2] * a0 + u[3] * a1;
        }
    }
}

void StateVector::apply(const Gate& gate) {
    switch (gate.kind) {
    case GateKind::Hadamard:
    case GateKind::PauliY:
    case GateKind::RotX:
    case GateKind::RotY:
        check_qubit(gate.target);
        apply_unitary2(gate.target, gate.unitary2());
        return;
    case GateKind::PauliX: {
        check_qubit(gate.target);
        const std::uint64_t step = std::uint64_t{1} << gate.target;
        const std::uint64_t n = dim();
        for (std::uint64_t base = 0; base < n; base += 2 * step)
            for (std::uint64_t i = base; i < base + step; ++i)
                std::swap(amps_[i], amps_[i + step]);
        return;
    }
    case GateKind::PauliZ:
    case GateKind::Phase:
    case GateKind::RotZ: {
        check_qubit(gate.target);
        const auto u = gate.unitary2();
        const std::uint64_t mask = std::uint64_t{1} << gate.target;
        const std::uint64_t n = dim();
        const cplx d0 = u[0], d1 = u[3];
        for (std::uint64_t i = 0; i < n; ++i) amps_[i] *= (i & mask) ? d1 : d0;
        return;
    }
    case GateKind::ControlledNot: {
        check_qubit(gate.target);
        check_qubit(gate.control);
        const std::uint64_t cmask = std::uint64_t{1} << gate.control;
        const std::uint64_t tmask = std::uint64_t{1} << gate.target;
        const std::uint64_t n = dim();
        for (std::uint64_t i = 0; i < n; ++i)
            if ((i & cmask) && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
        return;
    }
    case GateKind::ControlledPhase: {
        check_qubit(gate.target);
        check_qubit(gate.control);
        const std::uint64_t both =
            (std::uint64_t{1} << gate.control) | (std::uint64_t{1} << gate.target);
        const cplx ph = std::exp(kI * gate.theta);
        const std::uint64_t n = dim();
        for (std::uint64_t i = 0; i < n; ++i)
            if ((i & both) == both) amps_[i] *= ph;
        return;
    }
    case GateKind::DiagonalPhase: {
        for (int q : gate.diag_targets) check_qubit(q);
        const std::uint64_t n = dim();
        const int k = static_cast<int>(gate.diag_targets.size());
        // Fast path: targets are the full register in significance order.
        bool whole = (k == n_qubits_);
        for (int i = 0; whole && i < k; ++i) whole = (gate.diag_targets[static_cast<std::size_t>(i)] == i);
        if (whole) {
            for (std::uint64_t i = 0; i < n; ++i) amps_[i] *= std::exp(kI * gate.diag_angle(i));
            return;
        }
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t sub = 0;
            for (int b = 0; b < k; ++b)
                sub |= ((i >> gate.diag_targets[static_cast<std::size_t>(b)]) & 1u) << b;
            amps_[i] *= std::exp(kI * gate.diag_angle(sub));
        }
        return;
    }
    }
    throw std::invalid_argument("apply: unknown gate kind");
}

void StateVector::apply_qft(int first, int count, bool inverse) {
    if (count <= 0) throw std::invalid_argument("apply_qft: empty qubit range");
    check_qubit(first);
    check_qubit(first + count - 1);

    auto swaps = [&] {
        for (int r = 0; r < count / 2; ++r) {
            const int a = first + r, b = first + count - 1 - r;
            // swap = three CNOTs
            apply(Gate::cnot(a, b));
            apply(Gate::cnot(b, a));
            apply(Gate::cnot(a, b));
        }
    };

    if (!inverse) {
        for (int j = count - 1; j >= 0; --j) {
            apply(Gate::hadamard(first + j));
            for (int l = j - 1; l >= 0; --l)
                apply(Gate::controlled_phase(first + l, first + j,
                                             std::numbers::pi / double(std::uint64_t{1} << (j - l))));
        }
        swaps();
    } else {
        swaps();
        for (int j = 0; j < count; ++j) {
            for (int l = 0; l < j; ++l)
                apply(Gate::controlled_phase(first + l, first + j,
                                             -std::numbers::pi / double(std::uint64_t{1} << (j - l))));
            apply(Gate::hadamard(first + j));
        }
    }
}

MeasurementRecord StateVector::measure(std::span<const int> qubits, SeededRng& rng) {
    for (int q : qubits) check_qubit(q);
    const std::uint64_t n = dim();

    // Sample a full basis state from |a_x|^2; the masked bits of the sample
    // follow the correct marginal distribution for the requested qubits.
    const double u = rng.uniform() * norm_sq();
    double acc = 0.0;
    std::uint64_t sample = 0;
    bool found = false;
    std::uint64_t last_occupied = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double w = std::norm(amps_[i]);
        if (w > 0.0) last_occupied = i;
        acc += w;
        if (!found && w > 0.0 && acc >= u) {
            sample = i;
            found = true;
        }
    }
    if (!found) sample = last_occupied;

    MeasurementRecord rec;
    rec.n_bits = static_cast<int>(qubits.size());
    rec.rng_seed = rng.seed();
    for (std::size_t i = 0; i < qubits.size(); ++i)
        rec.outcome |= ((sample >> qubits[i]) & 1u) << i;

    // Project onto the observed outcome and renormalize.
    std::uint64_t mask = 0, want = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        mask |= std::uint64_t{1} << qubits[i];
        want |= ((rec.outcome >> i) & 1u) << qubits[i];
    }
    double weight = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & mask) == want)
            weight += std::norm(amps_[i]);
        else
            amps_[i] = 0.0;
    }
    rec.probability = weight;
    const double inv = 1.0 / std::sqrt(weight);
    for (std::uint64_t i = 0; i < n; ++i) amps_[i] *= inv;
    return rec;
}

std::vector<double> StateVector::register_probabilities(int first, int count) const {
    if (count <= 0) throw std::invalid_argument("register_probabilities: empty range");
    check_qubit(first);
    check_qubit(first + count - 1);
    if (count > 26) throw std::invalid_argument("register_probabilities: range too wide");
    std::vector<double> probs(std::uint64_t{1} << count, 0.0);
    const std::uint64_t n = dim();
    const std::uint64_t sub_mask = (std::uint64_t{1} << count) - 1;
    for (std::uint64_t i = 0; i < n; ++i)
        probs[(i >> first) & sub_mask] += std::norm(amps_[i]);
    return probs;
}

void StateVector::apply_phase_rotation(std::uint64_t z_mask, double theta) {
    if ((z_mask >> n_qubits_) != 0)
        throw std::invalid_argument("apply_phase_rotation: mask outside register");
    const cplx even = std::exp(-kI * theta);
    const cplx odd = std::exp(kI * theta);
    const std::uint64_t n = dim();
    for (std::uint64_t i = 0; i < n; ++i)
        amps_[i] *= (std::popcount(i & z_mask) & 1) ? odd : even;
}

void StateVector::multiply_global_phase(cplx phase) {
    for (cplx& a : amps_) a *= phase;
}

cplx StateVector::inner(const StateVector& other) const {
    if (other.n_qubits_ != n_qubits_)
        throw std::invalid_argument("inner: qubit count mismatch");
    cplx acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < dim(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
}

double StateVector::fidelity(const StateVector& other) const {
    return std::norm(inner(other));
}

StateVector load_amplitudes(std::span<const double> target,
                            const std::function<double(std::uint64_t)>& phase) {
    const std::size_t n = target.size();
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("load_amplitudes: length must be a power of two >= 2");
    int n_qubits = 0;
    while ((std::size_t{1} << n_qubits) < n) ++n_qubits;

    double total = 0.0;
    for (double w : target) {
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument("load_amplitudes: target entries must be finite and >= 0");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("load_amplitudes: target mass is zero");

    // Subtree masses, root last: mass[level][prefix] over the 2^level prefixes
    // of the most significant bits.
    std::vector<std::vector<double>> mass(static_cast<std::size_t>(n_qubits) + 1);
    mass[static_cast<std::size_t>(n_qubits)].assign(target.begin(), target.end());
    for (int level = n_qubits - 1; level >= 0; --level) {
        auto& coarse = mass[static_cast<std::size_t>(level)];
        const auto& fine = mass[static_cast<std::size_t>(level) + 1];
        coarse.resize(std::size_t{1} << level);
        for (std::size_t p = 0; p < coarse.size(); ++p)
            coarse[p] = fine[2 * p] + fine[2 * p + 1];
    }

    // One conditional rotation per tree node: the branch amplitudes are
    // cos(theta/2), sin(theta/2) with theta = 2 atan2(sqrt(m1), sqrt(m0)).
    std::vector<cplx> amps{cplx{1.0, 0.0}};
    for (int level = 0; level < n_qubits; ++level) {
        const auto& fine = mass[static_cast<std::size_t>(level) + 1];
        std::vector<cplx> next(amps.size() * 2, cplx{0.0, 0.0});
        for (std::size_t p = 0; p < amps.size(); ++p) {
            if (amps[p] == cplx{0.0, 0.0}) continue;
            const double m0 = fine[2 * p];
            const double m1 = fine[2 * p + 1];
            if (m0 + m1 <= 0.0) continue;
            const double half = std::atan2(std::sqrt(m1), std::sqrt(m0));
            next[2 * p] = amps[p] * std::cos(half);
            next[2 * p + 1] = amps[p] * std::sin(half);
        }
        amps = std::move(next);
    }

    if (phase)
        for (std::size_t x = 0; x < amps.size(); ++x)
            amps[x] *= std::exp(kI * phase(static_cast<std::uint64_t>(x)));

    return StateVector::from_amplitudes(n_qubits, std::move(amps), /*renormalize=*/true);
}

double expectation_diagonal(const StateVector& state, std::span<const double> values) {
    if (values.size() != state.dim())
        throw std::invalid_argument("expectation_diagonal: length mismatch");
    double acc = 0.0;
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < state.dim(); ++i) acc += std::norm(amps[i]) * values[i];
    return acc;
}

StateVector tensor_product(const StateVector& low, const StateVector& high) {
    const int n = low.n_qubits() + high.n_qubits();
    std::vector<cplx> amps(std::uint64_t{1} << n);
    const auto a = low.amplitudes();
    const auto b = high.amplitudes();
    for (std::uint64_t j = 0; j < high.dim(); ++j)
        for (std::uint64_t i = 0; i < low.dim(); ++i)
            amps[(j << low.n_qubits()) | i] = b[j] * a[i];
    return StateVector::from_amplitudes(n, std::move(amps));
}

} // namespace qcsim
