/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "qcsim/phase_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcsim/errors.hpp"

namespace qcsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Index of the full register with bit `control` = 1 inserted into a reduced
// (n-1)-qubit index.
std::uint64_t with_control_bit(std::uint64_t reduced, int control) {
    const std::uint64_t low = reduced & ((std::uint64_t{1} << control) - 1);
    const std::uint64_t high = reduced >> control;
    return (high << (control + 1)) | (std::uint64_t{1} << control) | low;
}

// Collect the control-qubit = 1 subspace into a register one qubit narrower.
StateVector gather_control_one(const StateVector& state, int control) {
    const std::uint64_t half = state.dim() / 2;
    std::vector<cplx> amps(half);
    const auto full = state.amplitudes();
    for (std::uint64_t i = 0; i < half; ++i) amps[i] = full[with_control_bit(i, control)];
    return StateVector::from_amplitudes(state.n_qubits() - 1, std::move(amps));
}

void scatter_control_one(StateVector& state, const StateVector& sub, int control) {
    const std::uint64_t half = state.dim() / 2;
    auto amps = state.mutable_amplitudes();
    const auto sub_amps = sub.amplitudes();
    for (std::uint64_t i = 0; i < half; ++i) amps[with_control_bit(i, control)] = sub_amps[i];
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& base, std::uint64_t power) {
    const auto dim = base.rows();
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd sq = base;
    std::uint64_t p = power;
    while (p != 0) {
        if (p & 1u) result = result * sq;
        p >>= 1;
        if (p != 0) sq = sq * sq;
    }
    return result;
}

} // namespace

void EnergyWindow::validate() const {
    if (!(e_min < e_max))
        throw std::invalid_argument("EnergyWindow: e_min must be below e_max");
    if (!std::isfinite(e_min) || !std::isfinite(e_max))
        throw std::invalid_argument("EnergyWindow: bounds must be finite");
}

EnergyWindow EnergyWindow::for_hamiltonian(const PauliSum& h, double pad_fraction) {
    if (pad_fraction < 0.0) throw std::invalid_argument("EnergyWindow: negative padding");
    auto [lo, hi] = h.gershgorin_bounds();
    double raw = hi - lo;
    if (raw <= 0.0) raw = 1.0; // pure identity sum: any unit window works
    const double pad = pad_fraction * raw + 1e-12;
    return EnergyWindow{lo - pad, hi + pad};
}

DiagonalUnitary::DiagonalUnitary(std::vector<double> phases) : phases_(std::move(phases)) {
    const std::size_t n = phases_.size();
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("DiagonalUnitary: need 2^k phases");
    n_qubits_ = 0;
    while ((std::size_t{1} << n_qubits_) < n) ++n_qubits_;
}

void DiagonalUnitary::apply_power(StateVector& state, std::uint64_t power, int control) const {
    if (state.n_qubits() < n_qubits_)
        throw std::invalid_argument("DiagonalUnitary: register narrower than system");
    const std::uint64_t sys_mask = (std::uint64_t{1} << n_qubits_) - 1;
    const std::uint64_t ctrl_mask = control >= 0 ? (std::uint64_t{1} << control) : 0;
    auto amps = state.mutable_amplitudes();
    const double p = static_cast<double>(power);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (ctrl_mask && !(i & ctrl_mask)) continue;
        const double angle = kTwoPi * p * phases_[i & sys_mask];
        amps[i] *= cplx{std::cos(angle), std::sin(angle)};
    }
}

std::optional<bool> DiagonalUnitary::window_covers_spectrum() const {
    for (double phi : phases_)
        if (phi < 0.0 || phi >= 1.0) return false;
    return true;
}

TrotterizedUnitary::TrotterizedUnitary(const PauliSum& h, const EnergyWindow& window,
                                       int base_steps, int order, int dense_cap)
    : n_qubits_(h.n_qubits()), window_(window) {
    window_.validate();
    if (base_steps < 1) throw std::invalid_argument("TrotterizedUnitary: base_steps must be >= 1");

    // Scaled generator H' with eigenphases phi(E) in [0, 1); U = e^{2 pi i H'}
    // is the Trotterized evolution of H' over time -2 pi.
    PauliSum scaled = h.scaled(1.0 / window_.width());
    scaled += PauliSum::identity(n_qubits_, -window_.e_min / window_.width());
    scaled.collect();
    evolver_ = std::make_shared<TrotterEvolver>(scaled, -kTwoPi,
                                                static_cast<std::uint64_t>(base_steps), order);

    // Dense fast path: compose the unit-power circuit into a block matrix.
    // Squaring cost grows as 8^n, so cap the dense route at 8 qubits even if
    // the caller allows more.
    const int effective_cap = std::min(dense_cap, 8);
    if (n_qubits_ <= effective_cap) {
        const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
        Eigen::MatrixXcd base(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (std::uint64_t col = 0; col < dim; ++col) {
            StateVector basis(n_qubits_, col);
            evolver_->apply(basis);
            for (std::uint64_t row = 0; row < dim; ++row)
                base(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                    basis.amplitude(row);
        }
        base_ = std::move(base);
    }

    if (n_qubits_ <= dense_cap) {
        EigenSystem sys = diagonalize(h, dense_cap);
        bool ok = true;
        for (Eigen::Index k = 0; k < sys.eigenvalues.size(); ++k) {
            const double phi = window_.phase_of(sys.eigenvalues(k));
            if (phi < 0.0 || phi >= 1.0) ok = false;
        }
        covers_ = ok;
    }
}

void TrotterizedUnitary::apply_power(StateVector& state, std::uint64_t power, int control) const {
    if (power == 0) return;
    if (base_) {
        apply_unitary_block(state, matrix_power(*base_, power), control);
        return;
    }
    if (control < 0) {
        for (std::uint64_t p = 0; p < power; ++p) evolver_->apply(state);
        return;
    }
    if (control < n_qubits_)
        throw std::invalid_argument("TrotterizedUnitary: control must sit above the system");
    // Pull the control = 1 subspace out, evolve its system qubits, write back.
    StateVector sub = gather_control_one(state, control);
    for (std::uint64_t p = 0; p < power; ++p) evolver_->apply(sub);
    scatter_control_one(state, sub, control);
}

DenseUnitary::DenseUnitary(Eigen::MatrixXcd u) : u_(std::move(u)) {
    const auto dim = static_cast<std::uint64_t>(u_.rows());
    if (u_.rows() != u_.cols() || dim < 2 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("DenseUnitary: matrix must be square 2^k x 2^k");
    const double unitarity =
        (u_ * u_.adjoint() - Eigen::MatrixXcd::Identity(u_.rows(), u_.rows())).cwiseAbs().maxCoeff();
    if (unitarity > 1e-8)
        throw std::invalid_argument("DenseUnitary: matrix is not unitary (deviation " +
                                    std::to_string(unitarity) + ")");
    n_qubits_ = 0;
    while ((std::uint64_t{1} << n_qubits_) < dim) ++n_qubits_;
}

void DenseUnitary::apply_power(StateVector& state, std::uint64_t power, int control) const {
    if (power == 0) return;
    apply_unitary_block(state, matrix_power(u_, power), control);
}

const SpectralLine& SpectralResult::dominant() const {
    if (lines.empty()) throw std::logic_error("SpectralResult: no lines");
    const SpectralLine* best = &lines.front();
    for (const auto& line : lines)
        if (line.weight > best->weight) best = &line;
    return *best;
}

double SpectralResult::weight_sum() const {
    double acc = 0.0;
    for (const auto& line : lines) acc += line.weight;
    return acc;
}

SpectralResult phase_estimation(const UnitaryPowerApplier& unitary, const StateVector& input,
                                int n_ancilla, const EnergyWindow& window, std::uint64_t n_shots,
                                SeededRng& rng) {
    window.validate();
    if (n_ancilla < 1 || n_ancilla > 24)
        throw std::invalid_argument("phase_estimation: ancilla count out of range [1, 24]");
    if (n_shots < 1) throw std::invalid_argument("phase_estimation: need at least one shot");
    const int n_sys = unitary.system_qubits();
    if (input.n_qubits() != n_sys)
        throw std::invalid_argument("phase_estimation: input register size mismatch");
    if (std::abs(input.norm_sq() - 1.0) > 1e-8)
        throw std::invalid_argument("phase_estimation: input state not normalized");

    const int n_total = n_sys + n_ancilla;
    std::vector<cplx> amps(std::uint64_t{1} << n_total, cplx{0.0, 0.0});
    std::copy(input.amplitudes().begin(), input.amplitudes().end(), amps.begin());
    StateVector full = StateVector::from_amplitudes(n_total, std::move(amps));

    for (int j = 0; j < n_ancilla; ++j) full.apply(Gate::hadamard(n_sys + j));
    for (int j = 0; j < n_ancilla; ++j)
        unitary.apply_power(full, std::uint64_t{1} << j, n_sys + j);
    full.apply_qft(n_sys, n_ancilla, /*inverse=*/true);

    const std::vector<double> marginal = full.register_probabilities(n_sys, n_ancilla);
    std::vector<double> cumulative(marginal.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < marginal.size(); ++i) {
        acc += marginal[i];
        cumulative[i] = acc;
    }

    std::vector<std::uint64_t> counts(marginal.size(), 0);
    for (std::uint64_t s = 0; s < n_shots; ++s) {
        const double u = rng.uniform() * acc;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
        if (idx >= counts.size()) idx = counts.size() - 1;
        ++counts[idx];
    }

    SpectralResult result;
    result.n_ancilla = n_ancilla;
    result.window = window;
    result.n_shots = n_shots;
    const double denom = static_cast<double>(n_shots);
    const double scale = 1.0 / static_cast<double>(std::uint64_t{1} << n_ancilla);
    for (std::size_t bits = 0; bits < counts.size(); ++bits) {
        if (counts[bits] == 0) continue;
        SpectralLine line;
        line.bits = bits;
        line.phase = static_cast<double>(bits) * scale;
        line.energy = window.energy_of(line.phase);
        line.weight = static_cast<double>(counts[bits]) / denom;
        result.lines.push_back(line);
    }
    result.aliasing_risk = (unitary.window_covers_spectrum() == std::optional<bool>{false});
    return result;
}

IterativePhaseResult iterative_pea(const UnitaryPowerApplier& unitary, const StateVector& input,
                                   int n_bits, SeededRng& rng, int shots_per_bit) {
    if (n_bits < 1 || n_bits > 62)
        throw std::invalid_argument("iterative_pea: bit count out of range [1, 62]");
    if (shots_per_bit < 1) throw std::invalid_argument("iterative_pea: shots_per_bit must be >= 1");
    const int n_sys = unitary.system_qubits();
    if (input.n_qubits() != n_sys)
        throw std::invalid_argument("iterative_pea: input register size mismatch");

    IterativePhaseResult result;
    result.n_bits = n_bits;

    StateVector sys = input;
    const int anc = n_sys;
    // bits measured so far, b_{r+1}..b_{n_bits}, as the binary fraction
    // 0.b_{r+1}...b_{n_bits} scaled to the next round's weight on the fly
    for (int r = n_bits; r >= 1; --r) {
        StateVector full = tensor_product(sys, StateVector(1, 0));
        full.apply(Gate::hadamard(anc));
        unitary.apply_power(full, std::uint64_t{1} << (r - 1), anc);

        double correction = 0.0;
        for (int j = r + 1; j <= n_bits; ++j) {
            const int bit = static_cast<int>((result.bits >> (n_bits - j)) & 1u);
            if (bit) correction += std::ldexp(1.0, -(j - r + 1));
        }
        if (correction != 0.0) full.apply(Gate::phase(anc, -kTwoPi * correction));
        full.apply(Gate::hadamard(anc));

        const double p1 = full.register_probabilities(anc, 1)[1];
        int ones = 0;
        for (int s = 0; s < shots_per_bit; ++s)
            if (rng.uniform() < p1) ++ones;
        int bit;
        if (2 * ones == shots_per_bit)
            bit = p1 > 0.5 ? 1 : 0;
        else
            bit = (2 * ones > shots_per_bit) ? 1 : 0;
        if (std::abs(p1 - 0.5) < 0.1) result.ambiguous_rounds.push_back(r);

        if (bit) result.bits |= std::uint64_t{1} << (n_bits - r);

        // Collapse the ancilla onto the majority outcome and drop it.
        auto amps = full.mutable_amplitudes();
        const std::uint64_t half = full.dim() / 2;
        std::vector<cplx> kept(half);
        for (std::uint64_t i = 0; i < half; ++i) kept[i] = amps[bit ? half + i : i];
        sys = StateVector::from_amplitudes(n_sys, std::move(kept), /*renormalize=*/true);
    }

    result.phase = std::ldexp(static_cast<double>(result.bits), -n_bits);
    return result;
}

} // namespace qcsim
