/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qcsim {

using cplx = std::complex<double>;

/// Tolerance for state-level identities (norms, round trips).
inline constexpr double kStateTol = 1e-10;
/// Tolerance for 2x2 / 4x4 gate-matrix unitarity.
inline constexpr double kMatrixTol = 1e-12;

/// Deterministic random source that remembers the seed it was built from.
/// Identical seeds give identical draw sequences regardless of platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& engine() { return engine_; }

    /// Uniform draw in [0, 1).
    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }

    /// Child generator for stream `index`, derived so that independent
    /// streams never share state with the parent (splitmix64 of seed^index).
    SeededRng derive(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

enum class GateKind {
    Hadamard,
    PauliX,
    PauliY,
    PauliZ,
    Phase,          // diag(1, e^{i theta})
    RotX,           // exp(-i theta X / 2)
    RotY,
    RotZ,
    ControlledNot,
    ControlledPhase, // diag(1, 1, 1, e^{i theta})
    DiagonalPhase,   // amp[x] *= exp(i theta(sub)) where sub gathers the target bits
};

/// One elementary gate. Qubit 0 is the least significant bit of the basis
/// index; that convention is used everywhere in this library.
struct Gate {
    GateKind kind = GateKind::Hadamard;
    int target = 0;
    int control = -1; // only meaningful for controlled kinds
    double theta = 0.0;
    std::vector<int> diag_targets;                     // DiagonalPhase only
    std::function<double(std::uint64_t)> diag_angle;   // DiagonalPhase only

    static Gate hadamard(int q);
    static Gate pauli_x(int q);
    static Gate pauli_y(int q);
    static Gate pauli_z(int q);
    static Gate phase(int q, double theta);
    static Gate rot_x(int q, double theta);
    static Gate rot_y(int q, double theta);
    static Gate rot_z(int q, double theta);
    static Gate cnot(int control, int target);
    static Gate controlled_phase(int control, int target, double theta);
    static Gate diagonal_phase(std::vector<int> targets,
                               std::function<double(std::uint64_t)> angle);

    bool is_two_qubit() const {
        return kind == GateKind::ControlledNot || kind == GateKind::ControlledPhase;
    }

    /// Matrix realization for single-qubit kinds, row-major {u00,u01,u10,u11}.
    std::array<cplx, 4> unitary2() const;
    /// Matrix realization for two-qubit kinds; basis index = (control<<1)|target.
    std::array<cplx, 16> unitary4() const;
    /// Gate applying the adjoint unitary.
    Gate inverse() const;
};

/// Outcome of measuring a list of qubits. Bit i of `outcome` is the result
/// for the i-th requested qubit.
struct MeasurementRecord {
    std::uint64_t outcome = 0;
    int n_bits = 0;
    double probability = 1.0; // Born weight of the outcome before collapse
    std::uint64_t rng_seed = 0;

    /// "b0b1..." with the first requested qubit leftmost.
    std::string bit_string() const;
};

/// Dense register of n qubits: 2^n complex amplitudes, kept normalized to
/// 1 within 1e-10 by every public operation.
class StateVector {
public:
    /// Basis state |index> on n qubits.
    explicit StateVector(int n_qubits, std::uint64_t basis_index = 0);

    /// Wraps an explicit amplitude vector (length must be 2^n); the caller
    /// is responsible for normalization unless `renormalize` is set.
    static StateVector from_amplitudes(int n_qubits, std::vector<cplx> amplitudes,
                                       bool renormalize = false);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    std::span<const cplx> amplitudes() const { return amps_; }
    /// Raw mutable access for external kernels; callers are responsible for
    /// preserving the norm invariant.
    std::span<cplx> mutable_amplitudes() { return amps_; }
    cplx amplitude(std::uint64_t index) const { return amps_.at(index); }

    double norm_sq() const;
    void normalize();

    void apply(const Gate& gate);

    /// Fourier transform of the contiguous sub-register [first, first+count):
    /// amplitudes on the sub-register are replaced by their discrete Fourier
    /// coefficients, kernel exp(+2 pi i k x / N) / sqrt(N). `inverse` applies
    /// the adjoint. Implemented as the O(count^2) H + controlled-phase ladder
    /// with final qubit reversal.
    void apply_qft(int first, int count, bool inverse = false);

    /// Born-rule measurement of the listed qubits. The state collapses to the
    /// renormalized projection consistent with the outcome.
    MeasurementRecord measure(std::span<const int> qubits, SeededRng& rng);

    /// Marginal Born probabilities of the contiguous register
    /// [first, first+count), indexed by the register value. Deterministic
    /// accumulation order.
    std::vector<double> register_probabilities(int first, int count) const;

    /// amp[x] *= exp(-i theta) on even parity of (x & z_mask), exp(+i theta)
    /// on odd parity; this is exp(-i theta Z...Z) over the masked qubits.
    void apply_phase_rotation(std::uint64_t z_mask, double theta);

    void multiply_global_phase(cplx phase);

    cplx inner(const StateVector& other) const; // <this|other>
    double fidelity(const StateVector& other) const; // |<this|other>|^2

private:
    int n_qubits_;
    std::vector<cplx> amps_;

    void check_qubit(int q) const;
    void apply_unitary2(int q, const std::array<cplx, 4>& u);
};

/// Zalka-style amplitude loading: builds the state one qubit at a time with
/// conditional rotations whose angles come from prefix-sum splits of the
/// target mass. The result has amplitudes proportional to sqrt(target[x]),
/// optionally times exp(i phase(x)). `target` length must be a power of two
/// with at least one positive entry; entries must be finite and >= 0.
StateVector load_amplitudes(std::span<const double> target,
                            const std::function<double(std::uint64_t)>& phase = {});

/// <psi| diag(values) |psi> for a real diagonal observable.
double expectation_diagonal(const StateVector& state, std::span<const double> values);

/// Tensor product placing `low` on the less significant qubits.
StateVector tensor_product(const StateVector& low, const StateVector& high);

} // namespace qcsim
