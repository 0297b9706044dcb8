/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <memory>
#include <optional>

#include "qcsim/dense.hpp"
#include "qcsim/pauli.hpp"
#include "qcsim/trotter.hpp"

namespace qcsim {

/// Affine map between energies and phases: phi(E) = (E - e_min)/(e_max - e_min),
/// so the estimated unitary is U = exp(2 pi i phi(H)) and every targeted
/// eigenvalue must satisfy phi in [0, 1).
struct EnergyWindow {
    double e_min = 0.0;
    double e_max = 1.0;

    double width() const { return e_max - e_min; }
    double phase_of(double energy) const { return (energy - e_min) / width(); }
    double energy_of(double phase) const { return e_min + phase * width(); }

    void validate() const;

    /// Window from the Gershgorin-style bound sum|c_k| around the identity
    /// coefficient, padded on both sides by `pad_fraction` of the raw width so
    /// no eigenphase sits on the wrap-around seam.
    static EnergyWindow for_hamiltonian(const PauliSum& h, double pad_fraction = 0.05);
};

/// Controlled powers of the estimated unitary: applies U^power to the low
/// system qubits of `state`, restricted to the control qubit = 1 subspace
/// when control >= 0. Powers of the same applier must compose exactly, i.e.
/// apply_power(a) then apply_power(b) equals apply_power(a+b).
class UnitaryPowerApplier {
public:
    virtual ~UnitaryPowerApplier() = default;
    virtual int system_qubits() const = 0;
    virtual void apply_power(StateVector& state, std::uint64_t power, int control = -1) const = 0;
    /// False when the applier knows that some eigenvalue falls outside the
    /// phase window (aliasing); nullopt when it cannot tell.
    virtual std::optional<bool> window_covers_spectrum() const { return std::nullopt; }
};

/// U = diag(exp(2 pi i phases[x])). Powers are exact at any exponent.
class DiagonalUnitary final : public UnitaryPowerApplier {
public:
    explicit DiagonalUnitary(std::vector<double> phases);
    int system_qubits() const override { return n_qubits_; }
    void apply_power(StateVector& state, std::uint64_t power, int control) const override;
    std::optional<bool> window_covers_spectrum() const override;

private:
    std::vector<double> phases_;
    int n_qubits_;
};

/// U = exp(2 pi i (H - e_min)/(e_max - e_min)) realized as `base_steps`
/// Trotter steps per unit power (step count scales with the power, so every
/// controlled power is an exact matrix power of the same base unitary and the
/// splitting bias is uniform across ancilla bits). Up to `dense_cap` system
/// qubits the base step is composed into a dense block once and powers are
/// applied by repeated squaring; above the cap powers fall back to sequential
/// sub-register evolution.
class TrotterizedUnitary final : public UnitaryPowerApplier {
public:
    TrotterizedUnitary(const PauliSum& h, const EnergyWindow& window, int base_steps = 256,
                       int order = 2, int dense_cap = kDenseCapQubits);
    int system_qubits() const override { return n_qubits_; }
    void apply_power(StateVector& state, std::uint64_t power, int control) const override;
    std::optional<bool> window_covers_spectrum() const override { return covers_; }
    const EnergyWindow& window() const { return window_; }

private:
    int n_qubits_;
    EnergyWindow window_;
    std::shared_ptr<TrotterEvolver> evolver_; // one unit power
    std::optional<Eigen::MatrixXcd> base_;    // dense composition of one unit power
    std::optional<bool> covers_;
};

/// Arbitrary dense unitary with powers by repeated squaring.
class DenseUnitary final : public UnitaryPowerApplier {
public:
    explicit DenseUnitary(Eigen::MatrixXcd u);
    int system_qubits() const override { return n_qubits_; }
    void apply_power(StateVector& state, std::uint64_t power, int control) const override;

private:
    Eigen::MatrixXcd u_;
    int n_qubits_;
};

struct SpectralLine {
    std::uint64_t bits = 0; // ancilla register value
    double phase = 0.0;     // bits / 2^n_ancilla
    double energy = 0.0;    // window.energy_of(phase)
    double weight = 0.0;    // empirical frequency over the shots
};

struct SpectralResult {
    int n_ancilla = 0;
    EnergyWindow window;
    std::uint64_t n_shots = 0;
    std::vector<SpectralLine> lines; // ascending by bits
    bool aliasing_risk = false;

    /// Line with the largest empirical weight (ties: lowest bits).
    const SpectralLine& dominant() const;
    double weight_sum() const;
};

/// Textbook phase estimation: ancilla register in uniform superposition,
/// controlled U^(2^j) per ancilla bit, inverse QFT, then `n_shots` Born
/// samples of the ancilla register. The pre-measurement state is built once;
/// shots sample its exact ancilla marginal.
SpectralResult phase_estimation(const UnitaryPowerApplier& unitary, const StateVector& input,
                                int n_ancilla, const EnergyWindow& window, std::uint64_t n_shots,
                                SeededRng& rng);

struct IterativePhaseResult {
    std::uint64_t bits = 0; // phase bits, most significant first
    int n_bits = 0;
    double phase = 0.0;     // bits / 2^n_bits
    std::vector<int> ambiguous_rounds; // 1-based bit positions with conditional
                                       // probability within 0.1 of one half
};

/// Iterative phase estimation with a single reused ancilla, extracting the
/// least significant bit first; already-measured bits feed back as phase
/// corrections. `shots_per_bit` Born samples per round are resolved by
/// majority (the system register is projected onto the majority outcome).
IterativePhaseResult iterative_pea(const UnitaryPowerApplier& unitary, const StateVector& input,
                                   int n_bits, SeededRng& rng, int shots_per_bit = 1);

} // namespace qcsim
