/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include "pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

#include "qcsim/dense.hpp"
#include "qcsim/errors.hpp"
#include "qcsim/fold.hpp"
#include "qcsim/grid.hpp"
#include "qcsim/phase_estimation.hpp"
#include "qcsim/state_prep.hpp"

namespace qcsim::pipelines {

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    return out;
}

StateVector uniform_state(int n_qubits) {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    std::vector<cplx> amps(dim, cplx{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
    return StateVector::from_amplitudes(n_qubits, std::move(amps));
}

std::string assignment_string(std::uint64_t bits, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

// Landscape + anneal sweep shared by the fold and qubo pipelines.
void emit_optimization_report(const PuboProblem& problem, const std::vector<double>& t_runs,
                              double dt, int n_samples, std::uint64_t seed,
                              const std::string& out_path, std::ostream& out, std::ostream& err) {
    const QuboReduction reduction = reduce_to_qubo(problem);
    const BruteForceResult direct = brute_force_minimize(problem);
    const BruteForceResult reduced = brute_force_minimize(reduction.qubo);

    // Landscape of the original binary problem.
    {
        auto file = open_output(out_path);
        io::CsvWriter csv(file, {"bits", "energy", "rank"});
        int rank = 1;
        for (const auto& row : direct.landscape)
            csv.row({assignment_string(row.bits, problem.n_vars()), io::format_g17(row.energy),
                     std::to_string(rank++)});
    }

    std::set<std::uint64_t> projected;
    for (std::uint64_t bits : reduced.argmin) projected.insert(reduction.project(bits));
    const std::set<std::uint64_t> expected(direct.argmin.begin(), direct.argmin.end());
    const bool sound = projected == expected;

    out << "minimum_energy = " << io::format_g17(direct.min_energy) << "\n";
    out << "minimizers =";
    for (std::uint64_t bits : direct.argmin) out << " " << assignment_string(bits, problem.n_vars());
    out << "\n";
    out << "unique_minimum = " << (direct.argmin.size() == 1 ? "yes" : "no") << "\n";
    out << "ancillas = " << reduction.ancillas.size() << "\n";
    out << "reduction_sound = " << (sound ? "yes" : "no") << "\n";
    if (!sound) err << "warning: reduced minimizers do not project onto the direct set\n";

    SeededRng rng(seed);
    auto sweep = open_output(sweep_path_for(out_path));
    io::CsvWriter csv(sweep, {"t_run", "success_probability"});
    for (double t_run : t_runs) {
        const AnnealSchedule schedule{t_run, linear_schedule()};
        const AnnealResult result = anneal(reduction.qubo, schedule, dt, rng, n_samples);
        csv.row({io::format_g17(t_run), io::format_g17(result.success_probability)});
        out << "anneal t_run=" << io::format_g17(t_run)
            << " success=" << io::format_g17(result.success_probability) << "\n";
    }
}

} // namespace

std::string sweep_path_for(const std::string& out_path) {
    const std::filesystem::path p(out_path);
    std::filesystem::path sweep = p.parent_path() / p.stem();
    sweep += "_sweep";
    sweep += p.extension().empty() ? std::filesystem::path(".csv") : p.extension();
    return sweep.string();
}

void run_pea(io::Config& cfg, std::uint64_t seed, const std::string& out_path, std::ostream& out,
             std::ostream& err) {
    const auto files = cfg.get_list("integrals");
    auto labels = cfg.get_list("labels", {});
    if (labels.empty())
        for (const auto& f : files) labels.push_back(std::filesystem::path(f).stem().string());
    if (labels.size() != files.size())
        throw std::invalid_argument("labels must match the integrals list length");

    const int n_ancilla = static_cast<int>(cfg.get_int("n_ancilla", 1, 20, 12));
    const auto n_shots = static_cast<std::uint64_t>(cfg.get_int("n_shots", 1, 10000000, 4096));
    const int base_steps = static_cast<int>(cfg.get_int("base_steps", 1, 1000000, 256));
    const int order = static_cast<int>(cfg.get_int("order", 1, 2, 2));
    const int shots_per_bit = static_cast<int>(cfg.get_int("shots_per_bit", 1, 1001, 15));
    const std::string reference = cfg.get_string("reference", "uniform");
    std::string method = cfg.get_string("method", "auto");
    const bool emit_spectra = cfg.get_int("emit_spectra", 0, 1, 0) != 0;
    cfg.require_all_consumed();

    if (method == "auto") method = n_ancilla <= 14 ? "textbook" : "iterative";
    if (method != "textbook" && method != "iterative")
        throw std::invalid_argument("method must be auto, textbook, or iterative");

    auto file = open_output(out_path);
    io::CsvWriter csv(file, {"label", "e_pea", "e_fci", "bits"});

    double max_deviation = 0.0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const auto integrals = io::parse_integrals_file(files[i]);
        const int m = integrals.n_spin_orbitals();
        if (m > kDenseCapQubits)
            throw resource_error("instance " + labels[i] + " exceeds the dense oracle cap");
        if (method == "textbook" && m + n_ancilla > 24)
            throw resource_error("instance " + labels[i] + " needs " +
                                 std::to_string(m + n_ancilla) + " qubits (cap 24)");

        const PauliSum h = assemble_hamiltonian(integrals);
        const EnergyWindow window = EnergyWindow::for_hamiltonian(h);
        const EigenSystem sys = diagonalize(h);
        const double e_fci = sys.eigenvalues(0);

        StateVector input = uniform_state(m);
        if (reference != "uniform") {
            if (static_cast<int>(reference.size()) != m)
                throw std::invalid_argument("reference length must equal the spin-orbital count");
            input = prepare_fock(std::string_view(reference));
        }

        const TrotterizedUnitary unitary(h, window, base_steps, order);
        SeededRng rng = SeededRng(seed).derive(i);
        double e_pea = 0.0;
        if (method == "textbook") {
            const SpectralResult result =
                phase_estimation(unitary, input, n_ancilla, window, n_shots, rng);
            if (result.aliasing_risk)
                err << "warning: " << labels[i] << ": aliasing risk (window may exclude "
                    << "an occupied eigenvalue)\n";

            // Ground-state estimate: the lowest line carrying real weight.
            const double floor = 0.02;
            double ground_weight = 0.0;
            bool found = false;
            for (const auto& line : result.lines) {
                if (line.weight < floor) continue;
                if (!found) {
                    e_pea = line.energy;
                    found = true;
                }
            }
            if (!found) e_pea = result.dominant().energy;
            const double bin = window.width() / std::ldexp(1.0, n_ancilla);
            for (const auto& line : result.lines)
                if (std::abs(line.energy - e_pea) <= 2.0 * bin) ground_weight += line.weight;
            if (ground_weight < 0.5)
                err << "warning: " << labels[i] << ": weight on the lowest phase is "
                    << io::format_g17(ground_weight)
                    << " < 0.5; the reference state overlaps the ground state poorly\n";
            if (emit_spectra) {
                auto spec = open_output(out_path + "." + labels[i] + ".spectrum.csv");
                io::write_spectral_csv(spec, result);
            }
        } else {
            const auto result = iterative_pea(unitary, input, n_ancilla, rng, shots_per_bit);
            if (!result.ambiguous_rounds.empty())
                err << "warning: " << labels[i] << ": " << result.ambiguous_rounds.size()
                    << " ambiguous bit(s); the input may not be a dominant eigenstate\n";
            e_pea = window.energy_of(result.phase);
        }

        csv.row({labels[i], io::format_g17(e_pea), io::format_g17(e_fci),
                 std::to_string(n_ancilla)});
        const double deviation = std::abs(e_pea - e_fci);
        max_deviation = std::max(max_deviation, deviation);
        out << labels[i] << ": e_pea=" << io::format_g17(e_pea)
            << " e_fci=" << io::format_g17(e_fci) << " deviation=" << io::format_g17(deviation)
            << "\n";
    }
    out << "max_deviation = " << io::format_g17(max_deviation) << "\n";
}

void run_dynamics(io::Config& cfg, std::uint64_t seed, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    (void)seed; // propagation is deterministic
    const int n_qubits = static_cast<int>(cfg.get_int("n_qubits", 1, 12));
    const double x_lo = cfg.get_double("x_lo", -1e6, 1e6);
    const double x_hi = cfg.get_double("x_hi", -1e6, 1e6);
    const int dims = static_cast<int>(cfg.get_int("dims", 1, 3, 1));
    const auto masses = cfg.get_double_list("masses");
    const auto charges = cfg.get_double_list("charges", std::vector<double>(masses.size(), 0.0));
    const std::string potential_kind = cfg.get_string("potential", "free");
    const GridSpec grid{n_qubits, x_lo, x_hi, dims};
    grid.validate();

    if (charges.size() != masses.size())
        throw std::invalid_argument("charges must match the masses list length");
    ParticleSet particles;
    for (std::size_t i = 0; i < masses.size(); ++i)
        particles.particles.push_back({masses[i], charges[i]});
    particles.validate();

    const int n_dof = particles.count() * dims;
    if (n_dof * n_qubits > 24)
        throw resource_error("register needs " + std::to_string(n_dof * n_qubits) +
                             " qubits (cap 24)");

    const auto centers = cfg.get_double_list("centers");
    const auto sigmas = cfg.get_double_list("sigmas");
    const auto momenta = cfg.get_double_list("momenta", std::vector<double>(centers.size(), 0.0));
    if (static_cast<int>(centers.size()) != n_dof || sigmas.size() != centers.size() ||
        momenta.size() != centers.size())
        throw std::invalid_argument("centers/sigmas/momenta must list one value per dof");

    const double t_total = cfg.get_double("t_total", -1e6, 1e6);
    const double dt = cfg.get_double("dt", -1e3, 1e3);
    const std::string splitting = cfg.get_string("splitting", "strang");
    if (splitting != "strang" && splitting != "first")
        throw std::invalid_argument("splitting must be strang or first");

    double omega = 0.0, softening = 0.0;
    if (potential_kind == "harmonic") omega = cfg.get_double("omega", 1e-9, 1e6);
    if (potential_kind == "coulomb")
        softening = cfg.get_double("softening", 0.0, 1e6, grid.dx() / 2.0);
    cfg.require_all_consumed();

    std::vector<GaussianSpec> packets;
    for (int d = 0; d < n_dof; ++d)
        packets.push_back({centers[static_cast<std::size_t>(d)],
                           sigmas[static_cast<std::size_t>(d)],
                           momenta[static_cast<std::size_t>(d)]});
    GridWavefunction wfn = init_gaussian(grid, particles, packets);

    DiagonalPotential v;
    if (potential_kind == "free") {
        v.assign(wfn.state().dim(), 0.0);
    } else if (potential_kind == "harmonic") {
        v = potential_on_grid(grid, particles, [&](std::span<const double> x) {
            double acc = 0.0;
            for (int d = 0; d < n_dof; ++d) {
                const double m = particles.particles[static_cast<std::size_t>(d / dims)].mass;
                acc += 0.5 * m * omega * omega * x[static_cast<std::size_t>(d)] *
                       x[static_cast<std::size_t>(d)];
            }
            return acc;
        });
    } else if (potential_kind == "coulomb") {
        if (particles.count() < 2)
            err << "warning: coulomb potential with a single particle is identically zero\n";
        v = coulomb_potential(grid, particles, softening);
    } else {
        throw std::invalid_argument("potential must be free, harmonic, or coulomb");
    }

    const ObservableTrace trace = propagate(wfn, v, t_total, dt, splitting == "strang");

    std::vector<std::string> header{"step", "time", "norm", "energy"};
    for (int d = 0; d < n_dof; ++d) {
        header.push_back("x" + std::to_string(d));
        header.push_back("p" + std::to_string(d));
    }
    auto file = open_output(out_path);
    io::CsvWriter csv(file, header);
    for (const auto& row : trace.rows) {
        std::vector<std::string> cells{std::to_string(row.step), io::format_g17(row.time),
                                       io::format_g17(row.norm), io::format_g17(row.energy)};
        for (int d = 0; d < n_dof; ++d) {
            cells.push_back(io::format_g17(row.x_mean[static_cast<std::size_t>(d)]));
            cells.push_back(io::format_g17(row.p_mean[static_cast<std::size_t>(d)]));
        }
        csv.row(cells);
    }
    out << "steps = " << trace.rows.size() - 1 << "\n";
    out << "final_norm = " << io::format_g17(trace.rows.back().norm) << "\n";
    out << "final_energy = " << io::format_g17(trace.rows.back().energy) << "\n";
}

void run_fold(io::Config& cfg, std::uint64_t seed, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    const auto t_runs =
        cfg.get_double_list("t_runs", {1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0});
    const double dt = cfg.get_double("dt", 1e-6, 10.0, 0.1);
    const int n_samples = static_cast<int>(cfg.get_int("n_samples", 0, 100000, 0));
    cfg.require_all_consumed();
    for (double t : t_runs)
        if (t < 0.0) throw std::invalid_argument("t_runs entries must be >= 0");

    emit_optimization_report(folding_instance(), t_runs, dt, n_samples, seed, out_path, out, err);
}

void run_qubo(io::Config& cfg, std::uint64_t seed, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    const std::string problem_path = cfg.get_string("problem");
    const auto t_runs =
        cfg.get_double_list("t_runs", {1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0});
    const double dt = cfg.get_double("dt", 1e-6, 10.0, 0.1);
    const int n_samples = static_cast<int>(cfg.get_int("n_samples", 0, 100000, 0));
    cfg.require_all_consumed();
    for (double t : t_runs)
        if (t < 0.0) throw std::invalid_argument("t_runs entries must be >= 0");

    const PuboProblem problem = io::parse_pubo_file(problem_path);
    const QuboReduction probe = reduce_to_qubo(problem);
    if (probe.n_reduced() > 20)
        throw resource_error("reduced problem needs " + std::to_string(probe.n_reduced()) +
                             " spins (cap 20 for annealing)");

    emit_optimization_report(problem, t_runs, dt, n_samples, seed, out_path, out, err);
}

void run_cets(io::Config& cfg, std::uint64_t seed, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    (void)seed;
    (void)err;
    const auto energies = cfg.get_double_list("energies");
    const double beta = cfg.get_double("beta", 0.0, 1e9);
    cfg.require_all_consumed();
    if (energies.size() > 4096)
        throw resource_error("spectrum with " + std::to_string(energies.size()) +
                             " levels exceeds the cap of 4096");

    const CetsSpec spec{energies, beta};
    const StateVector state = prepare_cets(spec);
    const auto weights = spec.gibbs_weights();
    const auto reduced = reduced_diagonal(state, state.n_qubits() / 2);

    auto file = open_output(out_path);
    io::CsvWriter csv(file, {"k", "energy", "gibbs_weight", "reduced_diagonal"});
    double max_deviation = 0.0;
    for (std::size_t k = 0; k < energies.size(); ++k) {
        csv.row({std::to_string(k), io::format_g17(energies[k]), io::format_g17(weights[k]),
                 io::format_g17(reduced[k])});
        max_deviation = std::max(max_deviation, std::abs(weights[k] - reduced[k]));
    }
    out << "levels = " << energies.size() << "\n";
    out << "partition_function = " << io::format_g17(spec.partition_function()) << "\n";
    out << "max_gibbs_deviation = " << io::format_g17(max_deviation) << "\n";
}

} // namespace qcsim::pipelines
