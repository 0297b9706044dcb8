/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "pipelines.hpp"
#include "qcsim/errors.hpp"

namespace {

struct SubcommandArgs {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 1;
};

using Runner = std::function<void(qcsim::io::Config&, std::uint64_t, const std::string&,
                                  std::ostream&, std::ostream&)>;

void attach(CLI::App& app, const std::string& name, const std::string& description,
            SubcommandArgs& args, bool config_required, Runner runner, int& exit_code) {
    CLI::App* sub = app.add_subcommand(name, description);
    auto* config = sub->add_option("--config,-c", args.config_path, "flat key = value file");
    if (config_required) config->required();
    sub->add_option("--seed,-s", args.seed, "measurement-sampling seed");
    sub->add_option("--out,-o", args.out_path, "output CSV path")->required();
    sub->callback([&args, runner = std::move(runner), &exit_code, name] {
        try {
            qcsim::io::Config cfg = args.config_path.empty()
                                        ? qcsim::io::Config{}
                                        : qcsim::io::Config::parse_file(args.config_path);
            runner(cfg, args.seed, args.out_path, std::cout, std::cerr);
            exit_code = 0;
        } catch (const qcsim::resource_error& e) {
            std::cerr << name << ": " << e.what() << "\n";
            exit_code = 3;
        } catch (const qcsim::parse_error& e) {
            std::cerr << name << ": " << e.what() << "\n";
            exit_code = 2;
        } catch (const std::invalid_argument& e) {
            std::cerr << name << ": " << e.what() << "\n";
            exit_code = 2;
        } catch (const std::exception& e) {
            std::cerr << name << ": unexpected error: " << e.what() << "\n";
            exit_code = 1;
        }
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qcsim: statevector emulation of quantum-chemistry algorithms"};
    app.require_subcommand(1);

    int exit_code = 0;
    SubcommandArgs pea, dynamics, fold, qubo, cets;
    attach(app, "pea", "phase-estimation energies for second-quantized instances", pea, true,
           qcsim::pipelines::run_pea, exit_code);
    attach(app, "dynamics", "split-operator wavepacket propagation", dynamics, true,
           qcsim::pipelines::run_dynamics, exit_code);
    attach(app, "fold", "built-in lattice-folding instance: landscape and annealing", fold, false,
           qcsim::pipelines::run_fold, exit_code);
    attach(app, "qubo", "annealing for a QUBO/PUBO problem file", qubo, true,
           qcsim::pipelines::run_qubo, exit_code);
    attach(app, "cets", "coherent thermal-state encoding from a known spectrum", cets, true,
           qcsim::pipelines::run_cets, exit_code);

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
