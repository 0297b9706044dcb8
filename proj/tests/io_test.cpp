/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#include <sstream>

#include <gtest/gtest.h>

#include "qcsim/errors.hpp"
#include "qcsim/io.hpp"
#include "support/oracles.hpp"

using namespace qcsim;
using namespace qcsim::io;

TEST(Integrals, MinimalFileParses) {
    std::istringstream in("M 1\n1e 1 1 -0.5\n");
    const auto h = parse_integrals(in);
    EXPECT_EQ(h.n_spin_orbitals(), 1);
    EXPECT_EQ(h.one_body(0, 0), -0.5);
}

TEST(Integrals, EmptyBodyIsZeroHamiltonian) {
    std::istringstream in("M 3\n");
    const auto h = parse_integrals(in);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) EXPECT_EQ(h.one_body(p, q), 0.0);
}

TEST(Integrals, SymmetricDuplicatesAcceptedUnequalRejected) {
    std::istringstream ok("M 2\n1e 1 2 0.25\n1e 2 1 0.25\n");
    EXPECT_NO_THROW(parse_integrals(ok));

    std::istringstream bad("M 2\n1e 1 2 0.25\n1e 2 1 0.5\n");
    EXPECT_THROW(parse_integrals(bad), parse_error);
}

TEST(Integrals, MirrorEntryIsImplied) {
    std::istringstream in("M 2\n1e 1 2 0.25\n");
    const auto h = parse_integrals(in);
    EXPECT_EQ(h.one_body(0, 1), 0.25);
    EXPECT_EQ(h.one_body(1, 0), 0.25);

    std::istringstream in2("M 2\n2e 1 2 2 1 0.7\n");
    const auto h2 = parse_integrals(in2);
    EXPECT_EQ(h2.two_body(0, 1, 1, 0), 0.7);
}

TEST(Integrals, MalformedLineReportsLineNumber) {
    std::istringstream in("M 2\n1e 1 1 0.5\n1e nope\n");
    try {
        parse_integrals(in);
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Integrals, IndexBeyondMIsDomainError) {
    std::istringstream in("M 2\n1e 1 3 0.5\n");
    EXPECT_THROW(parse_integrals(in), std::invalid_argument);
}

TEST(Integrals, MissingHeaderIsRejected) {
    std::istringstream in("1e 1 1 0.5\n");
    EXPECT_THROW(parse_integrals(in), parse_error);
}

TEST(Integrals, SampleFileIsHermitianAndM4) {
    const auto h = parse_integrals_file(std::string(QCSIM_DATA_DIR) + "/sample_m4.ints");
    EXPECT_EQ(h.n_spin_orbitals(), 4);
    EXPECT_NO_THROW(h.validate());
}

TEST(PuboFile, TermsConstantsAndCollection) {
    std::istringstream in("vars 3\nc 1 2 -1.5\nc 3 0.25\nc 0.5\nc 3 0.25\n");
    const auto p = parse_pubo(in);
    EXPECT_EQ(p.n_vars(), 3);
    // q1 q2 term, q3 collected to 0.5, constant 0.5
    EXPECT_EQ(p.energy(0b000), 0.5);
    EXPECT_EQ(p.energy(0b100), 1.0);
    EXPECT_EQ(p.energy(0b011), -1.0);
}

TEST(PuboFile, RejectsDescendingIndicesAndRange) {
    std::istringstream bad_order("vars 3\nc 2 1 1.0\n");
    EXPECT_THROW(parse_pubo(bad_order), parse_error);
    std::istringstream bad_range("vars 3\nc 4 1.0\n");
    EXPECT_THROW(parse_pubo(bad_range), std::invalid_argument);
}

TEST(Csv, WriterRoundTripsDoublesExactly) {
    SeededRng rng(151);
    std::vector<double> values;
    std::normal_distribution<double> gauss(0.0, 1e3);
    for (int i = 0; i < 64; ++i) values.push_back(gauss(rng.engine()));
    values.push_back(1.0 / 3.0);
    values.push_back(-0.1);
    values.push_back(12345678901234.5678);

    std::ostringstream out;
    CsvWriter csv(out, {"value"});
    for (double v : values) csv.row({format_g17(v)});

    std::istringstream in(out.str());
    const CsvTable table = read_csv(in);
    ASSERT_EQ(table.header, std::vector<std::string>{"value"});
    ASSERT_EQ(table.rows.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double parsed = std::stod(table.rows[i][0]);
        EXPECT_EQ(parsed, values[i]); // bit-exact round trip
    }
}

TEST(Csv, LfLineEndingsAndCommaSeparation) {
    std::ostringstream out;
    CsvWriter csv(out, {"a", "b"});
    csv.row({"1", "2"});
    EXPECT_EQ(out.str(), "a,b\n1,2\n");
    EXPECT_THROW(csv.row({"only-one"}), std::invalid_argument);
}

TEST(Config, ParsesTypesAndDefaults) {
    std::istringstream in(
        "# comment line\n"
        "n_ancilla = 12\n"
        "dt = 0.25  # trailing comment\n"
        "labels = a, b, c\n"
        "flag = 1\n");
    Config cfg = Config::parse(in);
    EXPECT_EQ(cfg.get_int("n_ancilla", 1, 20), 12);
    EXPECT_EQ(cfg.get_double("dt", 0.0, 1.0), 0.25);
    EXPECT_EQ(cfg.get_list("labels"), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(cfg.get_int("flag", 0, 1), 1);
    EXPECT_EQ(cfg.get_int("missing", 0, 10, 7), 7);
    EXPECT_NO_THROW(cfg.require_all_consumed());
}

TEST(Config, RejectsOutOfRangeAndUnknownKeys) {
    std::istringstream in("n_ancilla = 99\nsurprise = 1\n");
    Config cfg = Config::parse(in);
    EXPECT_THROW(cfg.get_int("n_ancilla", 1, 20), std::invalid_argument);
    EXPECT_THROW(cfg.require_all_consumed(), std::invalid_argument);
}

TEST(Config, RejectsDuplicatesAndMalformedLines) {
    std::istringstream dup("a = 1\na = 2\n");
    EXPECT_THROW(Config::parse(dup), parse_error);
    std::istringstream bad("just some words\n");
    EXPECT_THROW(Config::parse(bad), parse_error);
}

TEST(SpectralCsv, MatchesDocumentedColumns) {
    SpectralResult result;
    result.n_ancilla = 4;
    result.window = EnergyWindow{-1.0, 1.0};
    result.n_shots = 100;
    result.lines.push_back({5, 5.0 / 16.0, -1.0 + 2.0 * 5.0 / 16.0, 0.75});

    std::ostringstream out;
    write_spectral_csv(out, result);
    std::istringstream in(out.str());
    const CsvTable table = read_csv(in);
    ASSERT_EQ(table.header, (std::vector<std::string>{"bits", "phase", "energy", "weight"}));
    ASSERT_EQ(table.rows.size(), 1u);
    EXPECT_EQ(table.rows[0][0], "5");
    EXPECT_EQ(std::stod(table.rows[0][1]), 5.0 / 16.0);
}

TEST(Amplitudes, ParsesAndRejects) {
    std::istringstream in("0.5 0\n-0.5 0.25\n# comment\n0 0\n0 0\n");
    const auto amps = read_amplitudes(in);
    ASSERT_EQ(amps.size(), 4u);
    EXPECT_EQ(amps[1], cplx(-0.5, 0.25));

    std::istringstream bad("0.5\n");
    EXPECT_THROW(read_amplitudes(bad), parse_error);
}
