/*******************************************************************************
 * Copyright (c) 2026 The qcsim authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace qcsim {

/// Thrown when an exact (dense/enumeration) code path would exceed its size cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed input files; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace qcsim
