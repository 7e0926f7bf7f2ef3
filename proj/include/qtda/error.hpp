/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qtda {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad matrix, bad dimension, empty set, ...).
/// The CLI maps this to exit code 2.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Numerical failure: eigensolver non-convergence, integer overflow in exact
/// elimination, ill-separated spectra. The CLI maps this to exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace qtda
