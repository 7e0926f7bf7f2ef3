/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <ostream>

namespace qtda::cli {

/// Runs one subcommand. Exit codes: 0 success, 2 invalid input, 3 numerical
/// failure, 4 unreliable Betti estimate.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qtda::cli
