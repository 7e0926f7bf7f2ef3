/*
 * Copyright (c) 2026 qtda contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <iostream>

#include "qtda/cli.hpp"

int main(int argc, char** argv) {
    return qtda::cli::run(argc, argv, std::cout, std::cerr);
}
