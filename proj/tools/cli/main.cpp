// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
    return molpea::cli::run(argc, argv, std::cout, std::cerr);
}
