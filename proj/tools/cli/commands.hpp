// Copyright 2026 The molpea Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. run() is the whole program minus process exit, so
// tests can drive it in-process.

#pragma once

#include <ostream>

#include "molpea/errors.hpp"

namespace molpea::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,      // unexpected internal error
    kExitUsage = 2,        // bad flags or values
    kExitInput = 3,        // unreadable or malformed input
    kExitDomain = 4,       // request outside the supported domain
    kExitPreparation = 5,  // initial state overlap below the floor
    kExitNumerics = 6,     // numerical or symmetry failure
    kExitCapacity = 7,     // simulator or oracle size cap exceeded
    kExitMismatch = 8,     // artifacts written but the oracle cross-check failed
};

[[nodiscard]] int exit_code_for(ErrorKind kind) noexcept;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "MOLPEA_OUTPUT_DIR";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace molpea::cli
