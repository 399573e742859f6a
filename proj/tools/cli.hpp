// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tiltcli {

/// Runs the command line (args excludes the program name). Reports go to out,
/// diagnostics to err. Returns 0 pass, 1 verification failure, 2 invalid input, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltcli
