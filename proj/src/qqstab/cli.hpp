/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>

#include "qqstab/config.hpp"

namespace qqstab::cli {

/// Exit codes shared by every command runner.
///   0  success
///   1  check violated / limit not converged / bound failed
///   2  configuration or parse error (including unknown command)
///   3  overflow guard tripped, results truncated
///   4  perturbation hypothesis not satisfied
struct CommandResult {
  int exit_code = 0;
  std::string summary;
};

/// Resolves the report directory: `out` key if non-empty, else the
/// QQSTAB_OUT_DIR environment variable, else ".". Creates it if needed.
std::string output_dir(const ExperimentConfig& cfg);

CommandResult run_check_solution(const ExperimentConfig& cfg);
CommandResult run_recover(const ExperimentConfig& cfg);
CommandResult run_verify_bounds(const ExperimentConfig& cfg);
CommandResult run_axioms(const ExperimentConfig& cfg);
CommandResult run_tnorm_tail(const ExperimentConfig& cfg);

/// Dispatches on command name ("check-solution", "recover", "verify-bounds",
/// "axioms", "tnorm-tail"); unknown names yield exit code 2. Exceptions are
/// converted to exit code 2 with the message in the summary.
CommandResult run_command(const std::string& command,
                          const ExperimentConfig& cfg);

}  // namespace qqstab::cli
