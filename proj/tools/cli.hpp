#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semidyn/checks.hpp"
#include "semidyn/config.hpp"

namespace semidyn::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one subcommand. args[0] is the program name.
///   render-julia    --config <path> [--out <pgm>] [--threads <n>]
///   render-escaping --config <path> [--out <pgm>] [--threads <n>]
///   sample-ifs      --config <path> [--out <csv>] [--seed <u64>]
///   check           --config <path> --suite <invariance|identities|references|all>
///                   [--report <path>] [--threads <n>] [--seed <u64>]
///   catalog
/// SEMIDYN_THREADS is read when --threads is absent.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Every check of a suite for one scene, sorted by check name.
std::vector<CheckReport> run_suite(const SceneConfig& config, const std::string& suite,
                                   int threads);

}  // namespace semidyn::cli
