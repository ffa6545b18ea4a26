#pragma once

#include "lrpr/serialize.hpp"

#include <string>

namespace lrpr::cli {

inline constexpr const char* kToolVersion = "lrpr 0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;    // bad config, missing inputs
inline constexpr int kExitNumeric = 2;  // solver non-convergence, failed battery

/// Dispatches one subcommand.  Every command is a pure function of
/// (config, input files): rerunning with the same inputs reproduces
/// byte-identical artifacts.  Errors are reported on stderr.
int run_command(const std::string& command, const json& config, const std::string& outdir,
                int workers, bool quiet);

} // namespace lrpr::cli
