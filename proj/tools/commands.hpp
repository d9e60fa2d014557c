// commands.hpp — Subcommand implementations returning process exit codes

#pragma once

#include "config.hpp"

namespace gaudin::cli {

// Exit codes: 0 success/all-pass, 1 failed check, 2 config error (thrown as
// ConfigError), 3 dimension cap (thrown as DimensionCap).
int cmd_verify(const RunConfig& config);
int cmd_charges(const RunConfig& config);
int cmd_spectrum(const RunConfig& config);
int cmd_sweep(const RunConfig& config);

} // namespace gaudin::cli
