#pragma once

#include <iosfwd>

#include "hcross_harness/config.hpp"

namespace hcross::harness {

// Each command writes its primary output to `out` and returns the process
// exit code. Library errors propagate as exceptions; see exit_code_for().

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTolerance = 3;
inline constexpr int kExitCapacity = 4;

int cmd_sets(const RunConfig& cfg, std::ostream& out);
int cmd_lemmas(const RunConfig& cfg, std::ostream& out);
int cmd_norms(const RunConfig& cfg, std::ostream& out);
int cmd_kernels_selfcheck(std::ostream& out);
int cmd_rates(const RunConfig& cfg, std::ostream& out);
/// Writes cfg.output (polynomial file) and cfg.output + ".json" (diagnostics).
int cmd_witness(const RunConfig& cfg, std::ostream& out);
int cmd_verify_all(const RunConfig& cfg, std::ostream& out);

/// Maps a caught exception to 2 (usage/domain), 3 (tolerance) or 4 (capacity).
int exit_code_for(const std::exception& e);

}  // namespace hcross::harness
