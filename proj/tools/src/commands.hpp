#pragma once

#include <iosfwd>

#include "config.hpp"
#include "finsler/zoo/zoo.hpp"

namespace finsler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// The zoo entry a selector names, in dimension n.
zoo::ZooEntry resolve_entry(const Selector& sel, int n);

int cmd_report(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_scan(const RunConfig& cfg, std::ostream& out);
int cmd_zoo_list(const RunConfig& cfg, std::ostream& out);

/// Parses argv, dispatches and maps exceptions to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace finsler::cli
