#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eigencount {

/// Published default seed for the reproducible Monte Carlo runs.
inline constexpr std::uint64_t kPublishedSeed = 20240811ULL;

/// Runs the command line given as argv-style tokens (without the program
/// name). Tables go to `out` unless --out redirects them to a file; progress
/// and verification lines go to `err`.
/// Exit codes: 0 success, 1 usage or validation error, 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigencount
