#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "detrep/io.hpp"

namespace detrep {

/// Runs one CLI invocation. Exit codes: 0 success, 1 refutation or
/// negative result, 2 malformed input, 3 internal invariant violation.
int command_dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Seeded property suite over all modules; returns true when every
/// property holds. One line per suite is written to `out`.
bool run_selftest(std::uint64_t seed, std::size_t trials, FieldTag field, std::uint64_t prime,
                  std::ostream& out);

} // namespace detrep
