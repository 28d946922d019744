/** @file cli.hpp
 *  @brief Batch front end: subcommands build, verify, invariants, similar, brauer and catalog.
 */
#pragma once

#include <iosfwd>

namespace d4::cli {

/// Exit codes: 0 pass, 1 verification failure, 2 usage or parameter error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace d4::cli
