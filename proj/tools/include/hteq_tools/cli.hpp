#pragma once

#include <ostream>

namespace hteq::cli {

namespace exit_code {
inline constexpr int yes = 0;      ///< equivalent, found, provable
inline constexpr int no = 1;       ///< not equivalent, none found, refuted
inline constexpr int unknown = 2;  ///< undecided within bounds, or a guard refused the input
inline constexpr int error = 3;    ///< bad arguments, unreadable or malformed input
}  // namespace exit_code

/// Runs the `hteq` command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hteq::cli
