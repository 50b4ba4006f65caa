#pragma once

#include <iosfwd>

namespace pvarea {

// Entry point behind main(). Subcommands:
//   analyze <file> | --gen family:args   [--model] [--decompose|--no-decompose]
//                                        [--json] [--oracle-check] [--timings]
//   bench <spec>...
// Returns 0 on success, 1 on parse or validation errors, 2 on internal
// invariant violations (including oracle mismatches).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace pvarea
