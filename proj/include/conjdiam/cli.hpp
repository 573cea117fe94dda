#pragma once

#include <iosfwd>

namespace conjdiam {

/// Entry point of the conjdiam command-line tool.  Returns 0 on success, 1
/// when verification finds a mismatch, 2 on usage or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conjdiam
