#pragma once

#include <ostream>

namespace cogsem::cli {

enum Exit : int { ok = 0, rejected = 1, bad_input = 2 };

// Runs one command line. Everything the command prints goes to `out`;
// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cogsem::cli
