#pragma once

// Command-line front end: every derivation and analysis as a batch
// subcommand with machine-readable output. Exit code 0 on success, 1 on
// domain errors (the error name is printed), 2 on usage errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace lctk::cli {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lctk::cli
