#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlcut::cli {

/// Runs one command line. args excludes the program name. Returns 0 on
/// success, 1 on domain errors and 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nlcut::cli
