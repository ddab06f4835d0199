#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crg::cli {

/// Runs one `crg` invocation. args excludes the program name. JSON goes to
/// out, human-readable summaries and errors to err. Returns 0 on success, 1
/// when a mathematical check fails, 2 on usage, input or budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crg::cli
