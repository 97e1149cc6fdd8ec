#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace salem::cli {

/// Runs one CLI invocation.  Returns 0 on success, 2 on usage errors,
/// 3 on domain errors; diagnostics go to `err`, results to `out` unless
/// --out redirects them to a file.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace salem::cli
