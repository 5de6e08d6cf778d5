#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mag {

/// Command-line entry point, exposed for in-process testing. Results go to
/// out, diagnostics to err. Exit codes: 0 success, 1 negative answer (not
/// isomorphic, unreachable, no cycle), 2 usage error, 3 parse or build
/// error, 4 search budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mag
