#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinweigh {

// Exit codes: 0 success, 1 domain errors (including "does not exist"),
// 2 usage errors. Results go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinweigh
