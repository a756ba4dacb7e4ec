#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmreg {

// Runs the command-line interface against the given argument list (excluding
// argv[0]). Results go to out, diagnostics to err. Exit code 0 on success,
// 2 on validation/user errors, 1 on internal assertion failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cmreg
