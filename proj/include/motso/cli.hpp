#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motso::cli {

// Runs one command. Exit code 0 on success / all checks passing, 1 when a
// verification fails, 2 on usage or parse errors. Reports go to `out`,
// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motso::cli
