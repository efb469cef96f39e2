#ifndef CATBOX_TOOLS_CLI_HPP
#define CATBOX_TOOLS_CLI_HPP

#include <iosfwd>

namespace catbox {

// Subcommands: eval, search, prove, formula, simulate, tables, trace,
// presets. Exit codes: 0 success, 1 computation failure or table mismatch,
// 2 usage error. Errors go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catbox

#endif  // CATBOX_TOOLS_CLI_HPP
