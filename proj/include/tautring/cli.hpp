#ifndef TAUTRING_CLI_HPP
#define TAUTRING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tautring {

/// Run the command-line surface on an argument vector (without argv[0]).
/// Returns the process exit code: 0 on success / all checks passing, 1 when
/// any verification check fails, 2 on usage errors. Identical inputs produce
/// byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautring

#endif
