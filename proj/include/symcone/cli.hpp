#pragma once

#include <ostream>

namespace symcone {

/// Runs a subcommand. Returns 0 when every check passes, 1 when a check
/// fails or an input is rejected, 2 on usage errors.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace symcone
