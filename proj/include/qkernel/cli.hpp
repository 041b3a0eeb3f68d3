#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qkernel {

// Command-line front door. Subcommands: table, beta, bernstein-matrix,
// bernstein-eval, padic-probe, audit.
//
// Exit codes: 0 success, 1 usage error, 2 audit verdict drift against
// --expect.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qkernel
