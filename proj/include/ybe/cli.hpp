#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybe {

// Entry point behind the ybe binary. Exit codes: 0 all requested identities
// pass, 1 identity failure, 2 malformed input/usage, 3 resource refusal.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

// Number of worker threads for corpus-wide fan-out; reads YBE_WORKERS,
// defaults to 1. Results are merged in deterministic order regardless.
int worker_count();

}  // namespace ybe
