#pragma once

#include <ostream>

namespace zzm::cli {

/// argv[0] is the program name. The artifact goes to --out or `out`; module
/// errors are written to `err` as {"error":{"kind","message"[,"position"]}}.
/// Exit status 0, 1 on errors, 2 when `check` finds a violated invariant.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zzm::cli
