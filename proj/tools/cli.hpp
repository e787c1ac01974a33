#pragma once

namespace netpot::cli {

// Exit codes: 0 = success / verdict true, 1 = verdict false or infeasible,
// 2 = input error.
int run(int argc, const char* const* argv);

}  // namespace netpot::cli
