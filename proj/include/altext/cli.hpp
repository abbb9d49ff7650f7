#ifndef ALTEXT_CLI_HPP
#define ALTEXT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace altext {

/// Command dispatch for the altext tool.  Exit codes: 0 = pass/solved,
/// 1 = fail/unsolvable/obstruction (obstruction cochains are printed),
/// 2 = usage or input error.  All output is deterministic.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altext

#endif
