#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilcent {

/// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcent
