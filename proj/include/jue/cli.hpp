#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jue {

// Exit codes: 0 ok, 1 failed comparison, 2 parse error, 3 guard violation,
// 4 pole under numeric specialization.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jue
