#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gznt {

/// args excludes the program name. Exit codes: 0 ok, 1 a verification check failed,
/// 2 validation or usage error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gznt
