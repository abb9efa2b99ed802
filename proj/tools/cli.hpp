#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skb::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 when a verification fails (the report is still written) and 2 on usage
/// or input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skb::cli
