#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootbounds {

/// Front end behind the `rootbounds` binary. `args` excludes the program
/// name; `in` backs the "-" stdin convention. Returns 0 on success, 1 when
/// `verify` detects a soundness violation, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace rootbounds
