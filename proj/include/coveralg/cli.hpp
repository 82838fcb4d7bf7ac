#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coveralg {

/// Parses and runs one CLI invocation. Reports go to `out`, warnings and
/// usage errors to `err`. Exit codes: 0 the property holds or the value was
/// computed, 1 the property was refuted (witness in the report), 2 usage or
/// input error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace coveralg
