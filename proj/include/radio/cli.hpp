#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radio {

/// Command-line entry point. args excludes the program name. Returns 0 on
/// success, 1 on usage errors, 2 when computed bounds contradict certified
/// data.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace radio
