#pragma once

#include <iosfwd>

namespace posetsym {

// Command-line entry point. Returns 0 on success, 1 when a verification
// suite fails (or a scan's internal assertion fires), 2 on usage or input
// errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace posetsym
