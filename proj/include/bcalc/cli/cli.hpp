#pragma once

#include <iosfwd>

namespace bcalc {

/// Exit codes: 0 success, 1 verdict false or failed certificate, 2 input error, 3 resource cap.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bcalc
