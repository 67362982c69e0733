#pragma once

#include <ostream>

namespace imag {

/// Parses and runs one imagctl command. Returns the process exit status:
/// 0 on success, 1 when a verification check fails or a computation
/// raises, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace imag
