#pragma once

#include <ostream>

namespace rothkit::cli {

// Exit codes: 0 every check passed, 1 a check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rothkit::cli
