#pragma once

#include <string>
#include <vector>

namespace qcat::cli {

// Entry point shared by the binary and the tests.  Returns the process exit
// code: 0 all requested checks pass, 1 a verification failed, 2 usage or
// input errors.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

} // namespace qcat::cli
