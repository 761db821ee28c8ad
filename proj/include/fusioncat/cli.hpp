#ifndef FUSIONCAT_CLI_HPP
#define FUSIONCAT_CLI_HPP

#include <ostream>

namespace fusioncat {

// Exit codes: 0 success, 1 verification failure, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fusioncat

#endif  // FUSIONCAT_CLI_HPP
