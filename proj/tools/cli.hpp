#ifndef HTG_TOOLS_CLI_HPP_
#define HTG_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace htg {

  // Runs the htg command line with args (without the program name) and
  // returns the exit code: 0 success, 1 negative answer or failed checks,
  // 2 usage or input errors.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace htg

#endif  // HTG_TOOLS_CLI_HPP_
