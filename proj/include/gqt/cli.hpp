#ifndef GQT_CLI_HPP_
#define GQT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gqt {

// args excludes the program name. Reports go to out; usage errors to err.
// Returns 0 on success, 1 on a domain error (error JSON on out), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqt

#endif  // GQT_CLI_HPP_
