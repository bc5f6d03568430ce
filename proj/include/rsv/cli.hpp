#ifndef RSV_CLI_HPP_
#define RSV_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rsv::cli {

inline constexpr const char* kVersion = "0.1.0";

//! Runs one command. Reports go to `out`, diagnostics to `err`.
//! Exit codes: 0 decided, 2 inconclusive or cap exceeded, 3 input error,
//! 4 internal error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rsv::cli

#endif  // RSV_CLI_HPP_
