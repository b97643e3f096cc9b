// Command-line front end. run() takes the arguments after the program name
// and returns the exit status: 0 success, 2 parse error, 3 library error,
// 4 resource bound exceeded.

#ifndef REDGRP_CLI_HPP_
#define REDGRP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace redgrp::cli {

inline constexpr int kExitParse = 2;
inline constexpr int kExitLibrary = 3;
inline constexpr int kExitTooLarge = 4;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redgrp::cli

#endif  // REDGRP_CLI_HPP_
