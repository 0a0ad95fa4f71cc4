#pragma once

/**
 * @file cli.hpp
 * @brief Command-line surface. JSON envelopes on stdout, logs on stderr.
 *
 * Exit codes: 0 completed, 2 usage error, 3 precondition error,
 * 4 internal invariant fault.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclo::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
