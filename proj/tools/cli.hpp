#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cfkit/exact_real.hpp"

namespace cfkit::cli {

/// Dispatches one CLI invocation. Exit code 0 on success, 2 on usage
/// errors, 1 on domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a real argument: "p/q", "(a+b*sqrt(d))/c", "sqrt(d)" or one of
/// the named constants golden, sqrt2m1, sqrt3m1.
ExactReal parse_real_argument(const std::string& text);

} // namespace cfkit::cli
