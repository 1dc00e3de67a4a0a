#pragma once

#include "gca/algebra.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gca::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Catalog name[:k=v,...] or a path to an algebra JSON file.
GradedAlgebra resolve_target(const std::string& target);

/// Runs one command; args exclude the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gca::cli
