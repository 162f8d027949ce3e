#pragma once

#include <iosfwd>

#include "cryptoeq/config.hpp"

namespace cryptoeq {

/// Dispatches a validated RunConfig to the named solver and streams the
/// report (JSON or CSV) to `out`.  Returns the process exit status:
/// 0 success, 1 solver precondition failure, 2 configuration error.
/// Warnings and error messages go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cryptoeq
