#pragma once

#include <ostream>
#include <string>

#include "reinhardt/types.hpp"
#include "run_config.hpp"

namespace reinhardt::cli {

/// "r=r1,...;theta=t1,..." (theta optional, default 0) or "z=re:im,...".
ComplexVector parse_point(const std::string& spec, int dim);

/// Runs one command; output goes to config.out, or to `out` when that is empty.
/// Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Argument parsing plus run(); parse and usage errors map to kExitError.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reinhardt::cli
