#pragma once

#include <ostream>
#include <string>

#include "fbc/configuration.hpp"

namespace fbc::cli {

/// Runs one command line; returns the process exit code
/// (0 success, 1 domain failure, 2 input failure).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Golden-report fields of one configuration, as a JSON object text.
std::string corpus_report(const Configuration& config);

}  // namespace fbc::cli
