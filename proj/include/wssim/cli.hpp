#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace wssim::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kIngestFailure = 3,
    kFormatFailure = 4,
    kIoFailure = 5,
};

/// Runs one command line (args excludes the program name) and returns its exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wssim::cli
