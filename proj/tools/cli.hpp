#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace refl::cli {

/// Exit statuses of the refl tool.
enum Exit : int {
    kPass = 0,
    kTheoremFailed = 1,
    kUsage = 2,
    kResourceCap = 3,
};

/// Runs the refl command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace refl::cli
