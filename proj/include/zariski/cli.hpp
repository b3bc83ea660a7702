#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zariski::cli {

enum class OutputFormat { text, json, csv };

/// Runs the command line given by args (without the program name), writing
/// to the supplied streams. Returns the process exit code: 0 on success,
/// 1 on verification/domain failures, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zariski::cli
