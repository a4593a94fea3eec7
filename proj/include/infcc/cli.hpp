#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infcc::cli {

/// Runs one command; args[0] is the program name. Returns the exit code:
/// 0 success, 1 usage or input error, 2 refusal (unreachable object,
/// infinite crosser set, non locally finite triangulation) with a JSON
/// diagnostic on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infcc::cli
