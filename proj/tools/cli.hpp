#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace weber::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Primary output goes to
/// `out` or to the --out file; warnings and structured errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used to derive default seeds from the flag set.
std::uint64_t fnv1a(const std::string& text);

}  // namespace weber::cli
