#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxmaxflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

// Runs one subcommand. args[0] is the subcommand, not the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string base64_encode(const std::string& bytes);
// Throws std::invalid_argument on malformed input.
std::string base64_decode(const std::string& text);
std::string sha256_hex(const std::string& bytes);

}  // namespace maxmaxflow::cli
