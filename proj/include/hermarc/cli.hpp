// Command-line front end. Exit codes: 0 claims confirmed / values agree,
// 1 usage or construction error, 2 claims refuted / values disagree.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hermarc/gf.hpp"

namespace hermarc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRefuted = 2;

/// args excludes the program name. The report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "c0,c1,...,c_{m-1}" or a single scalar meaning the constant.
gf::Elem parse_element(const gf::Field& f, const std::string& text);

} // namespace hermarc::cli
