#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumeric = 2;

/// Runs one command line. Results go to `out` (or the --out file); usage
/// and diagnostics go to `err`. Returns 0 on success, 1 on a validation or
/// usage error, 2 on a numeric failure.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a CSV matrix: one row per line, comma or whitespace separated,
/// blank lines and '#' comments ignored.
std::vector<std::vector<double>> read_matrix_csv(std::istream& in);

}  // namespace sfperm::cli
