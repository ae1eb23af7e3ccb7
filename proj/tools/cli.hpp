#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halfshuffle::cli {

enum ExitCode : int
{
	success = 0,
	verification_failed = 1,
	input_error = 2,
	guard_violation = 3,
};

/// Largest order accepted by `transform`. Multivariate tables are further
/// limited to at most kMaxTableWords words of the top degree.
inline constexpr int kMaxTransformOrder = 12;
inline constexpr long kMaxTableWords = 1024;

/// Runs the command line `halfshuffle <args...>` (program name excluded).
/// `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace halfshuffle::cli
