#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace halfshuffle {

/// Largest order accepted by the verification suites.
inline constexpr int kMaxVerifyOrder = 8;

struct VerifyConfig
{
	int order = 5;
	std::uint64_t seed = 1;
	/// Random samples per property.
	int trials = 5;
};

struct SuiteResult
{
	std::string name;
	bool passed = true;
	/// Checks performed, or the first counterexample when failing.
	std::string detail;
};

/// coproduct, unshuffle, classical-coproduct, shuffle, prelie, exponentials,
/// characters, magnus, free, classical, cluster, series
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name
/// and std::out_of_range when the order is outside [1, kMaxVerifyOrder].
/// Bar-mode suites use a two-letter alphabet up to order 5 and a single
/// letter above.
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

} // namespace halfshuffle
