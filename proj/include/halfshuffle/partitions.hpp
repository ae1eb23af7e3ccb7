#pragma once

#include "halfshuffle/words.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace halfshuffle {

/// Largest ground set accepted by the enumerators (Bell(10) = 115975).
inline constexpr int kMaxPartitionSize = 10;

/// Set partition of [n]; blocks are increasing and ordered by minimum.
struct Partition
{
	int n = 0;
	std::vector<Positions> blocks;

	friend bool operator==(const Partition&, const Partition&) = default;
	friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

enum class PartitionFamily { non_crossing, all };

/// True if no i<j<k<l has i,k in one block and j,l in another.
bool is_non_crossing(const Partition& p);

/// All set partitions via restricted growth strings, in RGS order.
/// Throws std::out_of_range unless 1 ≤ n ≤ kMaxPartitionSize.
std::vector<Partition> enumerate_partitions(int n);

/// enumerate_partitions(n) filtered by the quadruple crossing test.
std::vector<Partition> enumerate_nc(int n);

/// Direct generator: choose the block of 1, then recurse independently on
/// the gaps it leaves. Same set as enumerate_nc, different order.
std::vector<Partition> enumerate_nc_recursive(int n);

std::vector<Partition> enumerate(PartitionFamily family, int n);

/// Word-indexed values, e.g. cumulants κ(w) or moments φ(w).
using WordValues = std::map<Word, Rational>;

/// Σ_π Π_blocks values(a_block). Throws std::out_of_range when a needed
/// subword has no value.
Rational partition_moment(const WordValues& cumulants, const Word& w, PartitionFamily family);

/// The κ(w) for which partition_moment reproduces moments(w), obtained by
/// recursion on degree: κ(w) = φ(w) − Σ_{π ≠ 1_n} Π κ(a_block).
Rational partition_cumulant_inversion(const WordValues& moments, const Word& w,
                                      PartitionFamily family);

/// partition_cumulant_inversion for every word of degree ≤ order
/// over the given alphabet size, sharing the recursion.
WordValues partition_cumulants(const WordValues& moments, int alphabet_size, int order,
                               PartitionFamily family);

} // namespace halfshuffle
