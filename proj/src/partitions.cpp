#include "halfshuffle/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace halfshuffle {

namespace {

void check_size(int n)
{
	if (n < 1 || n > kMaxPartitionSize)
		throw std::out_of_range("partition size must be in [1, " +
		                        std::to_string(kMaxPartitionSize) + "], got " + std::to_string(n));
}

Partition from_rgs(const std::vector<int>& rgs)
{
	Partition p;
	p.n = static_cast<int>(rgs.size());
	for (int i = 0; i < p.n; ++i)
	{
		if (rgs[i] == static_cast<int>(p.blocks.size()))
			p.blocks.emplace_back();
		p.blocks[rgs[i]].push_back(i + 1);
	}
	return p;
}

// Non-crossing partitions of an increasing list of positions.
std::vector<std::vector<Positions>> nc_blocks(const Positions& ground)
{
	if (ground.empty())
		return {{}};
	std::vector<std::vector<Positions>> result;
	const int m = static_cast<int>(ground.size());
	// block of the first element: ground[0] together with any subset of the rest
	for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask)
	{
		Positions first{ground[0]};
		for (int i = 1; i < m; ++i)
			if ((mask >> (i - 1)) & 1u)
				first.push_back(ground[i]);
		// gaps between consecutive elements of the first block, plus the tail
		std::vector<Positions> gaps;
		Positions cur;
		std::size_t next = 1;
		for (int i = 1; i < m; ++i)
		{
			if (next < first.size() && ground[i] == first[next])
			{
				++next;
				if (!cur.empty())
					gaps.push_back(std::move(cur));
				cur.clear();
			}
			else
				cur.push_back(ground[i]);
		}
		if (!cur.empty())
			gaps.push_back(std::move(cur));

		std::vector<std::vector<Positions>> partial{{first}};
		for (auto const& gap : gaps)
		{
			std::vector<std::vector<Positions>> next_partial;
			for (auto const& sub : nc_blocks(gap))
				for (auto const& base : partial)
				{
					auto combined = base;
					combined.insert(combined.end(), sub.begin(), sub.end());
					next_partial.push_back(std::move(combined));
				}
			partial = std::move(next_partial);
		}
		for (auto& b : partial)
			result.push_back(std::move(b));
	}
	return result;
}

WordValues::const_iterator require(const WordValues& values, const Word& w)
{
	auto it = values.find(w);
	if (it == values.end())
	{
		std::ostringstream os;
		os << "missing value for word " << w;
		throw std::out_of_range(os.str());
	}
	return it;
}

Rational block_product(const WordValues& values, const Word& w, const Partition& p)
{
	Rational r = 1;
	for (auto const& b : p.blocks)
		r *= require(values, subword(w, b))->second;
	return r;
}

} // namespace

std::string to_string(const Partition& p)
{
	std::string s;
	for (auto const& b : p.blocks)
	{
		s += '{';
		for (std::size_t i = 0; i < b.size(); ++i)
			s += (i ? "," : "") + std::to_string(b[i]);
		s += '}';
	}
	return s;
}

bool is_non_crossing(const Partition& p)
{
	std::vector<int> block_of(static_cast<std::size_t>(p.n) + 1);
	for (std::size_t b = 0; b < p.blocks.size(); ++b)
		for (int x : p.blocks[b])
			block_of[x] = static_cast<int>(b);
	for (int i = 1; i <= p.n; ++i)
		for (int j = i + 1; j <= p.n; ++j)
			for (int k = j + 1; k <= p.n; ++k)
				for (int l = k + 1; l <= p.n; ++l)
					if (block_of[i] == block_of[k] && block_of[j] == block_of[l] &&
					    block_of[i] != block_of[j])
						return false;
	return true;
}

std::vector<Partition> enumerate_partitions(int n)
{
	check_size(n);
	std::vector<Partition> result;
	std::vector<int> rgs(static_cast<std::size_t>(n), 0);
	std::vector<int> max_prefix(static_cast<std::size_t>(n), 0);
	while (true)
	{
		result.push_back(from_rgs(rgs));
		int i = n - 1;
		while (i > 0 && rgs[i] == max_prefix[i - 1] + 1)
			--i;
		if (i == 0)
			break;
		++rgs[i];
		max_prefix[i] = std::max(max_prefix[i - 1], rgs[i]);
		for (int j = i + 1; j < n; ++j)
		{
			rgs[j] = 0;
			max_prefix[j] = max_prefix[i];
		}
	}
	return result;
}

std::vector<Partition> enumerate_nc(int n)
{
	auto all = enumerate_partitions(n);
	std::vector<Partition> result;
	std::copy_if(all.begin(), all.end(), std::back_inserter(result), is_non_crossing);
	return result;
}

std::vector<Partition> enumerate_nc_recursive(int n)
{
	check_size(n);
	Positions ground(static_cast<std::size_t>(n));
	for (int i = 0; i < n; ++i)
		ground[i] = i + 1;
	std::vector<Partition> result;
	for (auto& blocks : nc_blocks(ground))
	{
		std::sort(blocks.begin(), blocks.end());
		result.push_back(Partition{n, std::move(blocks)});
	}
	return result;
}

std::vector<Partition> enumerate(PartitionFamily family, int n)
{
	return family == PartitionFamily::non_crossing ? enumerate_nc(n) : enumerate_partitions(n);
}

Rational partition_moment(const WordValues& cumulants, const Word& w, PartitionFamily family)
{
	Rational total = 0;
	for (auto const& p : enumerate(family, w.degree()))
		total += block_product(cumulants, w, p);
	return total;
}

Rational partition_cumulant_inversion(const WordValues& moments, const Word& w,
                                      PartitionFamily family)
{
	WordValues kappa;
	// every block of a partition of w is a subword of w
	std::function<const Rational&(const Word&)> solve = [&](const Word& u) -> const Rational& {
		if (auto it = kappa.find(u); it != kappa.end())
			return it->second;
		Rational r = require(moments, u)->second;
		for (auto const& p : enumerate(family, u.degree()))
		{
			if (p.blocks.size() == 1)
				continue;
			Rational term = 1;
			for (auto const& b : p.blocks)
				term *= solve(subword(u, b));
			r -= term;
		}
		return kappa.emplace(u, std::move(r)).first->second;
	};
	return solve(w);
}

WordValues partition_cumulants(const WordValues& moments, int alphabet_size, int order,
                               PartitionFamily family)
{
	WordValues kappa;
	for (int d = 1; d <= order; ++d)
	{
		auto parts = enumerate(family, d);
		for (auto const& w : all_words(alphabet_size, d))
		{
			Rational r = require(moments, w)->second;
			for (auto const& p : parts)
				if (p.blocks.size() > 1)
					r -= block_product(kappa, w, p);
			kappa.emplace(w, std::move(r));
		}
	}
	return kappa;
}

} // namespace halfshuffle
