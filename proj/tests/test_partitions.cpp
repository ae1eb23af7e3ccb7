#include "halfshuffle/partitions.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace halfshuffle;

namespace {

std::vector<Rational> catalan_by_recurrence(int n)
{
	std::vector<Rational> c{1};
	for (int m = 0; m < n; ++m)
	{
		Rational s = 0;
		for (int i = 0; i <= m; ++i)
			s += c[i] * c[m - i];
		c.push_back(s);
	}
	return c;
}

std::vector<Rational> bell_by_recurrence(int n)
{
	std::vector<Rational> b{1};
	for (int m = 0; m < n; ++m)
	{
		Rational s = 0;
		for (int i = 0; i <= m; ++i)
			s += binomial(m, i) * b[i];
		b.push_back(s);
	}
	return b;
}

bool is_partition_of(const Partition& p)
{
	std::vector<int> seen(p.n + 1, 0);
	int prev_min = 0;
	for (auto const& b : p.blocks)
	{
		if (b.empty() || b.front() <= prev_min || !std::is_sorted(b.begin(), b.end()))
			return false;
		prev_min = b.front();
		for (int i : b)
			if (i < 1 || i > p.n || seen[i]++)
				return false;
	}
	return std::count(seen.begin() + 1, seen.end(), 1) == p.n;
}

Rational q(std::mt19937_64& rng)
{
	Rational r(int(rng() % 19) - 9, int(rng() % 3) + 1);
	r.canonicalize();
	return r;
}

} // namespace

TEST_CASE("partition counts")
{
	auto cat = catalan_by_recurrence(8);
	auto bell = bell_by_recurrence(8);
	for (int n = 1; n <= 8; ++n)
	{
		auto all = enumerate_partitions(n);
		auto nc = enumerate_nc(n);
		CHECK(Rational(all.size()) == bell[n]);
		CHECK(Rational(nc.size()) == cat[n]);
		std::set<Partition> all_set(all.begin(), all.end());
		CHECK(all_set.size() == all.size());
		for (auto const& p : all)
			CHECK(is_partition_of(p));
		for (auto const& p : nc)
		{
			CHECK(is_non_crossing(p));
			CHECK(all_set.contains(p));
		}
		auto rec = enumerate_nc_recursive(n);
		std::sort(rec.begin(), rec.end());
		std::sort(nc.begin(), nc.end());
		CHECK(rec == nc);
	}
	std::vector<int> expected_cat{1, 2, 5, 14, 42, 132, 429, 1430};
	std::vector<int> expected_bell{1, 2, 5, 15, 52, 203, 877, 4140};
	for (int n = 1; n <= 8; ++n)
	{
		CHECK(cat[n] == expected_cat[n - 1]);
		CHECK(bell[n] == expected_bell[n - 1]);
	}
	CHECK(enumerate_partitions(10).size() == 115975);
}

TEST_CASE("small cases")
{
	CHECK(enumerate_nc(3).size() == 5);
	CHECK(enumerate_partitions(3).size() == 5);
	auto one = enumerate_nc(1);
	REQUIRE(one.size() == 1);
	CHECK(to_string(one[0]) == "{1}");
	Partition crossing{4, {{1, 3}, {2, 4}}};
	CHECK_FALSE(is_non_crossing(crossing));
	auto nc4 = enumerate_nc(4);
	CHECK(std::find(nc4.begin(), nc4.end(), crossing) == nc4.end());
	CHECK(to_string(crossing) == "{1,3}{2,4}");
	CHECK_THROWS_AS(enumerate_nc(0), std::out_of_range);
	CHECK_THROWS_AS(enumerate_partitions(11), std::out_of_range);
}

TEST_CASE("partition sums of the low-order expansions")
{
	std::mt19937_64 rng(3);
	for (int t = 0; t < 3; ++t)
	{
		Rational k1 = q(rng), k2 = q(rng), k3 = q(rng), k4 = q(rng);
		WordValues k{{Word::power(1), k1}, {Word::power(2), k2}, {Word::power(3), k3}, {Word::power(4), k4}};
		auto nc = PartitionFamily::non_crossing;
		auto all = PartitionFamily::all;
		CHECK(partition_moment(k, Word::power(2), nc) == k2 + k1 * k1);
		CHECK(partition_moment(k, Word::power(4), nc) ==
		      k4 + 4 * k3 * k1 + 2 * k2 * k2 + 6 * k2 * k1 * k1 + k1 * k1 * k1 * k1);
		CHECK(partition_moment(k, Word::power(4), all) ==
		      k4 + 4 * k3 * k1 + 3 * k2 * k2 + 6 * k2 * k1 * k1 + k1 * k1 * k1 * k1);
	}
	CHECK_THROWS_AS(partition_moment({}, Word::power(2), PartitionFamily::all), std::out_of_range);
}

TEST_CASE("recursive inversion undoes the partition sum")
{
	std::mt19937_64 rng(11);
	for (auto family : {PartitionFamily::non_crossing, PartitionFamily::all})
		for (int t = 0; t < 3; ++t)
		{
			WordValues kappa;
			for (int d = 1; d <= 6; ++d)
				for (auto const& w : all_words(2, d))
					kappa[w] = q(rng);
			WordValues phi;
			for (auto const& [w, v] : kappa)
				phi[w] = partition_moment(kappa, w, family);
			CHECK(partition_cumulants(phi, 2, 6, family) == kappa);
			for (auto const& w : all_words(1, 7))
			{
				WordValues k1;
				for (int d = 1; d <= 7; ++d)
					k1[Word::power(d)] = q(rng);
				WordValues m1;
				for (int d = 1; d <= 7; ++d)
					m1[Word::power(d)] = partition_moment(k1, Word::power(d), family);
				CHECK(partition_cumulant_inversion(m1, w, family) == k1[w]);
			}
		}

	SUBCASE("semicircle moments have a single nonzero free cumulant")
	{
		auto cat = catalan_by_recurrence(4);
		WordValues m;
		for (int n = 1; n <= 8; ++n)
			m[Word::power(n)] = n % 2 ? Rational(0) : cat[n / 2];
		auto k = partition_cumulants(m, 1, 8, PartitionFamily::non_crossing);
		for (int n = 1; n <= 8; ++n)
			CHECK(k[Word::power(n)] == (n == 2 ? 1 : 0));
	}
	SUBCASE("three-letter mixed word")
	{
		WordValues phi;
		for (int d = 1; d <= 3; ++d)
			for (auto const& w : all_words(3, d))
				phi[w] = q(rng);
		auto f = [&](std::initializer_list<int> ids) { return phi.at(Word(ids)); };
		Rational expected = f({0, 1, 2}) - f({0}) * f({1, 2}) - f({0, 1}) * f({2}) - f({0, 2}) * f({1}) +
		                2 * f({0}) * f({1}) * f({2});
		CHECK(partition_cumulant_inversion(phi, Word{0, 1, 2}, PartitionFamily::non_crossing) == expected);
	}
}
