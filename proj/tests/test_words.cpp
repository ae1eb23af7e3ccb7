#include "halfshuffle/words.hpp"

#include <doctest.h>

#include <random>

using namespace halfshuffle;

namespace {

// naive scan: walk U in order, closing a run whenever an element of S is met
std::vector<Positions> scan_components(const Positions& S, const Positions& U)
{
	std::vector<Positions> out;
	Positions run;
	for (int u : U)
	{
		if (std::find(S.begin(), S.end(), u) != S.end())
		{
			if (!run.empty())
				out.push_back(run), run.clear();
		}
		else
			run.push_back(u);
	}
	if (!run.empty())
		out.push_back(run);
	return out;
}

} // namespace

TEST_CASE("rationals parse and print canonically")
{
	CHECK(to_string(parse_rational("6/4")) == "3/2");
	CHECK(to_string(parse_rational("-4/2")) == "-2");
	CHECK(to_string(parse_rational("7")) == "7");
	CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
	CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
	CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
	CHECK(binomial(6, 2) == 15);
	CHECK(factorial(5) == 120);
}

TEST_CASE("connected components")
{
	CHECK(connected_components({1, 3}, {1, 2, 3, 4}) == std::vector<Positions>{{2}, {4}});
	CHECK(connected_components({1, 2, 3}, {1, 2, 3}).empty());
	// 3, 4 and 6 lie outside U, so nothing of U separates 2, 5 and 7
	CHECK(connected_components({1}, {1, 2, 5, 7}) == std::vector<Positions>{{2, 5, 7}});
	CHECK(connected_components({5}, {1, 2, 5, 7}) == std::vector<Positions>{{1, 2}, {7}});
	CHECK(connected_components({}, {2, 3}) == std::vector<Positions>{{2, 3}});
	CHECK_THROWS_AS(connected_components({4}, {1, 2}), std::invalid_argument);

	SUBCASE("agrees with a naive scan and covers U−S")
	{
		for (unsigned umask = 1; umask < 64; ++umask)
			for (unsigned smask = umask;; smask = (smask - 1) & umask)
			{
				Positions U, S;
				for (int i = 0; i < 6; ++i)
				{
					if (umask >> i & 1)
						U.push_back(i + 1);
					if (smask >> i & 1)
						S.push_back(i + 1);
				}
				auto comps = connected_components(S, U);
				CHECK(comps == scan_components(S, U));
				Positions merged = S;
				for (auto const& c : comps)
					merged.insert(merged.end(), c.begin(), c.end());
				std::sort(merged.begin(), merged.end());
				CHECK(merged == U);
				if (smask == 0)
					break;
			}
	}
}

TEST_CASE("subwords and bar-words of components")
{
	Alphabet abcd({"a", "b", "c", "d"});
	auto w = abcd.parse_word("abcd");
	CHECK(abcd.format(subword(abcd.parse_word("abc"), {1, 3})) == "ac");
	CHECK(abcd.format(subword(w, {2})) == "b");
	CHECK(subword(Word::power(4), {1, 2, 4}) == Word::power(3));
	CHECK_THROWS_AS(subword(w, {5}), std::out_of_range);
	CHECK_THROWS_AS(subword(w, {0}), std::out_of_range);

	CHECK(abcd.format(bar_of_components(w, {{2}, {4}})) == "b|d");
	CHECK(bar_of_components(w, {}).is_unit());
	auto aa = bar_of_components(Word::power(4), {{2, 3}});
	CHECK(aa.size() == 1);
	CHECK(aa == BarWord(Word::power(2)));
}

TEST_CASE("bar-word normalization and concatenation")
{
	Alphabet abcd({"a", "b", "c", "d"});
	auto x = BarWord({abcd.parse_word("a"), Word{}, abcd.parse_word("bc")});
	CHECK(x.size() == 2);
	CHECK(x.degree() == 3);
	CHECK(abcd.format(bar_concat(abcd.parse_bar_word("a|bc"), abcd.parse_bar_word("d"))) == "a|bc|d");
	CHECK(bar_concat(BarWord{}, x) == x);
	CHECK(bar_concat(x, BarWord{}) == x);
	CHECK(abcd.format(BarWord{}) == "1");
	CHECK(abcd.parse_bar_word("1").is_unit());
	CHECK(abcd.parse_bar_word("ab|c").degree() == 3);
	CHECK_THROWS_AS(abcd.parse_word("abx"), std::invalid_argument);

	SUBCASE("associative and unital on all bar-words of degree ≤ 6, two letters")
	{
		std::vector<BarWord> all;
		for (int d = 0; d <= 6; ++d)
			for (auto const& b : all_bar_words(2, d))
				all.push_back(b);
		for (auto const& b : all)
		{
			REQUIRE(bar_concat(b, BarWord{}) == b);
			REQUIRE(bar_concat(BarWord{}, b) == b);
		}
		for (auto const& x1 : all)
			for (auto const& y1 : all)
			{
				if (x1.degree() + y1.degree() > 6)
					continue;
				auto xy = bar_concat(x1, y1);
				for (auto const& z1 : all)
					if (xy.degree() + z1.degree() <= 6)
						REQUIRE(bar_concat(xy, z1) == bar_concat(x1, bar_concat(y1, z1)));
			}
	}
}

TEST_CASE("basis enumeration and ordering")
{
	CHECK(all_words(2, 3).size() == 8);
	// compositions of n into k parts times 2^n letter choices: 2^n · 2^(n−1)
	for (int n = 1; n <= 5; ++n)
		CHECK(all_bar_words(2, n).size() == (std::size_t(1) << n) * (std::size_t(1) << (n - 1)));
	auto b = all_bar_words(1, 3);
	CHECK(std::is_sorted(b.begin(), b.end()));
	Alphabet ab({"a", "b"});
	CHECK(ab.parse_bar_word("b") < ab.parse_bar_word("aa"));
	CHECK(ab.parse_bar_word("a|a") < ab.parse_bar_word("aa"));
	CHECK(ab.parse_bar_word("aa") < ab.parse_bar_word("ab"));
	CHECK(all_bar_words(3, 0) == std::vector<BarWord>{BarWord{}});
}

TEST_CASE("multi-character letter names")
{
	Alphabet xy({"x1", "x12", "y"});
	auto w = xy.parse_word("x12x1y");
	CHECK(w.degree() == 3);
	CHECK(xy.format(w) == "x12x1y");
	CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
}

TEST_CASE("formal sum arithmetic on random samples")
{
	using Sum = FormalSum<Word>;
	std::mt19937_64 rng(7);
	auto q = [&] {
		Rational r(int(rng() % 19) - 9, int(rng() % 3) + 1);
		r.canonicalize();
		return r;
	};
	auto sample = [&] {
		Sum s;
		for (int i = 0; i < 6; ++i)
			s.add(all_words(2, 2)[rng() % 4], q());
		return s;
	};
	for (int t = 0; t < 100; ++t)
	{
		auto x = sample(), y = sample(), z = sample();
		auto s = q();
		CHECK((x + y) + z == x + (y + z));
		CHECK(x + y == y + x);
		CHECK(s * (x + y) == s * x + s * y);
		CHECK((x - x).empty());
		for (auto const& [b, c] : x + y)
			CHECK(c != 0);
	}
}
