#include "halfshuffle/convolution.hpp"

#include <doctest.h>

using namespace halfshuffle;

namespace {

BarWord a(int n) { return BarWord(Word::power(n)); }

LinForm zero_like(const LinForm& f) { return LinForm(f.mode(), f.alphabet_size(), f.truncation()); }

LinForm e_like(const LinForm& f) { return LinForm::counit(f.mode(), f.alphabet_size(), f.truncation()); }

// Σ_k (−1)^k Y^{⧢k}, written out with repeated convolution
LinForm geometric(const LinForm& Y)
{
	auto total = e_like(Y);
	auto power = e_like(Y);
	for (int k = 1; k <= Y.truncation(); ++k)
	{
		power = convolve(power, Y);
		total += (k % 2 ? Rational(-1) : Rational(1)) * power;
	}
	return total;
}

} // namespace

TEST_CASE("linear form basics")
{
	LinForm f(Mode::bar, 2, 3);
	Alphabet ab({"a", "b"});
	f.set(ab.parse_bar_word("a|b"), 5);
	CHECK(f(ab.parse_bar_word("a|b")) == 5);
	CHECK(f(ab.parse_bar_word("ab")) == 0);
	CHECK(f(BarWord{}) == 0);
	f.set(ab.parse_bar_word("a|b"), 0);
	CHECK(f.table().empty());
	CHECK_THROWS_AS(f(a(4)), std::out_of_range);
	CHECK_THROWS_AS(f.set(a(4), 1), std::out_of_range);
	CHECK_THROWS_AS(f.set(BarWord(Word{2}), 1), std::invalid_argument);
	LinForm c(Mode::classical, 1, 3);
	CHECK_THROWS_AS(c.set(ab.parse_bar_word("a|a"), 1), std::invalid_argument);
	CHECK_THROWS_AS(convolve(f, c), std::invalid_argument);
	CHECK_THROWS_AS(convolve(f, LinForm(Mode::bar, 2, 4)), std::invalid_argument);
	CHECK(basis(Mode::classical, 2, 3).size() == 8);
	CHECK(basis(Mode::bar, 2, 3).size() == 32);
	FormSampler s(5);
	auto g = s.sample(Mode::bar, 1, 5);
	auto t = truncate(g, 3);
	CHECK(t.truncation() == 3);
	CHECK(t(a(3)) == g(a(3)));
}

TEST_CASE("convolution and the counit")
{
	FormSampler s(1);
	for (auto mode : {Mode::bar, Mode::classical})
	{
		auto f = s.sample(mode, 2, 4, true);
		auto e = e_like(f);
		CHECK(convolve(e, f) == f);
		CHECK(convolve(f, e) == f);
	}
	LinForm k(Mode::bar, 1, 3);
	k.set(a(1), 1);
	CHECK(convolve(k, k)(a(2)) == 2);

	auto c = s.sample(Mode::classical, 1, 6);
	auto cc = convolve(c, c);
	for (int n = 1; n <= 6; ++n)
	{
		Rational expected = 0;
		for (int p = 1; p < n; ++p)
			expected += binomial(n, p) * c(a(p)) * c(a(n - p));
		CHECK(cc(a(n)) == expected);
	}
}

TEST_CASE("half-convolutions and unit conventions")
{
	FormSampler s(2);
	for (auto mode : {Mode::bar, Mode::classical})
	{
		auto f = s.sample(mode, 2, 4);
		auto g = s.sample(mode, 2, 4);
		auto e = e_like(f);
		CHECK(half_prec(f, e) == f);
		CHECK(half_succ(e, f) == f);
		CHECK(half_prec(e, f) == zero_like(f));
		CHECK(half_succ(f, e) == zero_like(f));
		CHECK(half_prec(f, g) + half_succ(f, g) == convolve(f, g));
		CHECK_THROWS_AS(half_prec(e, e), UndefinedProduct);
		CHECK_THROWS_AS(half_succ(e, e), UndefinedProduct);
		auto G = s.sample(mode, 2, 4, true);
		CHECK(half_prec(f, G) + half_succ(f, G) == convolve(f, G));
		CHECK_THROWS_AS(prelie(G, f), std::invalid_argument);
	}
	SUBCASE("κ≺Φ on aa for a character Φ")
	{
		LinForm kappa(Mode::bar, 1, 2);
		kappa.set(a(1), Rational(2, 3));
		kappa.set(a(2), -4);
		auto Phi = extend_character({{Word::power(1), 5}, {Word::power(2), 7}}, 1, 2);
		CHECK(half_prec(kappa, Phi)(a(2)) == Rational(-4) + Rational(2, 3) * 5);
	}
	SUBCASE("classical halves are twists of each other")
	{
		auto f = s.sample(Mode::classical, 2, 5);
		auto g = s.sample(Mode::classical, 2, 5);
		CHECK(half_prec(f, g) == half_succ(g, f));
		CHECK(convolve(f, g) == convolve(g, f));
		CHECK(prelie(f, g) == zero_like(f));
	}
}

TEST_CASE("shuffle algebra axioms on a few triples")
{
	FormSampler s(3);
	for (auto mode : {Mode::bar, Mode::classical})
		for (int t = 0; t < 3; ++t)
		{
			auto f = s.sample(mode, 1, 5), g = s.sample(mode, 1, 5), h = s.sample(mode, 1, 5);
			CHECK(half_prec(half_prec(f, g), h) == half_prec(f, convolve(g, h)));
			CHECK(half_prec(half_succ(f, g), h) == half_succ(f, half_prec(g, h)));
			CHECK(half_succ(convolve(f, g), h) == half_succ(f, half_succ(g, h)));
			CHECK(prelie(f, f) - prelie(f, f) == zero_like(f));
			auto lhs = prelie(f, prelie(g, h)) - prelie(prelie(f, g), h);
			auto rhs = prelie(g, prelie(f, h)) - prelie(prelie(g, f), h);
			CHECK(lhs == rhs);
		}
}

TEST_CASE("exponentials, logarithm and inverse")
{
	FormSampler s(4);
	auto zero = LinForm(Mode::bar, 2, 4);
	CHECK(exp_prec(zero) == e_like(zero));
	CHECK(exp_succ(zero) == e_like(zero));

	LinForm k(Mode::bar, 1, 3);
	Rational k1(3, 2), k2(-2), k3(5, 3);
	k.set(a(1), k1), k.set(a(2), k2), k.set(a(3), k3);
	CHECK(exp_prec(k)(a(3)) == k3 + 3 * k2 * k1 + k1 * k1 * k1);

	for (auto mode : {Mode::bar, Mode::classical})
	{
		auto f = s.sample(mode, 1, 5);
		auto X = exp_prec(f);
		CHECK(X == e_like(f) + half_prec(f, X));
		auto Z = exp_succ(f);
		// x^{≻n} = x^{≻(n−1)}≻x nests to the left, so Z = e + Z≻f
		CHECK(Z == e_like(f) + half_succ(Z - e_like(f), f) + f);
		if (mode == Mode::bar)
			CHECK_FALSE(Z == e_like(f) + half_succ(f, Z));
		CHECK(log_shuffle(exp_shuffle(f)) == f);
		CHECK(convolve(exp_succ(-f), exp_prec(f)) == e_like(f));

		auto F = s.sample(mode, 1, 6, true);
		CHECK(shuffle_inverse(F) == geometric(F - e_like(F)));
		CHECK(convolve(F, shuffle_inverse(F)) == e_like(F));
		CHECK_THROWS_AS(log_shuffle(f), std::invalid_argument);
		CHECK_THROWS_AS(exp_prec(F), std::invalid_argument);
	}
	auto c = s.sample(Mode::classical, 2, 5);
	CHECK(convolve(exp_shuffle(c), exp_shuffle(-c)) == e_like(c));
}

TEST_CASE("left fixed point")
{
	FormSampler s(5);
	auto e = LinForm::counit(Mode::bar, 2, 4);
	CHECK(solve_left_fixed_point(e) == LinForm(Mode::bar, 2, 4));
	CHECK_THROWS_AS(solve_left_fixed_point(LinForm(Mode::bar, 2, 4)), std::invalid_argument);

	auto Phi = extend_character({{Word::power(1), 3}, {Word::power(2), Rational(1, 2)}}, 1, 2);
	CHECK(solve_left_fixed_point(Phi)(a(2)) == Rational(1, 2) - 9);

	for (auto mode : {Mode::bar, Mode::classical})
	{
		auto k = s.sample(mode, 1, 6);
		CHECK(solve_left_fixed_point(exp_prec(k)) == k);
		auto F = s.sample(mode, 1, 5, true);
		auto kappa = solve_left_fixed_point(F);
		CHECK(F == e_like(F) + half_prec(kappa, F));
		CHECK(kappa == left_fixed_point_closed_form(F));
	}

	SUBCASE("degree n of the solution only sees degrees ≤ n")
	{
		auto F = s.sample(Mode::bar, 1, 5, true);
		auto base = solve_left_fixed_point(F);
		for (int n = 1; n < 5; ++n)
		{
			auto G = F;
			for (int d = n + 1; d <= 5; ++d)
				for (auto const& x : G.basis(d))
					G.set(x, G(x) + d);
			auto moved = solve_left_fixed_point(G);
			for (int d = 1; d <= n; ++d)
				for (auto const& x : F.basis(d))
					CHECK(moved(x) == base(x));
		}
	}
}

TEST_CASE("Bernoulli numbers and the Magnus expansion")
{
	std::vector<Rational> expected{1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42)};
	for (int m = 0; m < 7; ++m)
		CHECK(bernoulli(m) == expected[m]);

	FormSampler s(6);
	auto c = s.sample(Mode::classical, 1, 8);
	CHECK(magnus(c) == c);

	auto k = s.sample(Mode::bar, 1, 5);
	CHECK(exp_shuffle(magnus(k)) == exp_prec(k));
	auto k2 = truncate(k, 2);
	CHECK(magnus(k2) == k2 - Rational(1, 2) * prelie(k2, k2));
}

TEST_CASE("characters and infinitesimal characters")
{
	auto e = LinForm::counit(Mode::bar, 2, 3);
	auto fe = classify(e);
	CHECK(fe.is_unital);
	CHECK(fe.is_multiplicative);
	CHECK_FALSE(fe.is_infinitesimal);

	WordValues kv;
	FormSampler s(7);
	for (int d = 1; d <= 4; ++d)
		for (auto const& w : all_words(2, d))
			kv[w] = s.next_rational();
	auto Ch = extend_character(kv, 2, 4);
	CHECK(Ch(BarWord({Word{0}, Word{0}})) == kv[Word{0}] * kv[Word{0}]);
	CHECK(Ch(BarWord{}) == 1);
	CHECK(classify(Ch).is_multiplicative);
	auto Res = restrict_infinitesimal(Ch);
	CHECK(word_values(Res) == word_values(Ch));
	CHECK(Res(BarWord{}) == 0);
	CHECK(classify(Res).is_infinitesimal);
	CHECK_FALSE(classify(Res).is_unital);

	LinForm bad(Mode::bar, 1, 2);
	bad.set(BarWord({Word::power(1), Word::power(1)}), 1);
	CHECK_FALSE(classify(bad).is_infinitesimal);

	auto kappa = s.sample_infinitesimal(2, 5);
	CHECK(classify(kappa).is_infinitesimal);
	auto X = exp_prec(kappa);
	CHECK(classify(X).is_multiplicative);
	CHECK(extend_character(word_values(X), 2, 5) == X);
	CHECK(restrict_infinitesimal(solve_left_fixed_point(X)) == kappa);
}
