#pragma once

#include "halfshuffle/convolution.hpp"
#include "halfshuffle/partitions.hpp"
#include "halfshuffle/words.hpp"

#include <string>
#include <vector>

namespace halfshuffle {

/// Values on every word of degree 1..order over an alphabet; the unit is
/// implicitly 1 for moments and 0 for cumulants. A univariate table has
/// a one-letter alphabet ("a" by default) and is indexed by a^n.
template <class Tag> struct WordTable
{
	Alphabet alphabet;
	int order = 0;
	WordValues values;
	bool univariate = true;

	static WordTable from_sequence(const std::vector<Rational>& seq, std::string letter = "a")
	{
		WordTable t;
		t.alphabet = Alphabet({std::move(letter)});
		t.order = static_cast<int>(seq.size());
		for (int n = 1; n <= t.order; ++n)
			t.values.emplace(Word::power(n), seq[n - 1]);
		return t;
	}

	static WordTable from_table(Alphabet alphabet, int order, WordValues values)
	{
		WordTable t{std::move(alphabet), order, std::move(values), false};
		t.validate();
		return t;
	}

	/// Throws std::invalid_argument unless the table is total on words of
	/// degree 1..order and has nothing else.
	void validate() const
	{
		if (order < 1)
			throw std::invalid_argument("order must be at least 1");
		if (univariate && alphabet.size() != 1)
			throw std::invalid_argument("univariate tables use a one-letter alphabet");
		std::size_t expected = 0;
		for (int d = 1; d <= order; ++d)
			for (auto const& w : all_words(alphabet.size(), d))
			{
				++expected;
				if (!values.contains(w))
					throw std::invalid_argument("table is missing word '" + alphabet.format(w) + "'");
			}
		if (values.size() != expected)
			throw std::invalid_argument("table has words outside the alphabet or above the order");
	}

	/// m_1..m_order of a univariate table.
	std::vector<Rational> sequence() const
	{
		std::vector<Rational> r;
		for (int n = 1; n <= order; ++n)
			r.push_back(values.at(Word::power(n)));
		return r;
	}

	const Rational& operator[](const Word& w) const { return values.at(w); }

	friend bool operator==(const WordTable& x, const WordTable& y)
	{
		return x.alphabet.names() == y.alphabet.names() && x.order == y.order &&
		       x.values == y.values && x.univariate == y.univariate;
	}
};

struct MomentTag;
struct CumulantTag;
using MomentSpec = WordTable<MomentTag>;
using CumulantSpec = WordTable<CumulantTag>;

/// κ on words for the character Φ extending φ multiplicatively, from
/// Φ = e + κ≺Φ. Only words are visited: κ is infinitesimal, so on a
/// single word the recursion reads
/// κ(w) = φ(w) − Σ_{1∈S⊊[n]} κ(a_S) φ(a_{J_1})...φ(a_{J_k}).
WordValues infinitesimal_fixed_point(const WordValues& phi, int alphabet_size, int order);
/// Inverse of infinitesimal_fixed_point: φ(w) = Σ_{Δ≺⁺(w)} κ(x′)Φ(x″).
WordValues character_from_infinitesimal(const WordValues& kappa, int alphabet_size, int order);

/// Free cumulants from moments, univariate or multivariate.
CumulantSpec free_cumulants_from_moments(const MomentSpec& m);
/// Univariate: m_n = Σ_s k_s Σ_{i_1+...+i_s=n−s} m_{i_1}...m_{i_s} with
/// m_0 = 1. Multivariate: forward evaluation of Φ = e + κ≺Φ.
MomentSpec moments_from_free_cumulants(const CumulantSpec& k);
/// Requires a multivariate table.
CumulantSpec multivariate_free_cumulants(const MomentSpec& m);

/// Coefficients 1..N of C(zM(z)) − M(z) for C = 1 + Σ k_n z^n and
/// M = 1 + Σ m_n z^n, both truncated at N = min of the lengths.
std::vector<Rational> free_series_residual(const std::vector<Rational>& cumulants,
                                           const std::vector<Rational>& moments);

/// Classical cumulants through the commutative fixed point φ = e + c≺φ.
/// Univariate only.
CumulantSpec classical_cumulants_from_moments(const MomentSpec& m);
MomentSpec classical_moments_from_cumulants(const CumulantSpec& c);

/// φ(w) = φ_B(w restricted to B) · φ_C(w restricted to C) on the joint
/// alphabet B ∪ C, at the smaller of the two orders. Letter names must be
/// disjoint.
MomentSpec independent_product(const MomentSpec& b, const MomentSpec& c);

struct ClusterReport
{
	/// φ(b...bc...c) = φ(b...b)φ(c...c) on every applicable word.
	bool hypothesis_holds = true;
	std::vector<Word> hypothesis_failures;
	/// Mixed words b...bc...c examined, n, m ≥ 1.
	std::vector<Word> mixed_words;
	std::vector<Word> nonzero_cumulants;
	Rational max_abs_cumulant = 0;

	bool ok() const { return hypothesis_holds && nonzero_cumulants.empty(); }
};

/// Checks the factorization hypothesis on b...bc...c words of degree ≤ order,
/// then (only if it holds) that κ vanishes on all of them. Letters are
/// given by name. Throws std::invalid_argument when B and C intersect.
ClusterReport cluster_check(const MomentSpec& phi, const std::vector<std::string>& B,
                            const std::vector<std::string>& C, int order);

} // namespace halfshuffle
