#pragma once

#include "halfshuffle/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace halfshuffle {

/// Index into a declared alphabet.
struct Letter
{
	std::uint8_t id = 0;

	friend auto operator<=>(Letter, Letter) = default;
};

/// Increasing list of 1-based positions.
using Positions = std::vector<int>;

/// A word a_1...a_n over an alphabet. The empty word is the unit of T̄(A).
class Word
{
  public:
	Word() = default;
	explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
	Word(std::initializer_list<int> ids);

	/// a^n over the single letter with the given id.
	static Word power(int n, Letter a = {});

	int degree() const { return static_cast<int>(letters_.size()); }
	bool empty() const { return letters_.empty(); }
	const std::vector<Letter>& letters() const { return letters_; }
	Letter operator[](int position) const { return letters_[position - 1]; }

	Word operator+(const Word& other) const;

	friend bool operator==(const Word&, const Word&) = default;
	/// graded, then lexicographic on letters
	friend std::strong_ordering operator<=>(const Word& x, const Word& y);

  private:
	std::vector<Letter> letters_;
};

/// w_1|...|w_k with every w_i nonempty. The empty bar-word is the unit.
class BarWord
{
  public:
	BarWord() = default;
	/// Empty components are dropped (w_1|1|w_2 == w_1|w_2).
	explicit BarWord(std::vector<Word> components);
	BarWord(const Word& w);

	int degree() const { return degree_; }
	bool is_unit() const { return components_.empty(); }
	int size() const { return static_cast<int>(components_.size()); }
	const std::vector<Word>& components() const { return components_; }
	const Word& operator[](int i) const { return components_[i]; }

	/// Tail w_2|...|w_k.
	BarWord drop_first() const;

	friend bool operator==(const BarWord& x, const BarWord& y)
	{
		return x.components_ == y.components_;
	}
	/// graded, then component degree sequence, then letters
	friend std::strong_ordering operator<=>(const BarWord& x, const BarWord& y);

  private:
	std::vector<Word> components_;
	int degree_ = 0;
};

/// Concatenation product in T̄(T(A)), written x|y.
BarWord bar_concat(const BarWord& x, const BarWord& y);

/// Maximal runs of U−S inside U not interrupted by an element of S,
/// ordered by minimal element. Throws std::invalid_argument unless S ⊆ U.
std::vector<Positions> connected_components(const Positions& S, const Positions& U);

/// a_S. Throws std::out_of_range for positions outside [1, degree(w)].
Word subword(const Word& w, const Positions& S);

/// a_{J_1}|...|a_{J_k}; an empty list gives the unit.
BarWord bar_of_components(const Word& w, const std::vector<Positions>& components);

/// All words of exactly the given degree over letters 0..alphabet_size-1,
/// in basis order.
std::vector<Word> all_words(int alphabet_size, int degree);

/// All bar-words of exactly the given degree, in basis order.
std::vector<BarWord> all_bar_words(int alphabet_size, int degree);

/// Declared letter names. Parsing uses greedy longest match, so names
/// need not be single characters, but must be distinct and free of '|'.
class Alphabet
{
  public:
	Alphabet() : Alphabet(std::vector<std::string>{"a"}) {}
	explicit Alphabet(std::vector<std::string> names);

	int size() const { return static_cast<int>(names_.size()); }
	const std::vector<std::string>& names() const { return names_; }
	const std::string& name(Letter a) const { return names_.at(a.id); }

	Letter letter(std::string_view name) const;
	Word parse_word(std::string_view text) const;
	/// "1" is the unit; otherwise components joined by '|'.
	BarWord parse_bar_word(std::string_view text) const;

	std::string format(const Word& w) const;
	std::string format(const BarWord& x) const;

  private:
	std::vector<std::string> names_;
};

/// Finite linear combination with nonzero rational coefficients.
template <class Basis> class FormalSum
{
  public:
	using Terms = std::map<Basis, Rational>;

	FormalSum() = default;
	FormalSum(const Basis& b, Rational q = 1) { add(b, std::move(q)); }

	void add(const Basis& b, const Rational& q)
	{
		if (q == 0)
			return;
		auto [it, inserted] = terms_.try_emplace(b, q);
		if (!inserted)
		{
			it->second += q;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	Rational coefficient(const Basis& b) const
	{
		auto it = terms_.find(b);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	const Terms& terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool empty() const { return terms_.empty(); }
	auto begin() const { return terms_.begin(); }
	auto end() const { return terms_.end(); }

	FormalSum& operator+=(const FormalSum& other)
	{
		for (auto const& [b, q] : other.terms_)
			add(b, q);
		return *this;
	}
	FormalSum& operator-=(const FormalSum& other)
	{
		for (auto const& [b, q] : other.terms_)
			add(b, -q);
		return *this;
	}
	FormalSum& operator*=(const Rational& s)
	{
		if (s == 0)
			terms_.clear();
		else
			for (auto& [b, q] : terms_)
				q *= s;
		return *this;
	}

	friend FormalSum operator+(FormalSum x, const FormalSum& y) { return x += y; }
	friend FormalSum operator-(FormalSum x, const FormalSum& y) { return x -= y; }
	friend FormalSum operator*(const Rational& s, FormalSum x) { return x *= s; }
	friend bool operator==(const FormalSum&, const FormalSum&) = default;

  private:
	Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const BarWord& x);

} // namespace halfshuffle
