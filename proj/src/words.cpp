#include "halfshuffle/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace halfshuffle {

Word::Word(std::initializer_list<int> ids)
{
	letters_.reserve(ids.size());
	for (int id : ids)
		letters_.push_back(Letter{static_cast<std::uint8_t>(id)});
}

Word Word::power(int n, Letter a)
{
	return Word(std::vector<Letter>(static_cast<std::size_t>(n), a));
}

Word Word::operator+(const Word& other) const
{
	std::vector<Letter> r = letters_;
	r.insert(r.end(), other.letters_.begin(), other.letters_.end());
	return Word(std::move(r));
}

std::strong_ordering operator<=>(const Word& x, const Word& y)
{
	if (auto c = x.degree() <=> y.degree(); c != 0)
		return c;
	return x.letters_ <=> y.letters_;
}

BarWord::BarWord(std::vector<Word> components)
{
	components_.reserve(components.size());
	for (auto& w : components)
	{
		if (w.empty())
			continue;
		degree_ += w.degree();
		components_.push_back(std::move(w));
	}
}

BarWord::BarWord(const Word& w)
{
	if (!w.empty())
	{
		components_.push_back(w);
		degree_ = w.degree();
	}
}

BarWord BarWord::drop_first() const
{
	return BarWord(std::vector<Word>(components_.begin() + 1, components_.end()));
}

std::strong_ordering operator<=>(const BarWord& x, const BarWord& y)
{
	if (auto c = x.degree_ <=> y.degree_; c != 0)
		return c;
	auto n = std::min(x.components_.size(), y.components_.size());
	for (std::size_t i = 0; i < n; ++i)
		if (auto c = x.components_[i].degree() <=> y.components_[i].degree(); c != 0)
			return c;
	if (auto c = x.components_.size() <=> y.components_.size(); c != 0)
		return c;
	for (std::size_t i = 0; i < n; ++i)
		if (auto c = x.components_[i].letters() <=> y.components_[i].letters(); c != 0)
			return c;
	return std::strong_ordering::equal;
}

BarWord bar_concat(const BarWord& x, const BarWord& y)
{
	std::vector<Word> c = x.components();
	c.insert(c.end(), y.components().begin(), y.components().end());
	return BarWord(std::move(c));
}

std::vector<Positions> connected_components(const Positions& S, const Positions& U)
{
	if (!std::includes(U.begin(), U.end(), S.begin(), S.end()))
		throw std::invalid_argument("connected_components: S is not a subset of U");
	std::vector<Positions> result;
	Positions run;
	auto s = S.begin();
	for (int u : U)
	{
		if (s != S.end() && *s == u)
		{
			++s;
			if (!run.empty())
				result.push_back(std::move(run));
			run.clear();
		}
		else
			run.push_back(u);
	}
	if (!run.empty())
		result.push_back(std::move(run));
	return result;
}

Word subword(const Word& w, const Positions& S)
{
	std::vector<Letter> r;
	r.reserve(S.size());
	for (int p : S)
	{
		if (p < 1 || p > w.degree())
			throw std::out_of_range("subword: position out of range");
		r.push_back(w[p]);
	}
	return Word(std::move(r));
}

BarWord bar_of_components(const Word& w, const std::vector<Positions>& components)
{
	std::vector<Word> c;
	c.reserve(components.size());
	for (auto const& J : components)
		c.push_back(subword(w, J));
	return BarWord(std::move(c));
}

std::vector<Word> all_words(int alphabet_size, int degree)
{
	std::vector<Word> result;
	if (degree < 0 || alphabet_size < 1)
		return result;
	std::vector<Letter> cur(static_cast<std::size_t>(degree));
	// odometer in lexicographic order
	while (true)
	{
		result.emplace_back(cur);
		int i = degree - 1;
		while (i >= 0 && cur[i].id + 1 == alphabet_size)
			cur[i--].id = 0;
		if (i < 0)
			break;
		++cur[i].id;
	}
	return result;
}

std::vector<BarWord> all_bar_words(int alphabet_size, int degree)
{
	std::vector<BarWord> result;
	if (degree == 0)
	{
		result.emplace_back();
		return result;
	}
	auto letters = all_words(alphabet_size, degree);
	// a composition of `degree` is a subset of the degree-1 cut points
	for (unsigned cuts = 0; cuts < (1u << (degree - 1)); ++cuts)
		for (auto const& w : letters)
		{
			std::vector<Word> comps;
			std::vector<Letter> cur;
			for (int p = 1; p <= degree; ++p)
			{
				cur.push_back(w[p]);
				if (p == degree || (cuts >> (p - 1)) & 1u)
				{
					comps.emplace_back(std::move(cur));
					cur.clear();
				}
			}
			result.emplace_back(std::move(comps));
		}
	std::sort(result.begin(), result.end());
	return result;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names))
{
	if (names_.empty() || names_.size() > 255)
		throw std::invalid_argument("alphabet must have between 1 and 255 letters");
	std::set<std::string> seen;
	for (auto const& n : names_)
	{
		if (n.empty() || n == "1" || n.find('|') != std::string::npos)
			throw std::invalid_argument("invalid letter name '" + n + "'");
		if (!seen.insert(n).second)
			throw std::invalid_argument("duplicate letter name '" + n + "'");
	}
}

Letter Alphabet::letter(std::string_view name) const
{
	for (std::size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == name)
			return Letter{static_cast<std::uint8_t>(i)};
	throw std::invalid_argument("unknown letter '" + std::string(name) + "'");
}

Word Alphabet::parse_word(std::string_view text) const
{
	std::vector<Letter> r;
	while (!text.empty())
	{
		std::size_t best = 0, best_len = 0;
		for (std::size_t i = 0; i < names_.size(); ++i)
			if (names_[i].size() > best_len && text.starts_with(names_[i]))
			{
				best = i;
				best_len = names_[i].size();
			}
		if (best_len == 0)
			throw std::invalid_argument("cannot parse word at '" + std::string(text) + "'");
		r.push_back(Letter{static_cast<std::uint8_t>(best)});
		text.remove_prefix(best_len);
	}
	return Word(std::move(r));
}

BarWord Alphabet::parse_bar_word(std::string_view text) const
{
	if (text == "1")
		return {};
	std::vector<Word> comps;
	while (true)
	{
		auto bar = text.find('|');
		auto part = text.substr(0, bar);
		if (part.empty())
			throw std::invalid_argument("empty component in bar-word");
		comps.push_back(parse_word(part));
		if (bar == std::string_view::npos)
			break;
		text.remove_prefix(bar + 1);
	}
	return BarWord(std::move(comps));
}

std::string Alphabet::format(const Word& w) const
{
	if (w.empty())
		return "1";
	std::string s;
	for (auto a : w.letters())
		s += name(a);
	return s;
}

std::string Alphabet::format(const BarWord& x) const
{
	if (x.is_unit())
		return "1";
	std::string s;
	for (int i = 0; i < x.size(); ++i)
	{
		if (i)
			s += '|';
		s += format(x[i]);
	}
	return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w)
{
	if (w.empty())
		return os << '1';
	for (auto a : w.letters())
		os << static_cast<char>('a' + a.id);
	return os;
}

std::ostream& operator<<(std::ostream& os, const BarWord& x)
{
	if (x.is_unit())
		return os << '1';
	for (int i = 0; i < x.size(); ++i)
		os << (i ? "|" : "") << x[i];
	return os;
}

} // namespace halfshuffle
