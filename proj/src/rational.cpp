#include "halfshuffle/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace halfshuffle {

namespace {

bool is_integer_text(std::string_view s)
{
	if (s.empty())
		return false;
	std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

mpz_class parse_integer(std::string_view s)
{
	if (!is_integer_text(s))
		throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
	if (s[0] == '+')
		s.remove_prefix(1);
	return mpz_class(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Rational(parse_integer(text));
	mpz_class num = parse_integer(text.substr(0, slash));
	auto den_text = text.substr(slash + 1);
	if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
		throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
	mpz_class den = parse_integer(den_text);
	if (den == 0)
		throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

std::string to_string(const Rational& q)
{
	return q.get_str(10);
}

Rational factorial(unsigned n)
{
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return Rational(r);
}

Rational binomial(unsigned n, unsigned k)
{
	if (k > n)
		return 0;
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return Rational(r);
}

} // namespace halfshuffle
