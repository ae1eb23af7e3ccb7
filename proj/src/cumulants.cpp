#include "halfshuffle/cumulants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace halfshuffle {

namespace {

Rational product_of_components(const WordValues& phi, const BarWord& x)
{
	Rational r = 1;
	for (auto const& w : x.components())
		r *= phi.at(w);
	return r;
}

template <class Tag> void require_univariate(const WordTable<Tag>& t, const char* what)
{
	t.validate();
	if (!t.univariate)
		throw std::invalid_argument(std::string(what) + " requires a univariate sequence");
}

// [z^j] of a truncated power series product
std::vector<Rational> series_multiply(const std::vector<Rational>& x, const std::vector<Rational>& y,
                                      std::size_t length)
{
	std::vector<Rational> r(length, 0);
	for (std::size_t i = 0; i < x.size() && i < length; ++i)
		if (x[i] != 0)
			for (std::size_t j = 0; j < y.size() && i + j < length; ++j)
				r[i + j] += x[i] * y[j];
	return r;
}

void collect_mixed(const std::vector<Letter>& B, const std::vector<Letter>& C, int order,
                   std::vector<Word>& out)
{
	for (int n = 1; n < order; ++n)
		for (int m = 1; n + m <= order; ++m)
		{
			// all b-prefixes of length n times all c-suffixes of length m
			std::vector<std::vector<Letter>> prefixes{{}};
			for (int i = 0; i < n; ++i)
			{
				std::vector<std::vector<Letter>> next;
				for (auto const& p : prefixes)
					for (auto b : B)
					{
						next.push_back(p);
						next.back().push_back(b);
					}
				prefixes = std::move(next);
			}
			std::vector<std::vector<Letter>> suffixes{{}};
			for (int i = 0; i < m; ++i)
			{
				std::vector<std::vector<Letter>> next;
				for (auto const& p : suffixes)
					for (auto c : C)
					{
						next.push_back(p);
						next.back().push_back(c);
					}
				suffixes = std::move(next);
			}
			for (auto const& p : prefixes)
				for (auto const& s : suffixes)
				{
					auto letters = p;
					letters.insert(letters.end(), s.begin(), s.end());
					out.emplace_back(std::move(letters));
				}
		}
}

} // namespace

WordValues infinitesimal_fixed_point(const WordValues& phi, int alphabet_size, int order)
{
	WordValues kappa;
	for (int d = 1; d <= order; ++d)
		for (auto const& w : all_words(alphabet_size, d))
		{
			Rational v = phi.at(w);
			for (auto const& [k, q] : delta_prec_plus(w))
				if (k.first.degree() < d)
					v -= q * kappa.at(k.first[0]) * product_of_components(phi, k.second);
			kappa.emplace(w, std::move(v));
		}
	return kappa;
}

WordValues character_from_infinitesimal(const WordValues& kappa, int alphabet_size, int order)
{
	WordValues phi;
	for (int d = 1; d <= order; ++d)
		for (auto const& w : all_words(alphabet_size, d))
		{
			Rational v = 0;
			for (auto const& [k, q] : delta_prec_plus(w))
				v += q * kappa.at(k.first[0]) * product_of_components(phi, k.second);
			phi.emplace(w, std::move(v));
		}
	return phi;
}

CumulantSpec free_cumulants_from_moments(const MomentSpec& m)
{
	m.validate();
	CumulantSpec k{m.alphabet, m.order, {}, m.univariate};
	k.values = infinitesimal_fixed_point(m.values, m.alphabet.size(), m.order);
	return k;
}

MomentSpec moments_from_free_cumulants(const CumulantSpec& k)
{
	k.validate();
	MomentSpec m{k.alphabet, k.order, {}, k.univariate};
	if (!k.univariate)
	{
		m.values = character_from_infinitesimal(k.values, k.alphabet.size(), k.order);
		return m;
	}
	const auto kn = k.sequence();
	const auto N = static_cast<std::size_t>(k.order);
	std::vector<Rational> M{1}; // m_0..m_{n-1}
	for (std::size_t n = 1; n <= N; ++n)
	{
		// [z^{n−s}] M(z)^s, with M known through degree n−1
		Rational mn = 0;
		std::vector<Rational> power{1};
		for (std::size_t s = 1; s <= n; ++s)
		{
			power = series_multiply(power, M, n);
			mn += kn[s - 1] * power[n - s];
		}
		M.push_back(mn);
	}
	m.values.clear();
	for (std::size_t n = 1; n <= N; ++n)
		m.values.emplace(Word::power(static_cast<int>(n)), M[n]);
	return m;
}

CumulantSpec multivariate_free_cumulants(const MomentSpec& m)
{
	if (m.univariate)
		throw std::invalid_argument("multivariate_free_cumulants requires a word table");
	return free_cumulants_from_moments(m);
}

std::vector<Rational> free_series_residual(const std::vector<Rational>& cumulants,
                                           const std::vector<Rational>& moments)
{
	const std::size_t N = std::min(cumulants.size(), moments.size());
	const std::size_t len = N + 1;
	std::vector<Rational> M(len, 0), zM(len, 0);
	M[0] = 1;
	for (std::size_t n = 1; n <= N; ++n)
		M[n] = moments[n - 1];
	for (std::size_t n = 1; n < len; ++n)
		zM[n] = M[n - 1];

	std::vector<Rational> composed(len, 0), power(len, 0);
	composed[0] = 1;
	power[0] = 1;
	for (std::size_t i = 1; i <= N; ++i)
	{
		power = series_multiply(power, zM, len);
		for (std::size_t j = 0; j < len; ++j)
			composed[j] += cumulants[i - 1] * power[j];
	}
	std::vector<Rational> residual;
	for (std::size_t n = 1; n <= N; ++n)
		residual.push_back(composed[n] - M[n]);
	return residual;
}

CumulantSpec classical_cumulants_from_moments(const MomentSpec& m)
{
	require_univariate(m, "classical_cumulants_from_moments");
	auto phi = LinForm::counit(Mode::classical, 1, m.order);
	for (auto const& [w, q] : m.values)
		phi.set(BarWord(w), q);
	auto c = solve_left_fixed_point(phi);
	return CumulantSpec::from_sequence([&] {
		std::vector<Rational> seq;
		for (int n = 1; n <= m.order; ++n)
			seq.push_back(c.at(BarWord(Word::power(n))));
		return seq;
	}());
}

MomentSpec classical_moments_from_cumulants(const CumulantSpec& c)
{
	require_univariate(c, "classical_moments_from_cumulants");
	LinForm form(Mode::classical, 1, c.order);
	for (auto const& [w, q] : c.values)
		form.set(BarWord(w), q);
	// exp≺(c) is the solution of φ = e + c≺φ
	auto phi = exp_prec(form);
	std::vector<Rational> seq;
	for (int n = 1; n <= c.order; ++n)
		seq.push_back(phi.at(BarWord(Word::power(n))));
	return MomentSpec::from_sequence(seq);
}

MomentSpec independent_product(const MomentSpec& b, const MomentSpec& c)
{
	b.validate();
	c.validate();
	auto names = b.alphabet.names();
	names.insert(names.end(), c.alphabet.names().begin(), c.alphabet.names().end());
	Alphabet joint(names); // rejects shared names
	const int order = std::min(b.order, c.order);
	const auto nb = static_cast<std::uint8_t>(b.alphabet.size());

	WordValues values;
	for (int d = 1; d <= order; ++d)
		for (auto const& w : all_words(joint.size(), d))
		{
			std::vector<Letter> wb, wc;
			for (auto a : w.letters())
			{
				if (a.id < nb)
					wb.push_back(a);
				else
					wc.push_back(Letter{static_cast<std::uint8_t>(a.id - nb)});
			}
			Rational v = 1;
			if (!wb.empty())
				v *= b[Word(wb)];
			if (!wc.empty())
				v *= c[Word(wc)];
			values.emplace(w, v);
		}
	return MomentSpec::from_table(joint, order, std::move(values));
}

ClusterReport cluster_check(const MomentSpec& phi, const std::vector<std::string>& B,
                            const std::vector<std::string>& C, int order)
{
	phi.validate();
	if (order < 2 || order > phi.order)
		throw std::invalid_argument("cluster_check: order must be in [2, table order]");
	std::vector<Letter> lb, lc;
	std::set<Letter> seen;
	for (auto const& n : B)
		lb.push_back(phi.alphabet.letter(n));
	for (auto const& n : C)
		lc.push_back(phi.alphabet.letter(n));
	for (auto a : lb)
		seen.insert(a);
	for (auto a : lc)
		if (seen.contains(a))
			throw std::invalid_argument("cluster_check: sub-alphabets are not disjoint");
	if (lb.empty() || lc.empty())
		throw std::invalid_argument("cluster_check: sub-alphabets must be nonempty");

	ClusterReport report;
	collect_mixed(lb, lc, order, report.mixed_words);
	std::set<Letter> in_b(lb.begin(), lb.end());
	for (auto const& w : report.mixed_words)
	{
		int split = 0;
		while (split < w.degree() && in_b.contains(w.letters()[split]))
			++split;
		Word head(std::vector<Letter>(w.letters().begin(), w.letters().begin() + split));
		Word tail(std::vector<Letter>(w.letters().begin() + split, w.letters().end()));
		if (phi[w] != phi[head] * phi[tail])
			report.hypothesis_failures.push_back(w);
	}
	report.hypothesis_holds = report.hypothesis_failures.empty();
	if (!report.hypothesis_holds)
		return report;

	auto kappa = infinitesimal_fixed_point(phi.values, phi.alphabet.size(), order);
	for (auto const& w : report.mixed_words)
	{
		Rational a = abs(kappa.at(w));
		if (a != 0)
			report.nonzero_cumulants.push_back(w);
		if (a > report.max_abs_cumulant)
			report.max_abs_cumulant = a;
	}
	return report;
}

} // namespace halfshuffle
