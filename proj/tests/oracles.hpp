#pragma once

// Independent reference computations for the tests. Nothing here calls the
// unshuffle or convolution code.

#include "halfshuffle/partitions.hpp"
#include "halfshuffle/rational.hpp"

#include <random>
#include <vector>

namespace oracle {

using halfshuffle::Rational;
using Series = std::vector<Rational>;

inline Rational random_rational(std::mt19937_64& rng)
{
	Rational r(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 3) + 1);
	r.canonicalize();
	return r;
}

inline std::vector<Rational> random_sequence(std::mt19937_64& rng, int n)
{
	std::vector<Rational> r;
	for (int i = 0; i < n; ++i)
		r.push_back(random_rational(rng));
	return r;
}

inline Series multiply(const Series& x, const Series& y)
{
	Series r(x.size(), 0);
	for (std::size_t i = 0; i < x.size(); ++i)
		for (std::size_t j = 0; i + j < r.size(); ++j)
			r[i + j] += x[i] * y[j];
	return r;
}

/// log(1 + Y) for Y with zero constant term, truncated to the length of Y.
inline Series log1p(const Series& Y)
{
	Series r(Y.size(), 0), power(Y.size(), 0);
	power[0] = 1;
	for (std::size_t k = 1; k < Y.size(); ++k)
	{
		power = multiply(power, Y);
		Rational c(k % 2 ? 1 : -1, static_cast<long>(k));
		for (std::size_t i = 0; i < r.size(); ++i)
			r[i] += c * power[i];
	}
	return r;
}

/// Classical cumulants c_1..c_n as n! [z^n] log Σ m_n z^n / n!.
inline std::vector<Rational> classical_cumulants_by_egf(const std::vector<Rational>& m)
{
	Series Y(m.size() + 1, 0);
	for (std::size_t n = 1; n <= m.size(); ++n)
		Y[n] = m[n - 1] / halfshuffle::factorial(static_cast<unsigned>(n));
	auto L = log1p(Y);
	std::vector<Rational> c;
	for (std::size_t n = 1; n <= m.size(); ++n)
		c.push_back(L[n] * halfshuffle::factorial(static_cast<unsigned>(n)));
	return c;
}

/// m_n = Σ_{k} C(n−1, k−1) c_k m_{n−k}, m_0 = 1.
inline std::vector<Rational> classical_moments_by_binomial(const std::vector<Rational>& c)
{
	std::vector<Rational> m{1};
	for (std::size_t n = 1; n <= c.size(); ++n)
	{
		Rational s = 0;
		for (std::size_t k = 1; k <= n; ++k)
			s += halfshuffle::binomial(n - 1, k - 1) * c[k - 1] * m[n - k];
		m.push_back(s);
	}
	m.erase(m.begin());
	return m;
}

/// Coefficients 1..N of C(zM(z)) − M(z), by substituting the series.
inline std::vector<Rational> free_residual(const std::vector<Rational>& k, const std::vector<Rational>& m)
{
	const std::size_t N = std::min(k.size(), m.size());
	Series M(N + 1, 0), zM(N + 1, 0);
	M[0] = 1;
	for (std::size_t n = 1; n <= N; ++n)
		M[n] = m[n - 1];
	for (std::size_t n = 1; n <= N; ++n)
		zM[n] = M[n - 1];
	Series composed(N + 1, 0), power(N + 1, 0);
	composed[0] = 1;
	power[0] = 1;
	for (std::size_t s = 1; s <= N; ++s)
	{
		power = multiply(power, zM);
		for (std::size_t i = 0; i <= N; ++i)
			composed[i] += k[s - 1] * power[i];
	}
	std::vector<Rational> r;
	for (std::size_t n = 1; n <= N; ++n)
		r.push_back(composed[n] - M[n]);
	return r;
}

/// Moments by summing over a partition family: m_n = Σ_π Π_B k_|B|.
inline std::vector<Rational> moments_by_partitions(const std::vector<Rational>& k,
                                                   halfshuffle::PartitionFamily family)
{
	std::vector<Rational> m;
	for (int n = 1; n <= static_cast<int>(k.size()); ++n)
	{
		Rational s = 0;
		for (auto const& p : halfshuffle::enumerate(family, n))
		{
			Rational t = 1;
			for (auto const& b : p.blocks)
				t *= k[b.size() - 1];
			s += t;
		}
		m.push_back(s);
	}
	return m;
}

} // namespace oracle
