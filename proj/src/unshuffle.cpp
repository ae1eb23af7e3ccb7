#include "halfshuffle/unshuffle.hpp"

#include <stdexcept>

namespace halfshuffle {

namespace {

using Key = std::pair<BarWord, BarWord>;

enum class Split { all, with_first, without_first };

Positions positions_of(unsigned mask, int n)
{
	Positions S;
	for (int p = 1; p <= n; ++p)
		if ((mask >> (p - 1)) & 1u)
			S.push_back(p);
	return S;
}

Positions range(int n)
{
	Positions U(static_cast<std::size_t>(n));
	for (int i = 0; i < n; ++i)
		U[i] = i + 1;
	return U;
}

SplitTensor unshuffle_word(const Word& w, Split split)
{
	const int n = w.degree();
	if (n > 30)
		throw std::length_error("word too long for subset enumeration");
	const auto U = range(n);
	SplitTensor r;
	for (unsigned mask = 0; mask < (1u << n); ++mask)
	{
		bool has_first = mask & 1u;
		if ((split == Split::with_first && !has_first) ||
		    (split == Split::without_first && has_first))
			continue;
		auto S = positions_of(mask, n);
		r.add(Key(BarWord(subword(w, S)), bar_of_components(w, connected_components(S, U))), 1);
	}
	return r;
}

SplitTensor classical_word(const Word& w, Split split)
{
	const int n = w.degree();
	if (n > 30)
		throw std::length_error("word too long for subset enumeration");
	const unsigned full = (1u << n) - 1;
	SplitTensor r;
	for (unsigned mask = 0; mask <= full; ++mask)
	{
		bool has_first = mask & 1u;
		if ((split == Split::with_first && !has_first) ||
		    (split == Split::without_first && has_first))
			continue;
		r.add(Key(BarWord(subword(w, positions_of(mask, n))),
		          BarWord(subword(w, positions_of(full & ~mask, n)))),
		      1);
	}
	return r;
}

SplitTensor unit_tensor()
{
	return SplitTensor(Key(BarWord(), BarWord()));
}

Tensor3 left_then(const std::function<SplitTensor(const BarWord&)>& f, const SplitTensor& t)
{
	Tensor3 r;
	for (auto const& [k, q] : t)
		for (auto const& [k2, q2] : f(k.first))
			r.add({k2.first, k2.second, k.second}, q * q2);
	return r;
}

Tensor3 right_then(const std::function<SplitTensor(const BarWord&)>& f, const SplitTensor& t)
{
	Tensor3 r;
	for (auto const& [k, q] : t)
		for (auto const& [k2, q2] : f(k.second))
			r.add({k.first, k2.first, k2.second}, q * q2);
	return r;
}

template <class Pred> AxiomResult check_each(std::string name, int degree, int alphabet_size,
                                             const UnshuffleStructure& s, Pred holds)
{
	AxiomResult r;
	r.name = std::move(name);
	for (int d = 1; d <= degree; ++d)
		for (auto const& x : s.basis(alphabet_size, d))
		{
			++r.checked;
			if (!holds(x))
			{
				r.ok = false;
				r.counterexample = {x};
				return r;
			}
		}
	return r;
}

std::vector<BarWord> bar_basis(int alphabet_size, int degree)
{
	return all_bar_words(alphabet_size, degree);
}

std::vector<BarWord> word_basis(int alphabet_size, int degree)
{
	std::vector<BarWord> r;
	for (auto const& w : all_words(alphabet_size, degree))
		r.emplace_back(w);
	return r;
}

} // namespace

SplitTensor operator*(const SplitTensor& x, const SplitTensor& y)
{
	SplitTensor r;
	for (auto const& [kx, qx] : x)
		for (auto const& [ky, qy] : y)
			r.add(Key(bar_concat(kx.first, ky.first), bar_concat(kx.second, ky.second)), qx * qy);
	return r;
}

SplitTensor swap_legs(const SplitTensor& t)
{
	SplitTensor r;
	for (auto const& [k, q] : t)
		r.add(Key(k.second, k.first), q);
	return r;
}

SplitTensor delta_word(const Word& w)
{
	return unshuffle_word(w, Split::all);
}

SplitTensor delta_prec_plus(const Word& w)
{
	return unshuffle_word(w, Split::with_first);
}

SplitTensor delta_succ_plus(const Word& w)
{
	return unshuffle_word(w, Split::without_first);
}

SplitTensor delta_bar(const BarWord& x)
{
	SplitTensor r = unit_tensor();
	for (auto const& w : x.components())
		r = r * delta_word(w);
	return r;
}

SplitTensor delta_prec_plus_bar(const BarWord& x)
{
	if (x.is_unit())
		throw std::invalid_argument("half-coproduct of the unit is undefined");
	return delta_prec_plus(x[0]) * delta_bar(x.drop_first());
}

SplitTensor delta_succ_plus_bar(const BarWord& x)
{
	if (x.is_unit())
		throw std::invalid_argument("half-coproduct of the unit is undefined");
	return delta_succ_plus(x[0]) * delta_bar(x.drop_first());
}

SplitTensor delta_prec_bar(const BarWord& x)
{
	return bar_structure().apply_prec(x);
}

SplitTensor delta_succ_bar(const BarWord& x)
{
	return bar_structure().apply_succ(x);
}

SplitTensor delta_reduced_bar(const BarWord& x)
{
	return bar_structure().apply_reduced(x);
}

SplitTensor delta_classical(const Word& w)
{
	return classical_word(w, Split::all);
}

SplitTensor delta_classical_prec_plus(const Word& w)
{
	return classical_word(w, Split::with_first);
}

SplitTensor delta_classical_succ_plus(const Word& w)
{
	return classical_word(w, Split::without_first);
}

SplitTensor UnshuffleStructure::apply_full(const BarWord& x) const
{
	return x.is_unit() ? unit_tensor() : full(x);
}

SplitTensor UnshuffleStructure::apply_prec(const BarWord& x) const
{
	if (x.is_unit())
		return {};
	auto r = prec_plus(x);
	r.add(Key(x, BarWord()), -1);
	return r;
}

SplitTensor UnshuffleStructure::apply_succ(const BarWord& x) const
{
	if (x.is_unit())
		return {};
	auto r = succ_plus(x);
	r.add(Key(BarWord(), x), -1);
	return r;
}

SplitTensor UnshuffleStructure::apply_reduced(const BarWord& x) const
{
	if (x.is_unit())
		return {};
	auto r = full(x);
	r.add(Key(x, BarWord()), -1);
	r.add(Key(BarWord(), x), -1);
	return r;
}

UnshuffleStructure bar_structure_from_words(std::function<SplitTensor(const Word&)> full,
                                            std::function<SplitTensor(const Word&)> prec_plus)
{
	UnshuffleStructure s;
	auto tail = [full](const BarWord& x) {
		SplitTensor r = unit_tensor();
		for (int i = 1; i < x.size(); ++i)
			r = r * full(x[i]);
		return r;
	};
	s.full = [full](const BarWord& x) {
		SplitTensor r = unit_tensor();
		for (auto const& w : x.components())
			r = r * full(w);
		return r;
	};
	s.prec_plus = [prec_plus, tail](const BarWord& x) { return prec_plus(x[0]) * tail(x); };
	s.succ_plus = [full, prec_plus, tail](const BarWord& x) {
		return (full(x[0]) - prec_plus(x[0])) * tail(x);
	};
	s.multiply = bar_concat;
	s.basis = bar_basis;
	return s;
}

UnshuffleStructure bar_structure()
{
	UnshuffleStructure s;
	s.full = delta_bar;
	s.prec_plus = delta_prec_plus_bar;
	s.succ_plus = delta_succ_plus_bar;
	s.multiply = bar_concat;
	s.basis = bar_basis;
	return s;
}

UnshuffleStructure classical_structure()
{
	UnshuffleStructure s;
	s.full = [](const BarWord& x) { return delta_classical(x[0]); };
	s.prec_plus = [](const BarWord& x) { return delta_classical_prec_plus(x[0]); };
	s.succ_plus = [](const BarWord& x) { return delta_classical_succ_plus(x[0]); };
	s.multiply = [](const BarWord& x, const BarWord& y) {
		Word u = x.is_unit() ? Word() : x[0];
		Word v = y.is_unit() ? Word() : y[0];
		return BarWord(u + v);
	};
	s.basis = word_basis;
	s.cocommutative = true;
	return s;
}

bool AxiomReport::ok() const
{
	return first_failure() == nullptr;
}

const AxiomResult* AxiomReport::find(const std::string& name) const
{
	for (auto const& r : results)
		if (r.name == name)
			return &r;
	return nullptr;
}

const AxiomResult* AxiomReport::first_failure() const
{
	for (auto const& r : results)
		if (!r.ok)
			return &r;
	return nullptr;
}

AxiomReport check_coassociativity(int degree, int alphabet_size, const UnshuffleStructure& s)
{
	auto full = [&s](const BarWord& x) { return s.apply_full(x); };
	AxiomReport report;
	report.results.push_back(check_each("coassociativity", degree, alphabet_size, s, [&](const BarWord& x) {
		auto d = full(x);
		return left_then(full, d) == right_then(full, d);
	}));
	return report;
}

AxiomReport check_unshuffle_axioms(int degree, int alphabet_size, const UnshuffleStructure& s,
                                   int pair_degree)
{
	if (pair_degree < 0)
		pair_degree = degree;
	auto full = [&s](const BarWord& x) { return s.apply_full(x); };
	auto prec = [&s](const BarWord& x) { return s.apply_prec(x); };
	auto succ = [&s](const BarWord& x) { return s.apply_succ(x); };
	auto reduced = [&s](const BarWord& x) { return s.apply_reduced(x); };

	AxiomReport report;
	report.results.push_back(check_each("C1", degree, alphabet_size, s, [&](const BarWord& x) {
		auto d = prec(x);
		return left_then(prec, d) == right_then(reduced, d);
	}));
	report.results.push_back(check_each("C2", degree, alphabet_size, s, [&](const BarWord& x) {
		return left_then(succ, prec(x)) == right_then(prec, succ(x));
	}));
	report.results.push_back(check_each("C3", degree, alphabet_size, s, [&](const BarWord& x) {
		auto d = succ(x);
		return left_then(reduced, d) == right_then(succ, d);
	}));
	report.results.push_back(check_each("counit", degree, alphabet_size, s, [&](const BarWord& x) {
		SplitTensor left_counit, right_counit;
		for (auto const& [k, q] : full(x))
		{
			if (k.first.is_unit())
				left_counit.add({BarWord(), k.second}, q);
			if (k.second.is_unit())
				right_counit.add({k.first, BarWord()}, q);
		}
		return left_counit == SplitTensor({BarWord(), x}) && right_counit == SplitTensor({x, BarWord()});
	}));

	// (D1)/(D2): Δ≺⁺(x·y) = Δ≺⁺(x)Δ(y), Δ≻⁺(x·y) = Δ≻⁺(x)Δ(y)
	for (auto [name, half] : {std::pair{"D1", &UnshuffleStructure::prec_plus},
	                          std::pair{"D2", &UnshuffleStructure::succ_plus}})
	{
		AxiomResult r;
		r.name = name;
		for (int total = 2; total <= pair_degree && r.ok; ++total)
			for (int dx = 1; dx < total && r.ok; ++dx)
				for (auto const& x : s.basis(alphabet_size, dx))
				{
					for (auto const& y : s.basis(alphabet_size, total - dx))
					{
						++r.checked;
						auto lhs = (s.*half)(s.multiply(x, y));
						SplitTensor rhs;
						for (auto const& [k, q] : (s.*half)(x))
							for (auto const& [k2, q2] : full(y))
								rhs.add({s.multiply(k.first, k2.first), s.multiply(k.second, k2.second)},
								        q * q2);
						if (!(lhs == rhs))
						{
							r.ok = false;
							r.counterexample = {x, y};
							break;
						}
					}
					if (!r.ok)
						break;
				}
		report.results.push_back(std::move(r));
	}

	if (s.cocommutative)
		report.results.push_back(check_each("half-swap", degree, alphabet_size, s, [&](const BarWord& x) {
			return prec(x) == swap_legs(succ(x));
		}));
	return report;
}

AxiomReport check_cocommutativity(int degree, int alphabet_size, const UnshuffleStructure& s)
{
	AxiomReport report;
	report.results.push_back(check_each("cocommutativity", degree, alphabet_size, s, [&](const BarWord& x) {
		auto d = s.apply_full(x);
		return swap_legs(d) == d;
	}));
	return report;
}

} // namespace halfshuffle
