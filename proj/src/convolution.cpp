#include "halfshuffle/convolution.hpp"

#include <array>
#include <sstream>

namespace halfshuffle {

namespace {

enum class Part { full, prec_plus, succ_plus };

// Coproducts are recomputed for every key of every product otherwise.
// Only low degrees are memoized to bound memory.
constexpr int kCacheDegree = 7;

const SplitTensor& coproduct(Mode mode, Part part, const BarWord& x)
{
	thread_local std::array<std::map<BarWord, SplitTensor>, 6> cache;
	auto& slot = cache[static_cast<std::size_t>(mode) * 3 + static_cast<std::size_t>(part)];
	if (auto it = slot.find(x); it != slot.end())
		return it->second;

	SplitTensor t;
	if (mode == Mode::bar)
	{
		switch (part)
		{
		case Part::full: t = delta_bar(x); break;
		case Part::prec_plus: t = delta_prec_plus_bar(x); break;
		case Part::succ_plus: t = delta_succ_plus_bar(x); break;
		}
	}
	else
	{
		switch (part)
		{
		case Part::full: t = delta_classical(x[0]); break;
		case Part::prec_plus: t = delta_classical_prec_plus(x[0]); break;
		case Part::succ_plus: t = delta_classical_succ_plus(x[0]); break;
		}
	}
	if (x.degree() > kCacheDegree)
	{
		thread_local SplitTensor scratch;
		scratch = std::move(t);
		return scratch;
	}
	return slot.emplace(x, std::move(t)).first->second;
}

void require_compatible(const LinForm& f, const LinForm& g)
{
	if (!f.compatible(g))
		throw std::invalid_argument("linear forms differ in mode, alphabet or truncation");
}

// Σ f(x′)g(x″) over the chosen coproduct, for every nonunit key.
LinForm pair_through(const LinForm& f, const LinForm& g, Part part)
{
	require_compatible(f, g);
	LinForm r(f.mode(), f.alphabet_size(), f.truncation());
	for (int d = 1; d <= f.truncation(); ++d)
		for (auto const& x : f.basis(d))
		{
			Rational sum = 0;
			for (auto const& [k, q] : coproduct(f.mode(), part, x))
			{
				const Rational& a = f.at(k.first);
				if (a == 0)
					continue;
				const Rational& b = g.at(k.second);
				if (b == 0)
					continue;
				sum += q * a * b;
			}
			r.set(x, sum);
		}
	return r;
}

void require_unit(const LinForm& f, int value, const char* what)
{
	if (f.unit_value() != value)
		throw std::invalid_argument(std::string(what) + ": unit value must be " + std::to_string(value));
}

LinForm power_series(const LinForm& Y, const std::vector<Rational>& coefficients)
{
	// Σ_k c_k Y^{⧢k}; Y^{⧢k} vanishes below degree k
	auto e = LinForm::counit(Y.mode(), Y.alphabet_size(), Y.truncation());
	LinForm total = coefficients[0] * e;
	LinForm power = e;
	for (std::size_t k = 1; k < coefficients.size(); ++k)
	{
		power = convolve(power, Y);
		total += coefficients[k] * power;
	}
	return total;
}

} // namespace

std::vector<BarWord> basis(Mode mode, int alphabet_size, int degree)
{
	if (mode == Mode::bar)
		return all_bar_words(alphabet_size, degree);
	std::vector<BarWord> r;
	for (auto const& w : all_words(alphabet_size, degree))
		r.emplace_back(w);
	return r;
}

LinForm::LinForm(Mode mode, int alphabet_size, int truncation)
    : mode_(mode), alphabet_size_(alphabet_size), truncation_(truncation)
{
	if (alphabet_size < 1 || alphabet_size > 255)
		throw std::invalid_argument("alphabet size must be in [1, 255]");
	if (truncation < 0)
		throw std::invalid_argument("truncation must be nonnegative");
}

LinForm LinForm::counit(Mode mode, int alphabet_size, int truncation)
{
	LinForm e(mode, alphabet_size, truncation);
	e.unit_ = 1;
	return e;
}

Rational LinForm::operator()(const BarWord& x) const
{
	return at(x);
}

const Rational& LinForm::at(const BarWord& x) const
{
	static const Rational zero = 0;
	if (x.is_unit())
		return unit_;
	if (x.degree() > truncation_)
		throw std::out_of_range("evaluation above truncation");
	auto it = table_.find(x);
	return it == table_.end() ? zero : it->second;
}

void LinForm::set(const BarWord& x, const Rational& q)
{
	if (x.is_unit())
	{
		unit_ = q;
		return;
	}
	if (x.degree() > truncation_)
		throw std::out_of_range("key above truncation");
	if (mode_ == Mode::classical && x.size() != 1)
		throw std::invalid_argument("classical forms take words, not bar-words");
	for (auto const& w : x.components())
		for (auto a : w.letters())
			if (a.id >= alphabet_size_)
				throw std::invalid_argument("letter outside the alphabet");
	if (q == 0)
		table_.erase(x);
	else
		table_[x] = q;
}

std::vector<BarWord> LinForm::basis(int degree) const
{
	return halfshuffle::basis(mode_, alphabet_size_, degree);
}

bool LinForm::compatible(const LinForm& other) const
{
	return mode_ == other.mode_ && alphabet_size_ == other.alphabet_size_ &&
	       truncation_ == other.truncation_;
}

LinForm& LinForm::operator+=(const LinForm& other)
{
	require_compatible(*this, other);
	unit_ += other.unit_;
	for (auto const& [x, q] : other.table_)
	{
		auto& v = table_[x];
		v += q;
		if (v == 0)
			table_.erase(x);
	}
	return *this;
}

LinForm& LinForm::operator-=(const LinForm& other)
{
	require_compatible(*this, other);
	unit_ -= other.unit_;
	for (auto const& [x, q] : other.table_)
	{
		auto& v = table_[x];
		v -= q;
		if (v == 0)
			table_.erase(x);
	}
	return *this;
}

LinForm& LinForm::operator*=(const Rational& s)
{
	unit_ *= s;
	if (s == 0)
		table_.clear();
	else
		for (auto& [x, q] : table_)
			q *= s;
	return *this;
}

LinForm truncate(const LinForm& f, int n)
{
	LinForm r(f.mode(), f.alphabet_size(), n);
	r.set_unit_value(f.unit_value());
	for (auto const& [x, q] : f.table())
		if (x.degree() <= n)
			r.set(x, q);
	return r;
}

LinForm convolve(const LinForm& f, const LinForm& g)
{
	auto r = pair_through(f, g, Part::full);
	r.set_unit_value(f.unit_value() * g.unit_value());
	return r;
}

LinForm half_prec(const LinForm& f, const LinForm& g)
{
	// left legs of Δ≺⁺ are never the unit, so only f̄ enters and the
	// x⊗1 term realises f≺e = f
	if (f.unit_value() != 0 && g.unit_value() != 0)
		throw UndefinedProduct("1≺1 is undefined");
	return pair_through(f, g, Part::prec_plus);
}

LinForm half_succ(const LinForm& f, const LinForm& g)
{
	// right legs of Δ≻⁺ are never the unit; the 1⊗x term realises e≻g = g
	if (f.unit_value() != 0 && g.unit_value() != 0)
		throw UndefinedProduct("1≻1 is undefined");
	return pair_through(f, g, Part::succ_plus);
}

LinForm prelie(const LinForm& f, const LinForm& g)
{
	if (f.unit_value() != 0 || g.unit_value() != 0)
		throw std::invalid_argument("prelie: arguments must vanish on the unit");
	return half_succ(f, g) - half_prec(g, f);
}

LinForm exp_prec(const LinForm& kappa)
{
	require_unit(kappa, 0, "exp_prec");
	auto e = LinForm::counit(kappa.mode(), kappa.alphabet_size(), kappa.truncation());
	LinForm total = e;
	LinForm power = kappa;
	for (int n = 1; n <= kappa.truncation(); ++n)
	{
		total += power;
		if (n < kappa.truncation())
			power = half_prec(kappa, power);
	}
	return total;
}

LinForm exp_succ(const LinForm& kappa)
{
	require_unit(kappa, 0, "exp_succ");
	auto e = LinForm::counit(kappa.mode(), kappa.alphabet_size(), kappa.truncation());
	LinForm total = e;
	LinForm power = kappa;
	for (int n = 1; n <= kappa.truncation(); ++n)
	{
		total += power;
		if (n < kappa.truncation())
			power = half_succ(power, kappa);
	}
	return total;
}

LinForm exp_shuffle(const LinForm& f)
{
	require_unit(f, 0, "exp_shuffle");
	std::vector<Rational> c;
	for (int k = 0; k <= f.truncation(); ++k)
		c.push_back(1 / factorial(static_cast<unsigned>(k)));
	return power_series(f, c);
}

LinForm log_shuffle(const LinForm& F)
{
	require_unit(F, 1, "log_shuffle");
	auto Y = F - LinForm::counit(F.mode(), F.alphabet_size(), F.truncation());
	std::vector<Rational> c{0};
	for (int k = 1; k <= F.truncation(); ++k)
		c.push_back(Rational(k % 2 ? 1 : -1, k));
	return power_series(Y, c);
}

LinForm shuffle_inverse(const LinForm& F)
{
	require_unit(F, 1, "shuffle_inverse");
	auto Y = F - LinForm::counit(F.mode(), F.alphabet_size(), F.truncation());
	std::vector<Rational> c;
	for (int k = 0; k <= F.truncation(); ++k)
		c.push_back(k % 2 ? -1 : 1);
	return power_series(Y, c);
}

LinForm solve_left_fixed_point(const LinForm& Phi, bool cross_check)
{
	require_unit(Phi, 1, "solve_left_fixed_point");
	LinForm kappa(Phi.mode(), Phi.alphabet_size(), Phi.truncation());
	for (int d = 1; d <= Phi.truncation(); ++d)
		for (auto const& x : Phi.basis(d))
		{
			Rational v = Phi.at(x);
			for (auto const& [k, q] : coproduct(Phi.mode(), Part::prec_plus, x))
				if (k.first.degree() < d)
					v -= q * kappa.at(k.first) * Phi.at(k.second);
			kappa.set(x, v);
		}
	if (cross_check && !(kappa == left_fixed_point_closed_form(Phi)))
		throw std::logic_error("fixed point recursion disagrees with the closed form");
	return kappa;
}

LinForm left_fixed_point_closed_form(const LinForm& Phi)
{
	auto Y = Phi - LinForm::counit(Phi.mode(), Phi.alphabet_size(), Phi.truncation());
	return half_prec(Y, shuffle_inverse(Phi));
}

Rational bernoulli(int m)
{
	// Σ_{k=0}^{m} C(m+1, k) B_k = 0 for m ≥ 1
	std::vector<Rational> B{1};
	for (int n = 1; n <= m; ++n)
	{
		Rational s = 0;
		for (int k = 0; k < n; ++k)
			s += binomial(n + 1, k) * B[k];
		B.push_back(-s / (n + 1));
	}
	return B[m];
}

LinForm magnus(const LinForm& kappa)
{
	require_unit(kappa, 0, "magnus");
	const int N = kappa.truncation();
	std::vector<Rational> coeff;
	for (int m = 0; m < N; ++m)
		coeff.push_back(bernoulli(m) / factorial(m));

	// after k rounds Ω is exact through degree k
	LinForm omega = kappa;
	for (int round = 1; round < N; ++round)
	{
		LinForm next = kappa;
		LinForm term = kappa;
		for (int m = 1; m < N; ++m)
		{
			term = prelie(omega, term);
			if (coeff[m] != 0)
				next += coeff[m] * term;
		}
		omega = std::move(next);
	}
	return omega;
}

LinForm extend_character(const WordValues& kappa, int alphabet_size, int truncation)
{
	auto r = LinForm::counit(Mode::bar, alphabet_size, truncation);
	for (int d = 1; d <= truncation; ++d)
		for (auto const& x : all_bar_words(alphabet_size, d))
		{
			Rational v = 1;
			for (auto const& w : x.components())
			{
				auto it = kappa.find(w);
				if (it == kappa.end())
				{
					v = 0;
					break;
				}
				v *= it->second;
			}
			r.set(x, v);
		}
	return r;
}

LinForm restrict_infinitesimal(const LinForm& F)
{
	LinForm r(F.mode(), F.alphabet_size(), F.truncation());
	for (auto const& [x, q] : F.table())
		if (x.size() == 1)
			r.set(x, q);
	return r;
}

WordValues word_values(const LinForm& F)
{
	WordValues r;
	for (int d = 1; d <= F.truncation(); ++d)
		for (auto const& w : all_words(F.alphabet_size(), d))
			r.emplace(w, F.at(BarWord(w)));
	return r;
}

CharacterFlag classify(const LinForm& F)
{
	CharacterFlag flag;
	flag.is_unital = F.unit_value() == 1;
	flag.is_multiplicative = flag.is_unital;
	flag.is_infinitesimal = F.unit_value() == 0;
	if (F.mode() != Mode::bar)
		return flag;
	for (int d = 2; d <= F.truncation(); ++d)
		for (auto const& x : F.basis(d))
		{
			if (x.size() < 2)
				continue;
			const Rational& v = F.at(x);
			if (v != 0)
				flag.is_infinitesimal = false;
			if (flag.is_multiplicative)
			{
				Rational p = 1;
				for (auto const& w : x.components())
					p *= F.at(BarWord(w));
				if (p != v)
					flag.is_multiplicative = false;
			}
		}
	return flag;
}

Rational FormSampler::next_rational()
{
	auto num = static_cast<long>(engine_() % 19) - 9;
	auto den = static_cast<long>(engine_() % 3) + 1;
	Rational q(num, den);
	q.canonicalize();
	return q;
}

LinForm FormSampler::sample(Mode mode, int alphabet_size, int truncation, bool unital)
{
	LinForm f(mode, alphabet_size, truncation);
	f.set_unit_value(unital ? 1 : 0);
	for (int d = 1; d <= truncation; ++d)
		for (auto const& x : f.basis(d))
			f.set(x, next_rational());
	return f;
}

LinForm FormSampler::sample_infinitesimal(int alphabet_size, int truncation)
{
	LinForm f(Mode::bar, alphabet_size, truncation);
	for (int d = 1; d <= truncation; ++d)
		for (auto const& w : all_words(alphabet_size, d))
			f.set(BarWord(w), next_rational());
	return f;
}

} // namespace halfshuffle
