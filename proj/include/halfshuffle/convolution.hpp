#pragma once

#include "halfshuffle/partitions.hpp"
#include "halfshuffle/unshuffle.hpp"
#include "halfshuffle/words.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace halfshuffle {

/// bar: forms on T̄(T(A)) with the coproduct Δ of bar-words.
/// classical: forms on T̄(A) with the cocommutative Δ⧢; keys are words.
enum class Mode { bar, classical };

/// Raised for 1≺1 and 1≻1, which have no consistent value.
class UndefinedProduct : public std::domain_error
{
  public:
	using std::domain_error::domain_error;
};

/// Nonunit basis elements of the given degree for a mode.
std::vector<BarWord> basis(Mode mode, int alphabet_size, int degree);

/// A linear form truncated at a degree bound: exact values on every basis
/// element of degree ≤ truncation, plus the value at the unit. Keys absent
/// from the table have value 0. Products drop everything above the bound.
class LinForm
{
  public:
	LinForm(Mode mode, int alphabet_size, int truncation);

	/// The counit e: 1 on the unit, 0 elsewhere.
	static LinForm counit(Mode mode, int alphabet_size, int truncation);

	Mode mode() const { return mode_; }
	int alphabet_size() const { return alphabet_size_; }
	int truncation() const { return truncation_; }

	const Rational& unit_value() const { return unit_; }
	void set_unit_value(Rational q) { unit_ = std::move(q); }

	/// Value at x; the unit gives unit_value(). Throws std::out_of_range
	/// above the truncation.
	Rational operator()(const BarWord& x) const;
	const Rational& at(const BarWord& x) const;
	/// Throws std::invalid_argument if x does not belong to the mode or
	/// the alphabet, std::out_of_range above the truncation.
	void set(const BarWord& x, const Rational& q);

	const std::map<BarWord, Rational>& table() const { return table_; }
	std::vector<BarWord> basis(int degree) const;
	bool compatible(const LinForm& other) const;

	LinForm& operator+=(const LinForm& other);
	LinForm& operator-=(const LinForm& other);
	LinForm& operator*=(const Rational& s);
	friend LinForm operator+(LinForm f, const LinForm& g) { return f += g; }
	friend LinForm operator-(LinForm f, const LinForm& g) { return f -= g; }
	friend LinForm operator*(const Rational& s, LinForm f) { return f *= s; }
	friend LinForm operator-(LinForm f) { return f *= -1; }
	friend bool operator==(const LinForm&, const LinForm&) = default;

  private:
	Mode mode_;
	int alphabet_size_;
	int truncation_;
	Rational unit_ = 0;
	std::map<BarWord, Rational> table_;
};

/// f with every value above degree n removed and truncation lowered to n.
LinForm truncate(const LinForm& f, int n);

/// f*g = m∘(f⊗g)∘Δ; this is the shuffle product f⧢g.
LinForm convolve(const LinForm& f, const LinForm& g);

/// f≺g through Δ≺, with f≺e = f and e≺f = 0. Throws UndefinedProduct when
/// both arguments have a nonzero unit value.
LinForm half_prec(const LinForm& f, const LinForm& g);
/// f≻g through Δ≻, with e≻f = f and f≻e = 0.
LinForm half_succ(const LinForm& f, const LinForm& g);

/// f▷g = f≻g − g≺f. Both arguments must vanish on the unit.
LinForm prelie(const LinForm& f, const LinForm& g);

/// e + Σ κ^{≺n}, κ^{≺n} = κ≺κ^{≺(n−1)}; solves X = e + κ≺X.
LinForm exp_prec(const LinForm& kappa);
/// e + Σ κ^{≻n}, κ^{≻n} = κ^{≻(n−1)}≻κ; solves Z = e + κ≻Z.
LinForm exp_succ(const LinForm& kappa);

LinForm exp_shuffle(const LinForm& f);
/// Requires unit value 1.
LinForm log_shuffle(const LinForm& F);
/// Σ_k (−1)^k (F−e)^{⧢k}. Requires unit value 1.
LinForm shuffle_inverse(const LinForm& F);

/// The unique κ with Φ = e + κ≺Φ, computed degree by degree:
/// κ(x) = Φ(x) − Σ κ(x′)Φ(x″) over the terms of Δ≺⁺(x) other than x⊗1.
/// With cross_check the result is compared against
/// left_fixed_point_closed_form and a std::logic_error is thrown on mismatch.
LinForm solve_left_fixed_point(const LinForm& Phi, bool cross_check = true);
/// (Φ−e) ≺ Σ_n (−1)^n (Φ−e)^{⧢n}.
LinForm left_fixed_point_closed_form(const LinForm& Phi);

/// Bernoulli number with B_1 = −1/2.
Rational bernoulli(int m);

/// Pre-Lie Magnus expansion Ω′(κ) = Σ_m B_m/m! L^m_{Ω′▷}(κ), by iterating
/// the recursion once per degree.
LinForm magnus(const LinForm& kappa);

/// Ch(κ): Ch(κ)(w_1|...|w_k) = κ(w_1)...κ(w_k), Ch(κ)(1) = 1.
LinForm extend_character(const WordValues& kappa, int alphabet_size, int truncation);
/// Res(F): F on single-component keys, zero on the unit and on products.
LinForm restrict_infinitesimal(const LinForm& F);
/// Values of F on single-component keys.
WordValues word_values(const LinForm& F);

struct CharacterFlag
{
	bool is_unital = false;
	bool is_multiplicative = false;
	bool is_infinitesimal = false;
};

/// Predicates evaluated on every bar-word within the truncation.
CharacterFlag classify(const LinForm& F);

/// Deterministic generator for property tests: values p/q with p in
/// [−9, 9] and q in {1, 2, 3} on every basis element.
class FormSampler
{
  public:
	explicit FormSampler(std::uint64_t seed) : engine_(seed) {}

	Rational next_rational();
	LinForm sample(Mode mode, int alphabet_size, int truncation, bool unital = false);
	/// A form vanishing on the unit and on every multi-component key.
	LinForm sample_infinitesimal(int alphabet_size, int truncation);

  private:
	// raw engine output is fixed by the standard; distributions are not
	std::mt19937_64 engine_;
};

} // namespace halfshuffle
