#pragma once

#include "halfshuffle/words.hpp"

#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace halfshuffle {

/// Element of T̄(T(A)) ⊗ T̄(T(A)). Classical coproducts use single-component
/// legs (plain words) in the same container.
using SplitTensor = FormalSum<std::pair<BarWord, BarWord>>;
using Tensor3 = FormalSum<std::tuple<BarWord, BarWord, BarWord>>;

/// Legwise product (x'⊗x'')(y'⊗y'') = (x'|y')⊗(x''|y'').
SplitTensor operator*(const SplitTensor& x, const SplitTensor& y);
SplitTensor swap_legs(const SplitTensor& t);

// Coproduct on T(T(A)):  Δ(a_1...a_n) = Σ_{S⊆[n]} a_S ⊗ a_{J_1}|...|a_{J_k},
// with the J_i the connected components of [n]−S. Subsets are visited
// by an increasing binary counter over positions.
SplitTensor delta_word(const Word& w);
/// Σ over S containing position 1.
SplitTensor delta_prec_plus(const Word& w);
/// Σ over S not containing position 1.
SplitTensor delta_succ_plus(const Word& w);

/// Multiplicative extension; delta_bar(1) = 1⊗1.
SplitTensor delta_bar(const BarWord& x);
/// Δ≺⁺(w_1|...|w_m) = Δ≺⁺(w_1)Δ(w_2)...Δ(w_m). Throws on the unit.
SplitTensor delta_prec_plus_bar(const BarWord& x);
SplitTensor delta_succ_plus_bar(const BarWord& x);
/// Δ≺ = Δ≺⁺ − x⊗1, Δ≻ = Δ≻⁺ − 1⊗x, Δ̄ = Δ − x⊗1 − 1⊗x.
SplitTensor delta_prec_bar(const BarWord& x);
SplitTensor delta_succ_bar(const BarWord& x);
SplitTensor delta_reduced_bar(const BarWord& x);

// Cocommutative unshuffle coproduct on T̄(A): Δ⧢(w) = Σ_J a_J ⊗ a_{[n]−J}.
SplitTensor delta_classical(const Word& w);
SplitTensor delta_classical_prec_plus(const Word& w);
SplitTensor delta_classical_succ_plus(const Word& w);

/// A coproduct with its half-unshuffle splitting, given on nonunit basis
/// elements. The axiom checkers run against this so that mutated
/// coproducts can be fed through the same code.
struct UnshuffleStructure
{
	std::function<SplitTensor(const BarWord&)> full;
	std::function<SplitTensor(const BarWord&)> prec_plus;
	std::function<SplitTensor(const BarWord&)> succ_plus;
	/// The algebra product used by (D1)/(D2).
	std::function<BarWord(const BarWord&, const BarWord&)> multiply;
	/// Nonunit basis elements of a given degree.
	std::function<std::vector<BarWord>(int alphabet_size, int degree)> basis;
	bool cocommutative = false;

	SplitTensor apply_full(const BarWord& x) const;
	SplitTensor apply_prec(const BarWord& x) const;
	SplitTensor apply_succ(const BarWord& x) const;
	SplitTensor apply_reduced(const BarWord& x) const;
};

/// Δ on T̄(T(A)) with its half-coproducts.
UnshuffleStructure bar_structure();
/// Extends word-level Δ and Δ≺⁺ multiplicatively to bar-words, with
/// Δ≻⁺ := Δ − Δ≺⁺ on words.
UnshuffleStructure bar_structure_from_words(std::function<SplitTensor(const Word&)> full,
                                            std::function<SplitTensor(const Word&)> prec_plus);
/// Δ⧢ on T̄(A), product = concatenation of words.
UnshuffleStructure classical_structure();

struct AxiomResult
{
	std::string name;
	bool ok = true;
	/// Inputs of the first failure (one element, or two for (D1)/(D2)).
	std::vector<BarWord> counterexample;
	int checked = 0;
};

struct AxiomReport
{
	std::vector<AxiomResult> results;

	bool ok() const;
	const AxiomResult* find(const std::string& name) const;
	const AxiomResult* first_failure() const;
};

/// (Δ⊗I)∘Δ = (I⊗Δ)∘Δ on all nonunit basis elements of degree ≤ degree.
AxiomReport check_coassociativity(int degree, int alphabet_size,
                                  const UnshuffleStructure& s = bar_structure());

/// (C1)–(C3) on basis elements of degree ≤ degree, (D1)–(D2) on pairs of
/// total degree ≤ pair_degree (defaults to degree), the counit law, and,
/// for a cocommutative structure, Δ≺ = τ∘Δ≻.
AxiomReport check_unshuffle_axioms(int degree, int alphabet_size,
                                   const UnshuffleStructure& s = bar_structure(),
                                   int pair_degree = -1);

/// τ∘Δ = Δ on basis elements of degree ≤ degree.
AxiomReport check_cocommutativity(int degree, int alphabet_size,
                                  const UnshuffleStructure& s = classical_structure());

} // namespace halfshuffle
