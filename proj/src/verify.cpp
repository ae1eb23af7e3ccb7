#include "halfshuffle/verify.hpp"

#include "halfshuffle/convolution.hpp"
#include "halfshuffle/cumulants.hpp"
#include "halfshuffle/partitions.hpp"
#include "halfshuffle/unshuffle.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace halfshuffle {

namespace {

int bar_alphabet(int order)
{
	return order <= 5 ? 2 : 1;
}

// Accumulates named checks; keeps the first failure.
class Tally
{
  public:
	explicit Tally(std::string name) { result_.name = std::move(name); }

	bool check(bool ok, const std::string& what, int weight = 1)
	{
		count_ += weight;
		if (!ok && result_.passed)
		{
			result_.passed = false;
			result_.detail = what;
		}
		return ok;
	}

	void axioms(const AxiomReport& report, const std::string& prefix)
	{
		for (auto const& r : report.results)
		{
			std::ostringstream os;
			os << prefix << r.name;
			if (!r.ok)
			{
				os << " fails on";
				for (auto const& x : r.counterexample)
					os << ' ' << x;
			}
			check(r.ok, os.str(), r.checked);
		}
	}

	SuiteResult finish()
	{
		if (result_.passed)
			result_.detail = std::to_string(count_) + " checks";
		return result_;
	}

  private:
	SuiteResult result_;
	int count_ = 0;
};

std::string trial(const char* what, int t)
{
	return std::string(what) + " (trial " + std::to_string(t) + ")";
}

std::vector<Rational> random_sequence(FormSampler& rng, int n)
{
	std::vector<Rational> r;
	for (int i = 0; i < n; ++i)
		r.push_back(rng.next_rational());
	return r;
}

WordValues random_table(FormSampler& rng, int alphabet_size, int order)
{
	WordValues r;
	for (int d = 1; d <= order; ++d)
		for (auto const& w : all_words(alphabet_size, d))
			r.emplace(w, rng.next_rational());
	return r;
}

SuiteResult coproduct(const VerifyConfig& c)
{
	Tally t("coproduct");
	t.axioms(check_coassociativity(c.order, bar_alphabet(c.order)), "");
	return t.finish();
}

SuiteResult unshuffle(const VerifyConfig& c)
{
	Tally t("unshuffle");
	int K = bar_alphabet(c.order);
	t.axioms(check_unshuffle_axioms(std::min(c.order, 4), K, bar_structure(), c.order), "");
	return t.finish();
}

SuiteResult classical_coproduct(const VerifyConfig& c)
{
	Tally t("classical-coproduct");
	auto s = classical_structure();
	t.axioms(check_coassociativity(c.order, 2, s), "");
	t.axioms(check_cocommutativity(c.order, 2, s), "");
	t.axioms(check_unshuffle_axioms(c.order, 2, s), "");
	return t.finish();
}

SuiteResult shuffle(const VerifyConfig& c)
{
	Tally t("shuffle");
	FormSampler rng(c.seed);
	const int N = std::min(c.order, 5);
	for (auto mode : {Mode::bar, Mode::classical})
	{
		const int K = mode == Mode::bar ? bar_alphabet(N) : 2;
		const char* tag = mode == Mode::bar ? "bar " : "classical ";
		for (int i = 0; i < c.trials; ++i)
		{
			auto f = rng.sample(mode, K, N), g = rng.sample(mode, K, N), h = rng.sample(mode, K, N);
			auto gh = convolve(g, h);
			t.check(half_prec(half_prec(f, g), h) == half_prec(f, gh), trial((std::string(tag) + "A1").c_str(), i));
			t.check(half_prec(half_succ(f, g), h) == half_succ(f, half_prec(g, h)),
			        trial((std::string(tag) + "A2").c_str(), i));
			t.check(half_succ(f, half_succ(g, h)) == half_succ(convolve(f, g), h),
			        trial((std::string(tag) + "A3").c_str(), i));
			t.check(half_prec(f, g) + half_succ(f, g) == convolve(f, g),
			        trial((std::string(tag) + "splitting").c_str(), i));
			if (mode == Mode::classical)
			{
				t.check(half_prec(f, g) == half_succ(g, f), trial("classical f≺g = g≻f", i));
				t.check(convolve(f, g) == convolve(g, f), trial("classical commutativity", i));
			}
		}
	}
	return t.finish();
}

SuiteResult prelie_suite(const VerifyConfig& c)
{
	Tally t("prelie");
	FormSampler rng(c.seed + 1);
	const int N = std::min(c.order, 5);
	for (auto mode : {Mode::bar, Mode::classical})
	{
		const int K = mode == Mode::bar ? bar_alphabet(N) : 2;
		for (int i = 0; i < c.trials; ++i)
		{
			auto f = rng.sample(mode, K, N), g = rng.sample(mode, K, N), h = rng.sample(mode, K, N);
			auto lhs = prelie(f, prelie(g, h)) - prelie(prelie(f, g), h);
			auto rhs = prelie(g, prelie(f, h)) - prelie(prelie(g, f), h);
			t.check(lhs == rhs, trial("left pre-Lie identity", i));
			if (mode == Mode::classical)
				t.check(prelie(f, g) == LinForm(mode, K, N), trial("classical pre-Lie product vanishes", i));
		}
	}
	return t.finish();
}

SuiteResult exponentials(const VerifyConfig& c)
{
	Tally t("exponentials");
	FormSampler rng(c.seed + 2);
	const int N = c.order;
	const int K = bar_alphabet(N);
	for (int i = 0; i < c.trials; ++i)
	{
		auto kappa = rng.sample(Mode::bar, K, N);
		auto e = LinForm::counit(Mode::bar, K, N);
		auto X = exp_prec(kappa);
		t.check(convolve(exp_succ(-kappa), X) == e, trial("exp≻(−κ)⧢exp≺(κ) = e", i));
		auto Y = X - e;
		t.check(half_prec(Y, shuffle_inverse(X)) == kappa, trial("κ = Y≺(Σ(−1)ⁿYⁿ)", i));
		t.check(log_shuffle(exp_shuffle(kappa)) == kappa, trial("log∘exp = id", i));
	}
	return t.finish();
}

SuiteResult characters(const VerifyConfig& c)
{
	Tally t("characters");
	FormSampler rng(c.seed + 3);
	const int N = c.order;
	const int K = bar_alphabet(N);
	for (int i = 0; i < c.trials; ++i)
	{
		auto kappa = rng.sample_infinitesimal(K, N);
		auto Phi = exp_prec(kappa);
		t.check(classify(Phi).is_multiplicative, trial("exp≺(κ) is a character", i));
		t.check(solve_left_fixed_point(Phi) == kappa, trial("fixed point recovers κ", i));
		auto general = rng.sample(Mode::bar, K, N);
		t.check(solve_left_fixed_point(exp_prec(general)) == general, trial("fixed point ∘ exp≺ = id", i));
	}
	return t.finish();
}

SuiteResult magnus_suite(const VerifyConfig& c)
{
	Tally t("magnus");
	FormSampler rng(c.seed + 4);
	const int N = std::min(c.order, 5);
	const int K = bar_alphabet(N);
	for (int i = 0; i < c.trials; ++i)
	{
		auto kappa = rng.sample(Mode::bar, K, N);
		t.check(exp_shuffle(magnus(kappa)) == exp_prec(kappa), trial("exp⧢(Ω′(κ)) = exp≺(κ)", i));
		auto cl = rng.sample(Mode::classical, 1, c.order);
		t.check(magnus(cl) == cl, trial("classical Ω′(c) = c", i));
	}
	return t.finish();
}

SuiteResult free_suite(const VerifyConfig& c)
{
	Tally t("free");
	FormSampler rng(c.seed + 5);
	for (int i = 0; i < c.trials; ++i)
	{
		auto m = MomentSpec::from_sequence(random_sequence(rng, c.order));
		auto k = free_cumulants_from_moments(m);
		auto oracle = partition_cumulants(m.values, 1, c.order, PartitionFamily::non_crossing);
		t.check(k.values == oracle, trial("univariate fixed point = NC inversion", i));
		t.check(moments_from_free_cumulants(k) == m, trial("univariate round trip", i));
		for (auto const& r : free_series_residual(k.sequence(), m.sequence()))
			if (!t.check(r == 0, trial("C(zM(z)) = M(z)", i)))
				break;

		const int order = std::min(c.order, 6);
		auto mv = MomentSpec::from_table(Alphabet({"a", "b"}), order, random_table(rng, 2, order));
		auto kv = multivariate_free_cumulants(mv);
		t.check(kv.values == partition_cumulants(mv.values, 2, order, PartitionFamily::non_crossing),
		        trial("two-letter fixed point = NC inversion", i));
		t.check(moments_from_free_cumulants(kv) == mv, trial("two-letter round trip", i));
	}
	return t.finish();
}

SuiteResult classical_suite(const VerifyConfig& c)
{
	Tally t("classical");
	FormSampler rng(c.seed + 6);
	for (int i = 0; i < c.trials; ++i)
	{
		auto m = MomentSpec::from_sequence(random_sequence(rng, c.order));
		auto cl = classical_cumulants_from_moments(m);
		t.check(cl.values == partition_cumulants(m.values, 1, c.order, PartitionFamily::all),
		        trial("fixed point = set-partition inversion", i));
		t.check(classical_moments_from_cumulants(cl) == m, trial("round trip", i));

		LinForm form(Mode::classical, 1, c.order);
		for (auto const& [w, q] : cl.values)
			form.set(BarWord(w), q);
		auto phi = exp_shuffle(form);
		bool same = true;
		for (auto const& [w, q] : m.values)
			same = same && phi.at(BarWord(w)) == q;
		t.check(same, trial("φ = exp⧢(c)", i));
	}
	return t.finish();
}

SuiteResult cluster(const VerifyConfig& c)
{
	Tally t("cluster");
	FormSampler rng(c.seed + 7);
	const int order = std::max(c.order, 2);
	for (int i = 0; i < c.trials; ++i)
	{
		auto phi = independent_product(MomentSpec::from_sequence(random_sequence(rng, order), "b"),
		                               MomentSpec::from_sequence(random_sequence(rng, order), "c"));
		auto report = cluster_check(phi, {"b"}, {"c"}, order);
		t.check(report.hypothesis_holds, trial("cluster hypothesis", i));
		t.check(report.nonzero_cumulants.empty(), trial("mixed κ(b…bc…c) vanish", i));
	}
	return t.finish();
}

SuiteResult series(const VerifyConfig& c)
{
	Tally t("series");
	FormSampler rng(c.seed + 8);
	for (int i = 0; i < c.trials; ++i)
	{
		auto k = CumulantSpec::from_sequence(random_sequence(rng, c.order));
		auto m = moments_from_free_cumulants(k);
		bool zero = true;
		for (auto const& r : free_series_residual(k.sequence(), m.sequence()))
			zero = zero && r == 0;
		t.check(zero, trial("C(zM(z)) − M(z) = 0", i));
	}
	return t.finish();
}

using Suite = std::function<SuiteResult(const VerifyConfig&)>;

const std::map<std::string, Suite>& registry()
{
	static const std::map<std::string, Suite> suites{
	    {"coproduct", coproduct},
	    {"unshuffle", unshuffle},
	    {"classical-coproduct", classical_coproduct},
	    {"shuffle", shuffle},
	    {"prelie", prelie_suite},
	    {"exponentials", exponentials},
	    {"characters", characters},
	    {"magnus", magnus_suite},
	    {"free", free_suite},
	    {"classical", classical_suite},
	    {"cluster", cluster},
	    {"series", series},
	};
	return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
	static const std::vector<std::string> names{
	    "coproduct", "unshuffle", "classical-coproduct", "shuffle",   "prelie",  "exponentials",
	    "characters", "magnus",   "free",                "classical", "cluster", "series"};
	return names;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config)
{
	if (config.order < 1 || config.order > kMaxVerifyOrder)
		throw std::out_of_range("verify order must be in [1, " + std::to_string(kMaxVerifyOrder) + "]");
	auto it = registry().find(name);
	if (it == registry().end())
		throw std::invalid_argument("unknown suite '" + name + "'");
	return it->second(config);
}

} // namespace halfshuffle
