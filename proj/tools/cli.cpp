#include "cli.hpp"

#include "halfshuffle/cumulants.hpp"
#include "halfshuffle/partitions.hpp"
#include "halfshuffle/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace halfshuffle::cli {

namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct GuardError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// Parsed command line.
struct JobConfig
{
	std::string command;
	std::optional<std::string> mode;
	std::optional<std::string> direction;
	std::optional<int> order;
	std::string input;
	std::uint64_t seed = 1;
	std::vector<std::string> suites;
	std::optional<std::string> format;
	std::string family;
	int size = 0;
};

std::string read_input(const std::string& source, std::istream& in)
{
	if (source == "-")
	{
		std::ostringstream os;
		os << in.rdbuf();
		return os.str();
	}
	auto first = source.find_first_not_of(" \t\r\n");
	if (first != std::string::npos && source[first] == '{')
		return source;
	std::ifstream file(source);
	if (!file)
		throw InputError("cannot open input '" + source + "'");
	std::ostringstream os;
	os << file.rdbuf();
	return os.str();
}

Json parse_document(const std::string& source, std::istream& in)
{
	if (source.empty())
		throw InputError("no input given (use --input PATH, '-' or inline JSON)");
	try
	{
		auto doc = Json::parse(read_input(source, in));
		if (!doc.is_object())
			throw InputError("input must be a JSON object");
		return doc;
	}
	catch (const Json::parse_error& e)
	{
		throw InputError(std::string("malformed JSON: ") + e.what());
	}
}

Rational rational_of(const Json& v)
{
	try
	{
		if (v.is_string())
			return parse_rational(v.get<std::string>());
		if (v.is_number_integer())
			return Rational(v.dump());
	}
	catch (const std::invalid_argument& e)
	{
		throw InputError(e.what());
	}
	throw InputError("rationals must be strings \"p/q\" or integers, got " + v.dump());
}

std::vector<Rational> sequence_of(const Json& v, const char* key)
{
	if (!v.is_array())
		throw InputError(std::string("'") + key + "' must be an array");
	if (v.empty())
		throw InputError(std::string("'") + key + "' is empty");
	std::vector<Rational> r;
	for (auto const& x : v)
		r.push_back(rational_of(x));
	return r;
}

Alphabet alphabet_of(const Json& doc)
{
	if (!doc.contains("alphabet") || !doc["alphabet"].is_array())
		throw InputError("multivariate input needs an 'alphabet' array");
	std::vector<std::string> names;
	for (auto const& n : doc["alphabet"])
	{
		if (!n.is_string())
			throw InputError("letter names must be strings");
		names.push_back(n.get<std::string>());
	}
	try
	{
		return Alphabet(names);
	}
	catch (const std::invalid_argument& e)
	{
		throw InputError(e.what());
	}
}

template <class Table> Table table_of(const Json& doc, const char* key, std::optional<int> order_flag)
{
	auto alphabet = alphabet_of(doc);
	if (!doc.contains("order") || !doc["order"].is_number_integer())
		throw InputError("multivariate input needs an integer 'order'");
	int order = doc["order"].get<int>();
	if (order < 1)
		throw InputError("order must be at least 1");
	if (!doc[key].is_object())
		throw InputError(std::string("'") + key + "' must be an object mapping words to rationals");
	if (order_flag)
	{
		if (*order_flag > order)
			throw InputError("--order exceeds the order of the input table");
		order = *order_flag;
	}
	if (order > kMaxTransformOrder)
		throw GuardError("order exceeds " + std::to_string(kMaxTransformOrder));
	long top = 1;
	for (int i = 0; i < order; ++i)
		if ((top *= alphabet.size()) > kMaxTableWords)
			throw GuardError("table too large: more than " + std::to_string(kMaxTableWords) +
			                 " words of top degree");

	WordValues values;
	for (auto const& [text, v] : doc[key].items())
	{
		Word w;
		try
		{
			w = alphabet.parse_word(text);
		}
		catch (const std::invalid_argument& e)
		{
			throw InputError(e.what());
		}
		if (w.empty())
			throw InputError("empty word in table");
		if (w.degree() > order)
			continue;
		if (!values.emplace(w, rational_of(v)).second)
			throw InputError("word '" + text + "' appears twice");
	}
	try
	{
		return Table::from_table(alphabet, order, std::move(values));
	}
	catch (const std::invalid_argument& e)
	{
		throw InputError(e.what());
	}
}

Json json_sequence(const std::vector<Rational>& seq)
{
	Json a = Json::array();
	for (auto const& q : seq)
		a.push_back(to_string(q));
	return a;
}

template <class Table> Json json_table(const Table& t)
{
	Json o = Json::object();
	for (int d = 1; d <= t.order; ++d)
		for (auto const& w : all_words(t.alphabet.size(), d))
			o[t.alphabet.format(w)] = to_string(t[w]);
	return o;
}

template <class Table> void print_rows(std::ostream& out, const Table& t)
{
	if (t.univariate)
	{
		auto seq = t.sequence();
		for (std::size_t n = 0; n < seq.size(); ++n)
			out << n + 1 << '\t' << to_string(seq[n]) << '\n';
		return;
	}
	for (int d = 1; d <= t.order; ++d)
		for (auto const& w : all_words(t.alphabet.size(), d))
			out << t.alphabet.format(w) << '\t' << to_string(t[w]) << '\n';
}

std::string pick(const std::optional<std::string>& flag, const Json& doc, const char* key)
{
	if (flag)
		return *flag;
	if (doc.contains(key) && doc[key].is_string())
		return doc[key].get<std::string>();
	throw InputError(std::string("missing '") + key + "' (in the input or as --" + key + ")");
}

int cmd_transform(const JobConfig& cfg, std::istream& in, std::ostream& out)
{
	auto doc = parse_document(cfg.input, in);
	auto mode = pick(cfg.mode, doc, "mode");
	auto direction = pick(cfg.direction, doc, "direction");
	if (mode != "free" && mode != "classical")
		throw InputError("mode must be 'free' or 'classical'");
	if (direction != "moments-to-cumulants" && direction != "cumulants-to-moments")
		throw InputError("direction must be 'moments-to-cumulants' or 'cumulants-to-moments'");
	const bool to_cumulants = direction == "moments-to-cumulants";
	const char* seq_key = to_cumulants ? "moments" : "cumulants";
	const char* table_key = to_cumulants ? "phi" : "kappa";
	const char* out_seq_key = to_cumulants ? "cumulants" : "moments";
	const char* out_table_key = to_cumulants ? "kappa" : "phi";

	Json result;
	result["input"] = doc;
	result["mode"] = mode;
	result["direction"] = direction;
	const std::string format = cfg.format.value_or("json");

	if (doc.contains(seq_key))
	{
		auto seq = sequence_of(doc[seq_key], seq_key);
		if (cfg.order)
		{
			if (*cfg.order < 1 || *cfg.order > static_cast<int>(seq.size()))
				throw InputError("--order must be between 1 and the input length");
			seq.resize(static_cast<std::size_t>(*cfg.order));
		}
		if (static_cast<int>(seq.size()) > kMaxTransformOrder)
			throw GuardError("order exceeds " + std::to_string(kMaxTransformOrder));
		std::vector<Rational> answer;
		if (mode == "free")
			answer = to_cumulants ? free_cumulants_from_moments(MomentSpec::from_sequence(seq)).sequence()
			                      : moments_from_free_cumulants(CumulantSpec::from_sequence(seq)).sequence();
		else
			answer = to_cumulants
			             ? classical_cumulants_from_moments(MomentSpec::from_sequence(seq)).sequence()
			             : classical_moments_from_cumulants(CumulantSpec::from_sequence(seq)).sequence();
		result["order"] = seq.size();
		result[out_seq_key] = json_sequence(answer);
		if (format == "table")
			print_rows(out, CumulantSpec::from_sequence(answer));
		else
			out << result.dump(2) << '\n';
		return success;
	}
	if (doc.contains(table_key))
	{
		if (mode != "free")
			throw InputError("classical transforms take univariate sequences only");
		Json table;
		int order = 0;
		auto emit = [&](const auto& t) {
			order = t.order;
			table = json_table(t);
			if (format == "table")
				print_rows(out, t);
		};
		if (to_cumulants)
		{
			auto m = table_of<MomentSpec>(doc, table_key, cfg.order);
			auto k = multivariate_free_cumulants(m);
			result["alphabet"] = m.alphabet.names();
			if (format == "table")
				emit(k);
			else
				table = json_table(k), order = k.order;
		}
		else
		{
			auto k = table_of<CumulantSpec>(doc, table_key, cfg.order);
			auto m = moments_from_free_cumulants(k);
			result["alphabet"] = k.alphabet.names();
			if (format == "table")
				emit(m);
			else
				table = json_table(m), order = m.order;
		}
		if (format != "table")
		{
			result["order"] = order;
			result[out_table_key] = table;
			out << result.dump(2) << '\n';
		}
		return success;
	}
	throw InputError(std::string("direction ") + direction + " needs '" + seq_key + "' or '" +
	                 table_key + "' in the input");
}

int cmd_verify(const JobConfig& cfg, std::ostream& out)
{
	VerifyConfig vc;
	vc.order = cfg.order.value_or(5);
	vc.seed = cfg.seed;
	if (vc.order < 1 || vc.order > kMaxVerifyOrder)
		throw GuardError("verify order must be in [1, " + std::to_string(kMaxVerifyOrder) + "]");
	auto names = cfg.suites.empty() ? suite_names() : cfg.suites;
	for (auto const& n : names)
		if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
			throw InputError("unknown suite '" + n + "'");

	bool all = true;
	Json report;
	report["order"] = vc.order;
	report["seed"] = vc.seed;
	report["suites"] = Json::array();
	const bool table = cfg.format.value_or("table") == "table";
	for (auto const& n : names)
	{
		auto r = run_suite(n, vc);
		all = all && r.passed;
		if (table)
			out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  " << r.detail << '\n';
		report["suites"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
	}
	report["passed"] = all;
	if (!table)
		out << report.dump(2) << '\n';
	return all ? success : verification_failed;
}

int cmd_oracle(const JobConfig& cfg, std::istream& in, std::ostream& out)
{
	PartitionFamily family;
	if (cfg.family == "nc")
		family = PartitionFamily::non_crossing;
	else if (cfg.family == "all")
		family = PartitionFamily::all;
	else
		throw InputError("family must be 'nc' or 'all'");
	const int n = cfg.size;
	if (n < 1 || n > kMaxPartitionSize)
		throw GuardError("n must be in [1, " + std::to_string(kMaxPartitionSize) + "]");
	auto parts = enumerate(family, n);

	// optional values: univariate "cumulants" or a word with a "kappa" table
	std::optional<WordValues> values;
	Word word = Word::power(n);
	if (!cfg.input.empty())
	{
		auto doc = parse_document(cfg.input, in);
		values.emplace();
		if (doc.contains("cumulants"))
		{
			auto seq = sequence_of(doc["cumulants"], "cumulants");
			if (static_cast<int>(seq.size()) < n)
				throw InputError("need at least n cumulants");
			for (int i = 1; i <= n; ++i)
				values->emplace(Word::power(i), seq[i - 1]);
		}
		else if (doc.contains("kappa") && doc.contains("word"))
		{
			auto alphabet = alphabet_of(doc);
			try
			{
				word = alphabet.parse_word(doc["word"].get<std::string>());
				for (auto const& [text, v] : doc["kappa"].items())
					values->emplace(alphabet.parse_word(text), rational_of(v));
			}
			catch (const std::invalid_argument& e)
			{
				throw InputError(e.what());
			}
			if (word.degree() != n)
				throw InputError("word length must equal n");
		}
		else
			throw InputError("oracle input needs 'cumulants', or 'alphabet', 'word' and 'kappa'");
	}

	Json doc;
	doc["family"] = cfg.family;
	doc["n"] = n;
	doc["count"] = parts.size();
	doc["partitions"] = Json::array();
	Rational total = 0;
	const bool table = cfg.format.value_or("table") == "table";
	for (auto const& p : parts)
	{
		doc["partitions"].push_back(to_string(p));
		if (table)
			out << to_string(p);
		if (values)
		{
			Rational term = 1;
			for (auto const& b : p.blocks)
			{
				auto it = values->find(subword(word, b));
				if (it == values->end())
					throw InputError("missing value for a block subword");
				term *= it->second;
			}
			total += term;
			doc["terms"].push_back(to_string(term));
			if (table)
				out << '\t' << to_string(term);
		}
		if (table)
			out << '\n';
	}
	if (values)
	{
		doc["total"] = to_string(total);
		if (table)
			out << "total\t" << to_string(total) << '\n';
	}
	if (!table)
		out << doc.dump(2) << '\n';
	return success;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Exact moment-cumulant transforms via half-shuffles", "halfshuffle"};
	app.require_subcommand(1);
	JobConfig cfg;

	auto formats = CLI::IsMember({"json", "table"});
	auto* transform = app.add_subcommand("transform", "moments <-> free or classical cumulants");
	transform->add_option("--mode", cfg.mode, "free | classical")->check(CLI::IsMember({"free", "classical"}));
	transform->add_option("--direction", cfg.direction, "moments-to-cumulants | cumulants-to-moments")
	    ->check(CLI::IsMember({"moments-to-cumulants", "cumulants-to-moments"}));
	transform->add_option("-n,--order", cfg.order, "truncate the input at this order");
	transform->add_option("-i,--input", cfg.input, "JSON file, '-' for stdin, or inline JSON");
	transform->add_option("--format", cfg.format, "json (default) | table")->check(formats);

	auto* verify = app.add_subcommand("verify", "run the algebraic and oracle suites");
	verify->add_option("-n,--order", cfg.order, "degree bound (default 5)");
	verify->add_option("--seed", cfg.seed, "seed for random samples (default 1)");
	verify->add_option("--suite", cfg.suites, "suite to run (repeatable; default all)");
	verify->add_option("--format", cfg.format, "table (default) | json")->check(formats);

	auto* oracle = app.add_subcommand("oracle", "list partitions and partition sums");
	oracle->add_option("family", cfg.family, "nc | all")->required();
	oracle->add_option("n", cfg.size, "ground set size")->required();
	oracle->add_option("-i,--input", cfg.input, "optional cumulant values (JSON)");
	oracle->add_option("--format", cfg.format, "table (default) | json")->check(formats);

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try
	{
		app.parse(reversed);
	}
	catch (const CLI::CallForHelp&)
	{
		out << app.help();
		return success;
	}
	catch (const CLI::CallForAllHelp&)
	{
		out << app.help("", CLI::AppFormatMode::All);
		return success;
	}
	catch (const CLI::ParseError& e)
	{
		err << "error: " << e.what() << '\n';
		return input_error;
	}

	try
	{
		if (transform->parsed())
			return cmd_transform(cfg, in, out);
		if (verify->parsed())
			return cmd_verify(cfg, out);
		return cmd_oracle(cfg, in, out);
	}
	catch (const GuardError& e)
	{
		err << "error: " << e.what() << '\n';
		return guard_violation;
	}
	catch (const InputError& e)
	{
		err << "error: " << e.what() << '\n';
		return input_error;
	}
	catch (const std::invalid_argument& e)
	{
		err << "error: " << e.what() << '\n';
		return input_error;
	}
}

} // namespace halfshuffle::cli
