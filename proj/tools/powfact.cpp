// powfact — command-line surface over the library: power counting, conjugacy
// classes, Rauzy graphs and their small circuits, the power-to-circuit
// injection, extremal word families, and exhaustive bound searches.
//
// Exit codes: 0 success (all checks pass), 1 a verified bound or structural
// statement was contradicted, 2 usage or budget error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "powfact/classes.hpp"
#include "powfact/extremal.hpp"
#include "powfact/powers.hpp"
#include "powfact/rauzy.hpp"
#include "powfact/search.hpp"
#include "powfact/word.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace powfact;

// "-" reads the word from stdin; surrounding whitespace is ignored.
Word read_word(const std::string& arg) {
  if (arg != "-") return Word::parse(arg);
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  std::string text = buf.str();
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  return Word::parse(trimmed);
}

std::vector<std::string> str_list(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

json class_to_json(const ClassRecord& rec) {
  json j;
  j["canonical"] = rec.canonical.str();
  j["index"] = rec.index;
  j["mp"] = rec.mp;
  j["max_pow"] = str_list(rec.max_pow);
  j["members"] = str_list(rec.members);
  j["prim_prime"] = str_list(rec.prim_prime);
  return j;
}

json circuit_to_json(const SmallCircuit& c) {
  json j;
  j["q"] = c.q.str();
  j["l"] = c.level;
  j["size"] = c.size();
  return j;
}

int run_count(const std::string& word_arg, int k, const std::string& format) {
  Word w = read_word(word_arg);
  std::uint64_t n = count_k_powers(w, k);
  if (format == "json") {
    json j;
    j["word"] = w.str();
    j["k"] = k;
    j["count"] = n;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << n << "\n";
  }
  return 0;
}

int run_powers(const std::string& word_arg, const std::string& format) {
  Word w = read_word(word_arg);
  std::vector<PowerFactor> ps = enumerate_powers(w);
  if (format == "json") {
    json j = json::array();
    for (const PowerFactor& p : ps) {
      json e;
      e["text"] = p.text.str();
      e["root"] = p.root.str();
      e["exponent"] = p.exponent;
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const PowerFactor& p : ps)
      std::cout << p.text.str() << "\t" << p.root.str() << "\t" << p.exponent
                << "\n";
  }
  return 0;
}

int run_classes(const std::string& word_arg, const std::string& format) {
  Word w = read_word(word_arg);
  std::vector<ClassRecord> recs = build_classes(w);
  if (format == "text") {
    for (const ClassRecord& rec : recs) {
      std::cout << "class " << rec.canonical.str() << "\tindex=" << rec.index
                << "\tmp=" << rec.mp << "\tmembers=";
      for (std::size_t i = 0; i < rec.members.size(); ++i)
        std::cout << (i ? "," : "") << rec.members[i].str();
      std::cout << "\tprim_prime=";
      for (std::size_t i = 0; i < rec.prim_prime.size(); ++i)
        std::cout << (i ? "," : "") << rec.prim_prime[i].str();
      std::cout << "\n";
    }
  } else {
    json j = json::array();
    for (const ClassRecord& rec : recs) j.push_back(class_to_json(rec));
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_rauzy(const std::string& word_arg, int level, bool dot,
              bool highlight) {
  Word w = read_word(word_arg);
  RauzyGraph g = build_rauzy(w, level);
  if (dot) {
    std::cout << to_dot(g, highlight);
    return 0;
  }
  std::cout << "level " << g.level << "\n";
  for (const Word& v : g.vertices) std::cout << "vertex " << v.str() << "\n";
  for (const Word& e : g.edges)
    std::cout << "edge " << e.str() << " " << edge_source(e).str() << " "
              << edge_target(e).str() << "\n";
  return 0;
}

int run_circuits(const std::string& word_arg, const std::string& format) {
  Word w = read_word(word_arg);
  std::vector<SmallCircuit> from_graph = small_circuits_graph(w);
  std::vector<SmallCircuit> structural = small_circuits_structural(w);
  bool agree = from_graph == structural;
  CircuitBoundReport bound = small_circuit_bound_check(w);
  if (format == "json") {
    json j;
    j["graph"] = json::array();
    for (const SmallCircuit& c : from_graph) j["graph"].push_back(circuit_to_json(c));
    j["structural"] = json::array();
    for (const SmallCircuit& c : structural)
      j["structural"].push_back(circuit_to_json(c));
    j["agree"] = agree;
    j["count"] = bound.count;
    j["bound"] = bound.bound;
    j["bound_ok"] = bound.ok();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const SmallCircuit& c : from_graph)
      std::cout << "graph\t" << c.q.str() << "\t" << c.level << "\t"
                << c.size() << "\n";
    for (const SmallCircuit& c : structural)
      std::cout << "structural\t" << c.q.str() << "\t" << c.level << "\t"
                << c.size() << "\n";
    std::cout << "agree\t" << (agree ? "true" : "false") << "\n";
    std::cout << "count\t" << bound.count << "\tbound\t" << bound.bound
              << "\n";
  }
  if (!agree) {
    std::cerr << "FALSIFIED: circuit enumerations disagree on " << w.str()
              << "\n";
    return 1;
  }
  if (!bound.ok()) {
    std::cerr << "FALSIFIED: small-circuit bound violated by " << w.str()
              << "\n";
    return 1;
  }
  return 0;
}

int run_inject(const std::string& word_arg, const std::string& format) {
  Word w = read_word(word_arg);
  std::vector<InjectionEntry> entries = injection_map(w);
  if (format == "json") {
    json j = json::array();
    for (const InjectionEntry& e : entries) {
      json row;
      row["power"] = e.power.str();
      row["q"] = e.circuit.q.str();
      row["l"] = e.circuit.level;
      j.push_back(row);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const InjectionEntry& e : entries)
      std::cout << e.power.str() << "\t" << e.circuit.q.str() << "\t"
                << e.circuit.level << "\n";
  }
  return 0;
}

int run_gen(int k, int m, const std::string& family) {
  Word w = family == "fs" ? gen_fraenkel_simpson(m) : gen_r(k, m);
  std::cout << w.str() << "\n";
  return 0;
}

int run_verify_family(int k, int m_max) {
  std::cout << "#k\tm\tn\tN_k\tlower\tupper\tmargin\n";
  bool all_ok = true;
  for (int m = 1; m <= m_max; ++m) {
    FamilyReport rep = verify_family(k, m);
    std::cout << rep.k << "\t" << rep.m << "\t" << rep.n << "\t" << rep.count
              << "\t" << rep.lower_bound << "\t" << rep.upper_bound << "\t"
              << rep.upper_margin << "\n";
    if (!rep.ok()) {
      std::cerr << "FALSIFIED: family bounds fail at k=" << k << " m=" << m
                << "\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

int run_search(std::uint64_t n, int k, int sigma, std::uint64_t budget) {
  SearchBudget b;
  if (budget) b.max_words = budget;
  SearchResult res = exhaustive_max(n, k, sigma, b);
  std::cout << "#n\tk\tsigma\tmax_count\tupper_bound\twitness\n";
  std::cout << res.n << "\t" << res.k << "\t" << res.sigma << "\t"
            << res.max_count << "\t" << res.upper_bound << "\t"
            << (res.witnesses.empty() ? std::string("-")
                                      : res.witnesses.front().str())
            << "\n";
  if (res.max_count > res.upper_bound) {
    std::cerr << "FALSIFIED: upper bound violated, witness "
              << res.witnesses.front().str() << "\n";
    return 1;
  }
  return 0;
}

int run_sweep(std::uint64_t n_max, const std::vector<int>& ks, int sigma,
              std::uint64_t budget, bool verify_only) {
  SearchBudget b;
  if (budget) b.max_words = budget;
  SweepReport rep = bound_sweep(n_max, ks, sigma, b);
  if (verify_only) {
    if (rep.violation) {
      std::cout << "FAIL " << rep.violation->check << " witness="
                << rep.violation->witness.str() << "\n";
      return 1;
    }
    std::cout << "PASS powers-bound\n";
    std::cout << "PASS small-circuit-bound\n";
    for (int k : ks) std::cout << "PASS k-power-bound k=" << k << "\n";
    return 0;
  }
  std::cout << "#n\tk\tsigma\tmax_count\tupper_bound\twitness\n";
  for (const SearchResult& row : rep.table)
    std::cout << row.n << "\t" << row.k << "\t" << row.sigma << "\t"
              << row.max_count << "\t" << row.upper_bound << "\t"
              << (row.witnesses.empty() ? std::string("-")
                                        : row.witnesses.front().str())
              << "\n";
  if (rep.violation) {
    std::cerr << "FALSIFIED: " << rep.violation->check << " witness "
              << rep.violation->witness.str() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "powfact: distinct power factors, Rauzy-graph circuits and extremal "
      "repetition-rich words"};
  app.require_subcommand(1);

  std::string word_arg;
  std::string format;
  int k = 2;
  int level = 1;
  int m = 1;
  int m_max = 1;
  std::uint64_t n = 1;
  std::uint64_t n_max = 1;
  int sigma = 2;
  std::uint64_t budget = 0;
  std::string family = "rkm";
  std::vector<int> ks;
  bool dot = false;
  bool highlight = false;
  bool verify_only = false;

  auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", word_arg, "input word, or - for stdin")
        ->required();
  };

  CLI::App* count = app.add_subcommand(
      "count", "number of distinct k-power factors of a word");
  add_word(count);
  count->add_option("--k", k, "power order (>= 2)")->required();
  count->add_option("--format", format, "text|json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* powers = app.add_subcommand(
      "powers", "all distinct power factors with root and exponent");
  add_word(powers);
  powers->add_option("--format", format, "tsv|json")
      ->default_val("tsv")
      ->check(CLI::IsMember({"tsv", "json"}));

  CLI::App* classes = app.add_subcommand(
      "classes", "power factors grouped by conjugacy class of the root");
  add_word(classes);
  classes->add_option("--format", format, "json|text")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* rauzy =
      app.add_subcommand("rauzy", "factor graph of a word at one level");
  add_word(rauzy);
  rauzy->add_option("--level", level, "factor length l (1 <= l <= |w|)")
      ->required();
  rauzy->add_flag("--dot", dot, "emit Graphviz DOT instead of text");
  rauzy->add_flag("--highlight", highlight,
                  "color edges on circuits of size <= l (DOT only)");

  CLI::App* circuits = app.add_subcommand(
      "circuits",
      "small circuits across all levels, by graph search and by structure");
  add_word(circuits);
  circuits->add_option("--format", format, "text|json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* inject = app.add_subcommand(
      "inject", "the power-to-circuit injection, one row per power factor");
  add_word(inject);
  inject->add_option("--format", format, "tsv|json")
      ->default_val("tsv")
      ->check(CLI::IsMember({"tsv", "json"}));

  CLI::App* gen =
      app.add_subcommand("gen", "generate a member of an extremal family");
  gen->add_option("--k", k, "power order (>= 2)");
  gen->add_option("--m", m, "family index (>= 1)")->required();
  gen->add_option("--family", family, "rkm|fs")
      ->default_val("rkm")
      ->check(CLI::IsMember({"rkm", "fs"}));

  CLI::App* verify_family_cmd = app.add_subcommand(
      "verify-family", "check lengths and bounds for a family prefix");
  verify_family_cmd->add_option("--k", k, "power order (>= 2)")->required();
  verify_family_cmd->add_option("--m-max", m_max, "largest family index")
      ->required();

  CLI::App* search = app.add_subcommand(
      "search", "exhaustive maximum of the k-power count over all words");
  search->add_option("--n", n, "word length")->required();
  search->add_option("--k", k, "power order (>= 2)")->required();
  search->add_option("--sigma", sigma, "alphabet size")->required();
  search->add_option("--budget", budget, "word budget (default 2^24)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "bound checks over all lengths up to n-max");
  sweep->add_option("--n-max", n_max, "largest word length")->required();
  sweep->add_option("--k", ks, "power orders, comma separated")
      ->required()
      ->delimiter(',');
  sweep->add_option("--sigma", sigma, "alphabet size")->required();
  sweep->add_option("--budget", budget, "word budget (default 2^24)");
  sweep->add_flag("--verify-only", verify_only,
                  "report one PASS/FAIL line per bound instead of the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(count)) return run_count(word_arg, k, format);
    if (app.got_subcommand(powers)) return run_powers(word_arg, format);
    if (app.got_subcommand(classes)) return run_classes(word_arg, format);
    if (app.got_subcommand(rauzy))
      return run_rauzy(word_arg, level, dot, highlight);
    if (app.got_subcommand(circuits)) return run_circuits(word_arg, format);
    if (app.got_subcommand(inject)) return run_inject(word_arg, format);
    if (app.got_subcommand(gen)) return run_gen(k, m, family);
    if (app.got_subcommand(verify_family_cmd))
      return run_verify_family(k, m_max);
    if (app.got_subcommand(search)) return run_search(n, k, sigma, budget);
    if (app.got_subcommand(sweep))
      return run_sweep(n_max, ks, sigma, budget, verify_only);
  } catch (const FalsificationError& e) {
    std::cerr << "FALSIFIED: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
