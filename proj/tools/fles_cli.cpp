// Command-line front end: exit 0 = yes, 1 = no, 2 = error.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fles/benchgen.hpp"
#include "fles/inclusion.hpp"
#include "fles/io.hpp"
#include "fles/nfa.hpp"
#include "fles/reductions.hpp"
#include "fles/semantics.hpp"
#include "json.hpp"

namespace {

using namespace fles;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct CheckArgs {
  std::string a, b;
  std::string engine = "es";
  bool as_json = false;
  int repeat = 1;
  int threads = 0;
};

struct EngineResult {
  bool included = false;
  std::optional<Word> witness;
  InclusionStats stats;
};

EngineResult run_es(const StructurePtr& a, const StructurePtr& b, const Limits& limits, int threads) {
  const auto v = check_inclusion(a, b, {limits, threads});
  EngineResult r{v.included, std::nullopt, v.stats};
  if (v.counterexample) r.witness = v.counterexample->word;
  return r;
}

EngineResult run_nfa(const StructurePtr& a, const StructurePtr& b, const Limits& limits) {
  const auto r = nfa_inclusion(encode(a, limits), encode(b, limits), limits);
  return {r.included, r.witness, {}};
}

json optional_count(const std::function<double()>& f) {
  try {
    return f();
  } catch (const ResourceLimitExceeded&) {
    return nullptr;
  }
}

int cmd_check(const CheckArgs& args) {
  const Limits limits = Limits::from_environment();
  const auto a = load_fles(args.a);
  const auto b = load_fles(args.b);
  std::vector<double> times;
  EngineResult es, nfa;
  for (int i = 0; i < std::max(1, args.repeat); ++i) {
    const auto start = std::chrono::steady_clock::now();
    if (args.engine != "nfa") es = run_es(a, b, limits, args.threads);
    if (args.engine != "es") nfa = run_nfa(a, b, limits);
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  if (args.engine == "both" && es.included != nfa.included) {
    std::cerr << "error: engines disagree (es: " << es.included << ", nfa: " << nfa.included << ")\n";
    return kError;
  }
  const EngineResult& r = args.engine == "nfa" ? nfa : es;
  std::sort(times.begin(), times.end());
  const double median = times[times.size() / 2];

  if (args.as_json) {
    json report = {
        {"engine", args.engine},
        {"included", r.included},
        {"counterexample", r.witness ? json(to_string(*r.witness)) : json(nullptr)},
        {"events_a", a->size()},
        {"events_b", b->size()},
        {"maximal_configurations_a", optional_count([&] { return double(count_maximal_configurations(a, limits)); })},
        {"maximal_configurations_b", optional_count([&] { return double(count_maximal_configurations(b, limits)); })},
        {"pc_metric_a", optional_count([&] { return pc_metric(a, limits); })},
        {"pc_metric_b", optional_count([&] { return pc_metric(b, limits); })},
        {"embeddings_tried", r.stats.embeddings_tried},
        {"splits", r.stats.splits},
        {"candidate_prunings", r.stats.candidate_prunings},
        {"repeat", times.size()},
        {"median_ms", median},
    };
    std::cout << report.dump(2) << "\n";
  } else if (r.included) {
    std::cout << "included\n";
  } else {
    std::cout << "not included\n";
    std::cout << "counterexample: " << to_string(*r.witness) << "\n";
  }
  if (!args.as_json) std::cerr << "time: " << median << " ms (median of " << times.size() << ")\n";
  return r.included ? kYes : kNo;
}

int cmd_member(const std::string& word, const std::string& path, bool witness) {
  const auto s = load_fles(path);
  const auto r = membership(parse_word(word), s, Limits::from_environment());
  std::cout << (r.member ? "member" : "not a member") << "\n";
  if (r.member && witness) {
    std::cout << "witness:";
    for (EventId e : *r.witness) {
      std::cout << ' ' << e;
      if (!s->label(e).is_epsilon()) std::cout << ':' << s->label(e).name();
    }
    std::cout << "\n";
  }
  return r.member ? kYes : kNo;
}

MutationKind parse_mutation(const StructurePtr& s, const std::vector<std::string>& spec, uint64_t seed) {
  if (spec.empty()) throw std::invalid_argument("mutation kind missing");
  auto id = [&](std::size_t i) {
    if (i >= spec.size()) throw std::invalid_argument("mutation '" + spec[0] + "' needs more arguments");
    return static_cast<EventId>(std::stoul(spec[i]));
  };
  const std::string& kind = spec[0];
  if (kind == "add-order") return AddOrder{id(1), id(2)};
  if (kind == "add-conflict") return AddConflict{id(1), id(2)};
  if (kind == "drop") return DropEvent{id(1)};
  if (kind == "relabel") {
    if (spec.size() < 3) throw std::invalid_argument("relabel needs an event and a label");
    return Relabel{id(1), Label::intern(spec[2])};
  }
  if (kind == "random") return random_mutation(s, seed);
  throw std::invalid_argument("unknown mutation '" + kind + "'");
}

std::size_t number(const std::vector<std::string>& params, std::size_t i, const char* what) {
  if (i >= params.size()) throw std::invalid_argument(std::string("missing parameter ") + what);
  std::size_t used = 0;
  const auto v = std::stoul(params[i], &used);
  if (used != params[i].size()) throw std::invalid_argument(std::string("bad parameter ") + what);
  return v;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& out, uint64_t seed) {
  StructurePtr s;
  if (family == "allpar") {
    s = allpar(number(params, 0, "n"));
  } else if (family == "ccnfs") {
    s = ccnfs(number(params, 0, "n"));
  } else if (family == "sharing") {
    s = sharing(number(params, 0, "n"), number(params, 1, "m"));
  } else if (family == "mutate") {
    if (params.empty()) throw std::invalid_argument("mutate needs a source file");
    const auto src = load_fles(params[0]);
    const auto kind = parse_mutation(src, {params.begin() + 1, params.end()}, seed);
    std::cerr << "mutation: " << describe(kind) << "\n";
    s = mutate(src, kind);
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  save_fles(*s, out);
  return kYes;
}

int cmd_reduce(const std::string& kind, const std::string& graph, const std::string& out) {
  const auto doc = load_graph(graph);
  if (kind == "hc") {
    if (!std::holds_alternative<DiGraph>(doc)) throw std::invalid_argument("hc needs a directed graph");
    DiGraph g = std::get<DiGraph>(doc);
    if (g.has_self_loop()) {
      std::cerr << "warning: removing self-loops\n";
      g = g.without_self_loops();
    }
    if (g.n == 1) {
      // No edges remain, so no Hamiltonian cycle: x is not a word.
      std::cerr << "warning: single vertex graph, writing a structure without x\n";
      save_fles(*EventStructure::create(RawStructure::with_bottom()), out);
      return kYes;
    }
    save_fles(*hc_structure(g), out);
    return kYes;
  }
  if (kind == "dhc") {
    if (!std::holds_alternative<UGraph>(doc)) throw std::invalid_argument("dhc needs an undirected graph");
    UGraph g = std::get<UGraph>(doc);
    if (g.has_self_loop()) {
      std::cerr << "warning: removing self-loops\n";
      g = g.without_self_loops();
    }
    if (g.n == 1) {
      std::cerr << "warning: single vertex graph, writing a non-included pair\n";
      RawStructure left = RawStructure::with_bottom();
      left.add_event("x");
      save_fles(*EventStructure::create(left), out + ".e1.fles");
      save_fles(*EventStructure::create(RawStructure::with_bottom()), out + ".e2.fles");
      return kYes;
    }
    const auto pair = dhc_pair(g);
    save_fles(*pair.left, out + ".e1.fles");
    save_fles(*pair.right, out + ".e2.fles");
    return kYes;
  }
  throw std::invalid_argument("unknown reduction '" + kind + "'");
}

int cmd_stats(const std::string& path) {
  const Limits limits = Limits::from_environment();
  const auto s = load_fles(path);
  auto show = [](const char* name, const std::function<std::string()>& f) {
    std::cout << name << ": ";
    try {
      std::cout << f() << "\n";
    } catch (const ResourceLimitExceeded& e) {
      std::cout << "over limit (" << e.cap_name() << ")\n";
    }
  };
  std::cout << "events: " << s->size() << "\n";
  show("maximal configurations", [&] { return std::to_string(count_maximal_configurations(s, limits)); });
  show("language size", [&] { return std::to_string(language(s, limits).size()); });
  show("pc metric", [&] { return std::to_string(pc_metric(s, limits)); });
  show("nfa states", [&] { return std::to_string(encode(s, limits).state_count); });
  return kYes;
}

int cmd_export(const std::string& path, const std::string& out) {
  write_file(out, export_text(encode(load_fles(path), Limits::from_environment())));
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Language inclusion and membership for labeled prime event structures"};
  app.require_subcommand(1);
  int code = kError;

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide L(A) ⊆ L(B)");
  c->add_option("A", check.a)->required()->check(CLI::ExistingFile);
  c->add_option("B", check.b)->required()->check(CLI::ExistingFile);
  c->add_option("--engine", check.engine)->check(CLI::IsMember({"es", "nfa", "both"}));
  c->add_flag("--json", check.as_json);
  c->add_option("--repeat", check.repeat)->check(CLI::PositiveNumber);
  c->add_option("--threads", check.threads)->check(CLI::NonNegativeNumber);
  c->callback([&] { code = cmd_check(check); });

  std::string word, member_path;
  bool witness = false;
  auto* m = app.add_subcommand("member", "Decide w ∈ L(E)");
  m->add_option("WORD", word, "space-separated labels")->required();
  m->add_option("E", member_path)->required()->check(CLI::ExistingFile);
  m->add_flag("--witness", witness);
  m->callback([&] { code = cmd_member(word, member_path, witness); });

  std::string family, gen_out;
  std::vector<std::string> params;
  uint64_t seed = 0;
  auto* g = app.add_subcommand("gen", "Write a benchmark structure: allpar N | ccnfs N | sharing N M | mutate SRC KIND ARGS");
  g->add_option("FAMILY", family)->required()->check(CLI::IsMember({"allpar", "ccnfs", "sharing", "mutate"}));
  g->add_option("PARAMS", params);
  g->add_option("-o,--output", gen_out)->required();
  g->add_option("--seed", seed);
  g->callback([&] { code = cmd_gen(family, params, gen_out, seed); });

  std::string reduction, graph, reduce_out;
  auto* r = app.add_subcommand("reduce", "Build the hc structure or the dhc pair from a graph");
  r->add_option("KIND", reduction)->required()->check(CLI::IsMember({"hc", "dhc"}));
  r->add_option("GRAPH", graph)->required()->check(CLI::ExistingFile);
  r->add_option("-o,--output", reduce_out)->required();
  r->callback([&] { code = cmd_reduce(reduction, graph, reduce_out); });

  std::string stats_path;
  auto* s = app.add_subcommand("stats", "Print size, configuration, language and automaton figures");
  s->add_option("E", stats_path)->required()->check(CLI::ExistingFile);
  s->callback([&] { code = cmd_stats(stats_path); });

  std::string export_path, export_out;
  auto* x = app.add_subcommand("export-nfa", "Write the configuration automaton as text");
  x->add_option("E", export_path)->required()->check(CLI::ExistingFile);
  x->add_option("-o,--output", export_out)->required();
  x->callback([&] { code = cmd_export(export_path, export_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kYes : kError;
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return code;
}
