#include "twsep/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twsep/bounds.hpp"
#include "twsep/csp.hpp"
#include "twsep/decomposition.hpp"
#include "twsep/error.hpp"
#include "twsep/exact.hpp"
#include "twsep/separator_search.hpp"

namespace twsep {

namespace {

using json = nlohmann::ordered_json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return parse_graph(in);
}

void save_td(const std::string& path, const TreeDecomposition& t, int n) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_td(out, t, n);
}

VertexSet parse_csv(const std::string& csv) {
  std::vector<Vertex> members;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      members.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FormatError("separator entry '" + item + "' is not a vertex number");
    }
  }
  return VertexSet(std::move(members));
}

std::string csv(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

json to_json(const VertexSet& s) { return json(s.members()); }

struct BoundFlags {
  std::string input;
  std::string separator;
  bool search = false;
  std::string tw = "exact";
  int limit = kDefaultExactLimit;
  std::size_t budget = 50;
  std::uint64_t seed = 0;
  std::string output;
  bool as_json = false;
  bool timing = false;
};

int cmd_bound(const BoundFlags& f, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = load_graph(f.input);
  const TreewidthEvaluator tw = f.tw == "greedy" ? greedy_evaluator() : exact_evaluator(f.limit);

  SeparatorCandidate chosen;
  if (f.search) {
    chosen = enumerate_candidates(g, f.budget, f.seed).front();
  } else {
    chosen.separator = parse_csv(f.separator);
    chosen.source = CandidateSource::kUser;
  }
  const VertexSet& s = chosen.separator;
  require_subset(g, s, "separator");

  const FillInResult fill = fill_in(g, s);
  const BoundReport report = separator_as_components_bound(g, s, tw);
  if (!f.output.empty()) {
    save_td(f.output, decompose_with_separator(g, s, tw), static_cast<int>(g.vertex_count()));
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const char* method = report.sub_method == SubMethod::kExact ? "exact" : "bounded";

  if (f.as_json) {
    json doc;
    doc["input"] = f.input;
    doc["separator"] = to_json(s);
    doc["source"] = std::string(to_string(chosen.source));
    doc["clique_bound"] = report.clique_bound;
    doc["components_bound"] = report.components_bound;
    doc["corollary_bound"] = report.corollary_bound;
    doc["tw_hs"] = report.tw_hs;
    doc["sub_method"] = method;
    doc["fill_edges"] = json::array();
    for (const Edge& e : fill.fill_edges) doc["fill_edges"].push_back({e.u, e.v});
    doc["per_component"] = json::array();
    for (const ComponentTerm& t : report.per_component) {
      doc["per_component"].push_back({{"index", t.index},
                                      {"vertices", to_json(fill.components[t.index])},
                                      {"attachment", to_json(fill.attachment_sets[t.index])},
                                      {"attachment_size", t.attachment_size},
                                      {"tw", t.width}});
    }
    doc["decomposition"] = f.output.empty() ? json(nullptr) : json(f.output);
    if (f.timing) doc["wall_time_ms"] = ms;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  out << "input=" << f.input << '\n'
      << "separator=" << csv(s) << '\n'
      << "source=" << to_string(chosen.source) << '\n'
      << "clique=" << report.clique_bound << '\n'
      << "components=" << report.components_bound << '\n'
      << "corollary=" << report.corollary_bound << '\n'
      << "tw_hs=" << report.tw_hs << '\n'
      << "sub_method=" << method << '\n'
      << "fill_edges=" << fill.fill_edges.size() << '\n';
  for (const ComponentTerm& t : report.per_component) {
    out << "component=" << t.index << " vertices=" << csv(fill.components[t.index])
        << " attachment=" << csv(fill.attachment_sets[t.index])
        << " attachment_size=" << t.attachment_size << " tw=" << t.width << '\n';
  }
  if (!f.output.empty()) out << "decomposition=" << f.output << '\n';
  if (f.timing) out << "wall_time_ms=" << ms << '\n';
  return kExitOk;
}

struct DecomposeFlags {
  std::string input;
  std::string output;
  int threshold = 12;
  std::uint64_t seed = 0;
  std::size_t budget = 50;
};

int cmd_decompose(const DecomposeFlags& f, std::ostream& out) {
  const Graph g = load_graph(f.input);
  RecursionConfig config;
  config.exact_threshold = f.threshold;
  config.seed = f.seed;
  config.candidate_budget = f.budget;
  const RecursiveResult r = recursive_bound(g, config);
  save_td(f.output, r.decomposition, static_cast<int>(g.vertex_count()));
  out << "width=" << r.width << '\n';
  if (r.budget_exceeded) out << "budget_exceeded=true\n";
  return kExitOk;
}

int cmd_validate(const std::string& graph_path, const std::string& td_path, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  auto in = open_input(td_path);
  const TdFile td = parse_td(in);
  if (td.vertex_count != static_cast<int>(g.vertex_count())) {
    throw FormatError("decomposition is for " + std::to_string(td.vertex_count) +
                      " vertices but the graph has " + std::to_string(g.vertex_count()));
  }
  const ValidationVerdict verdict = validate(td.decomposition, g);
  if (verdict.valid()) {
    out << "valid width=" << width(td.decomposition) << '\n';
    return kExitOk;
  }
  out << "invalid violations=" << verdict.violations.size() << '\n';
  for (const Violation& v : verdict.violations) {
    out << "violation kind=" << to_string(v.kind) << " witness=";
    for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : "") << v.witness[i];
    out << " message=\"" << v.message << "\"\n";
  }
  return kExitInvalid;
}

int cmd_exact(const std::string& input, int limit, const std::string& output, std::ostream& out) {
  const Graph g = load_graph(input);
  const ExactResult r = exact_treewidth(g, limit);
  if (!output.empty()) save_td(output, r.decomposition, static_cast<int>(g.vertex_count()));
  out << "treewidth=" << r.treewidth << '\n';
  return kExitOk;
}

struct CspFlags {
  std::string graph;
  std::string constraints;
  std::string separator;
  bool search = false;
  bool recurse = false;
  bool stats = false;
  bool exhaustive = false;
  bool as_json = false;
  std::uint64_t seed = 0;
  std::size_t budget = 50;
};

int cmd_csp_solve(const CspFlags& f, std::ostream& out) {
  Graph g = load_graph(f.graph);
  auto in = open_input(f.constraints);
  const CspInstance inst = parse_constraints(std::move(g), in);
  const SearchMode mode = f.exhaustive ? SearchMode::kExhaustive : SearchMode::kFirstSolution;

  std::optional<VertexSet> separator;
  if (f.search) {
    separator = enumerate_candidates(inst.graph, f.budget, f.seed).front().separator;
  } else if (!f.separator.empty()) {
    separator = parse_csv(f.separator);
  }

  SolveStats stats;
  if (separator) {
    SeparatorSolveOptions options;
    options.recurse = f.recurse;
    options.mode = mode;
    options.seed = f.seed;
    options.candidate_budget = f.budget;
    stats = solve_with_separator(inst, *separator, options);
  } else {
    stats = solve_backtrack(inst, mode);
  }

  const auto& vs = inst.graph.vertices();
  if (f.as_json) {
    json doc;
    doc["satisfiable"] = stats.satisfiable;
    doc["separator"] = separator ? to_json(*separator) : json(nullptr);
    if (stats.witness) {
      json w = json::object();
      for (std::size_t i = 0; i < vs.size(); ++i) w[std::to_string(vs[i])] = (*stats.witness)[i];
      doc["witness"] = w;
    } else {
      doc["witness"] = nullptr;
    }
    if (f.stats) {
      doc["node_expansions"] = stats.node_expansions;
      doc["cache_lookups"] = stats.cache_lookups;
      doc["cache_entries"] = stats.cache_entries;
      doc["caches"] = json::array();
      for (const CacheReport& c : stats.caches) {
        doc["caches"].push_back({{"key", to_json(c.key)},
                                 {"conditioned_on", to_json(c.conditioned_on)},
                                 {"peak_entries", c.peak_entries},
                                 {"level", c.level}});
      }
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  out << "satisfiable=" << (stats.satisfiable ? "true" : "false") << '\n';
  if (separator) out << "separator=" << csv(*separator) << '\n';
  if (stats.witness) {
    out << "witness=";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      out << (i ? " " : "") << vs[i] << ':' << (*stats.witness)[i];
    }
    out << '\n';
  }
  if (f.stats) {
    out << "node_expansions=" << stats.node_expansions << '\n'
        << "cache_lookups=" << stats.cache_lookups << '\n'
        << "cache_entries=" << stats.cache_entries << '\n';
    for (const CacheReport& c : stats.caches) {
      out << "cache level=" << c.level << " key=" << csv(c.key)
          << " conditioned_on=" << csv(c.conditioned_on) << " peak_entries=" << c.peak_entries
          << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Treewidth bounds from separators, tree decompositions, and separator-caching CSP"};
  app.require_subcommand(1);

  BoundFlags bound;
  auto* bound_cmd = app.add_subcommand("bound", "Report clique, components and corollary bounds");
  bound_cmd->add_option("--input", bound.input, ".gr graph")->required();
  auto* sep_opt = bound_cmd->add_option("--separator", bound.separator, "comma-separated vertices");
  auto* search_opt = bound_cmd->add_flag("--search", bound.search, "pick the best candidate separator");
  sep_opt->excludes(search_opt);
  bound_cmd->add_option("--tw", bound.tw, "treewidth evaluator for the pieces")
      ->check(CLI::IsMember({"exact", "greedy"}));
  bound_cmd->add_option("--limit", bound.limit, "vertex limit of the exact evaluator");
  bound_cmd->add_option("--budget", bound.budget, "candidate budget for --search");
  bound_cmd->add_option("--seed", bound.seed, "seed for sampled candidates");
  bound_cmd->add_option("--output", bound.output, "write the combined decomposition (.td)");
  bound_cmd->add_flag("--json", bound.as_json, "structured output");
  bound_cmd->add_flag("--timing", bound.timing, "include wall time");

  DecomposeFlags decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Recursive separator decomposition");
  decompose_cmd->add_option("--input", decompose.input, ".gr graph")->required();
  decompose_cmd->add_option("--output", decompose.output, ".td output")->required();
  decompose_cmd->add_option("--threshold", decompose.threshold, "solve exactly at or below this size");
  decompose_cmd->add_option("--seed", decompose.seed, "seed for sampled candidates");
  decompose_cmd->add_option("--budget", decompose.budget, "candidates per split");

  std::string validate_graph;
  std::string validate_td;
  auto* validate_cmd = app.add_subcommand("validate", "Check a .td file against a .gr graph");
  validate_cmd->add_option("--graph", validate_graph, ".gr graph")->required();
  validate_cmd->add_option("--td", validate_td, ".td decomposition")->required();

  std::string exact_input;
  std::string exact_output;
  int exact_limit = kDefaultExactLimit;
  auto* exact_cmd = app.add_subcommand("exact", "Exact treewidth of a small graph");
  exact_cmd->add_option("--input", exact_input, ".gr graph")->required();
  exact_cmd->add_option("--limit", exact_limit, "refuse graphs with more vertices");
  exact_cmd->add_option("--output", exact_output, "write an optimal decomposition (.td)");

  CspFlags csp;
  auto* csp_cmd = app.add_subcommand("csp", "Binary constraint satisfaction");
  csp_cmd->require_subcommand(1);
  auto* solve_cmd = csp_cmd->add_subcommand("solve", "Solve with optional separator caching");
  solve_cmd->add_option("--graph", csp.graph, ".gr constraint graph")->required();
  solve_cmd->add_option("--constraints", csp.constraints, "constraint tables")->required();
  auto* csp_sep = solve_cmd->add_option("--separator", csp.separator, "comma-separated vertices");
  auto* csp_search = solve_cmd->add_flag("--search", csp.search, "pick the best candidate separator");
  csp_sep->excludes(csp_search);
  solve_cmd->add_flag("--recurse", csp.recurse, "decompose the separator problem again");
  solve_cmd->add_flag("--stats", csp.stats, "print search counters");
  solve_cmd->add_flag("--exhaustive", csp.exhaustive, "explore the whole search space");
  solve_cmd->add_flag("--json", csp.as_json, "structured output");
  solve_cmd->add_option("--seed", csp.seed, "seed for sampled candidates");
  solve_cmd->add_option("--budget", csp.budget, "candidate budget for --search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  }

  try {
    if (*bound_cmd) {
      if (bound.separator.empty() && !bound.search) {
        err << "error: bound needs --separator or --search\n";
        return kExitFormat;
      }
      return cmd_bound(bound, out);
    }
    if (*decompose_cmd) return cmd_decompose(decompose, out);
    if (*validate_cmd) return cmd_validate(validate_graph, validate_td, out);
    if (*exact_cmd) return cmd_exact(exact_input, exact_limit, exact_output, out);
    if (*solve_cmd) return cmd_csp_solve(csp, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSemantic;
  }
  return kExitFormat;
}

}  // namespace twsep
