#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vpart/decomposer.hpp"
#include "vpart/io.hpp"
#include "vpart/oracle.hpp"
#include "vpart/serialize.hpp"
#include "vpart/verifier.hpp"

namespace vpart::cli {

using nlohmann::ordered_json;

enum Exit : int { kOk = 0, kConfig = 1, kVerifyFailed = 2, kPrecondition = 3, kBudget = 4 };

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::PreconditionViolated:
    case ErrorKind::UnsupportedCase:
    case ErrorKind::NotOptimalSeed: return kPrecondition;
    case ErrorKind::BudgetExhausted:
    case ErrorKind::RangeExceeded:
    case ErrorKind::FallbackExceeded:
    case ErrorKind::RepairLoopExceeded: return kBudget;
    case ErrorKind::TheoremCounterexample: return kVerifyFailed;
    default: return kConfig;
  }
}

struct Config {
  std::string command;
  std::string input = "-";
  std::string format;
  std::optional<std::size_t> declared_n;
  std::string mode = "two";
  std::vector<std::string> families;
  std::optional<std::size_t> p, q;
  std::vector<std::size_t> ps;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t fallback_n = 16;
  std::size_t repair_cap = 10'000;
  std::uint64_t seed = 0;
  std::string out;
  bool no_maximality = false;
  // verify
  std::string decomposition;
  // hunt / enumerate
  std::string claim = "theorem1";
  std::optional<std::size_t> n, n_min, n_max, delta, delta_min, delta_max, omega_min, omega_max, clique_free;
  bool exhaustive = false;
  std::size_t samples = 0;
  double edge_prob = 0.5;
  bool dedup = false;
  bool no_connected = false;
  bool no_kd_filter = false;
  std::size_t workers = 1;
  std::string records;
  bool no_timings = false;
  bool count_only = false;
};

inline ordered_json config_json(const Config& c) {
  ordered_json j;
  j["command"] = c.command;
  auto opt = [&](const char* k, const std::optional<std::size_t>& v) {
    if (v) j[k] = *v;
  };
  if (c.command == "hunt" || c.command == "enumerate") {
    if (c.command == "hunt") j["claim"] = c.claim;
    opt("n", c.n), opt("n_min", c.n_min), opt("n_max", c.n_max), opt("delta", c.delta), opt("delta_min", c.delta_min),
        opt("delta_max", c.delta_max), opt("omega_min", c.omega_min), opt("omega_max", c.omega_max),
        opt("clique_free", c.clique_free);
    j["exhaustive"] = c.exhaustive;
    j["samples"] = c.samples;
    j["edge_prob"] = c.edge_prob;
    j["dedup"] = c.dedup;
    j["connected"] = !c.no_connected;
    j["kd_filter"] = !c.no_kd_filter;
  } else {
    j["input"] = c.input;
    if (!c.format.empty()) j["format"] = c.format;
    opt("declared_n", c.declared_n);
    j["mode"] = c.mode;
  }
  j["families"] = c.families;
  opt("p", c.p), opt("q", c.q);
  if (!c.ps.empty()) j["ps"] = c.ps;
  j["node_budget"] = c.node_budget;
  j["fallback_n"] = c.fallback_n;
  j["repair_cap"] = c.repair_cap;
  j["seed"] = c.seed;
  j["maximality"] = !c.no_maximality;
  return j;
}

inline ordered_json error_json(const Error& e) {
  ordered_json j;
  j["kind"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  j["witness"] = json::to_json(e.witness());
  return j;
}

inline std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GraphFormat guess_format(const Config& c) {
  if (!c.format.empty()) {
    auto f = parse_format_name(c.format);
    if (!f) throw Error(ErrorKind::ConfigError, "format: unknown '" + c.format + "'");
    return *f;
  }
  auto ends = [&](std::string_view suf) { return c.input.size() >= suf.size() && c.input.ends_with(suf); };
  if (ends(".g6") || ends(".graph6")) return GraphFormat::Graph6;
  if (ends(".dimacs") || ends(".col")) return GraphFormat::Dimacs;
  return GraphFormat::EdgeList;
}

inline Graph load_graph(const Config& c) { return parse_graph(read_all(c.input), guess_format(c), c.declared_n); }

/// "clique:k", "core:t", "cycle-family", or "file:<path>" holding one graph6
/// pattern per line.
inline FreenessSpec parse_family(const std::string& s) {
  if (s.starts_with("file:")) {
    std::vector<Graph> pats;
    std::istringstream in(read_all(s.substr(5)));
    for (std::string line; std::getline(in, line);)
      if (!vpart::detail::trim(line).empty()) pats.push_back(parse_graph6(line));
    return FreenessSpec::patterns(std::move(pats), std::nullopt, s);
  }
  return FreenessSpec::parse(s);
}

inline std::vector<FreenessSpec> families_or_cliques(const Config& c, const std::vector<std::size_t>& ps, std::size_t count) {
  std::vector<FreenessSpec> out;
  if (!c.families.empty() && c.families.size() != count)
    throw Error(ErrorKind::ConfigError, "family: expected " + std::to_string(count) + " families, got " +
                                            std::to_string(c.families.size()));
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(c.families.empty() ? FreenessSpec::clique(ps[i]) : parse_family(c.families[i]));
  return out;
}

/// Fills p and q from p + q = sum when one or both are missing.
inline std::pair<std::size_t, std::size_t> derive_pq(const Config& c, std::size_t sum) {
  if (c.p && c.q) return {*c.p, *c.q};
  if (c.p) return {*c.p, sum >= *c.p ? sum - *c.p : 0};
  if (c.q) return {sum >= *c.q ? sum - *c.q : 0, *c.q};
  return {sum / 2, sum - sum / 2};
}

inline DecomposeOptions decompose_options(const Config& c) {
  DecomposeOptions o;
  o.node_budget = c.node_budget;
  o.fallback_max_n = c.fallback_n;
  o.repair_cap = c.repair_cap;
  o.seed = c.seed;
  if (c.no_maximality) o.verify_maximality = false;
  return o;
}

struct Output {
  ordered_json doc;
  int code = kOk;
};

inline Output run_decompose(const Config& c) {
  const Graph g = load_graph(c);
  const DecomposeOptions opt = decompose_options(c);
  const std::size_t delta = g.max_degree();
  Output o;
  auto finish = [&](const Decomposition& d, const Report& r, ordered_json trace) {
    o.doc["decomposition"] = json::decomposition_record(g, d, r, std::move(trace));
    o.doc["report"] = json::to_json(r);
    o.code = r.passed() ? kOk : kVerifyFailed;
  };
  if (c.mode == "two" || c.mode == "lemma2") {
    auto [p, q] = derive_pq(c, delta + 1);
    o.doc["parameters"] = {{"p", p}, {"q", q}};
    if (c.mode == "two") {
      if (c.families.size() > 1) throw Error(ErrorKind::ConfigError, "family: mode two takes one family");
      const FreenessSpec spec = c.families.empty() ? FreenessSpec::clique(std::max<std::size_t>(p, 1)) : parse_family(c.families[0]);
      o.doc["parameters"]["family"] = spec.label();
      auto r = decompose_two(g, spec, p, q, opt);
      finish(r.decomposition, r.report, json::trace_summary(r.refine, r.used_fallback));
    } else {
      auto r = clique_split(g, p, q, opt);
      finish(r.decomposition, r.report, {{"hitting_set", r.via_hitting_set}});
    }
  } else if (c.mode == "k") {
    if (c.ps.size() < 3) throw Error(ErrorKind::ConfigError, "ps: mode k needs at least three values");
    auto specs = families_or_cliques(c, c.ps, c.ps.size() - 1);
    o.doc["parameters"] = {{"ps", c.ps}};
    auto r = decompose_k(g, specs, c.ps, opt);
    ordered_json trace = json::trace_summary(r.last_refine, r.used_fallback);
    auto& levels = trace["levels"] = ordered_json::array();
    for (auto& l : r.levels)
      levels.push_back({{"level", l.level},
                        {"residue_size", l.residue_size},
                        {"residue_max_degree", l.residue_max_degree},
                        {"degree_bound", l.degree_bound},
                        {"remaining_sum", l.remaining_sum},
                        {"sum_matches", l.sum_matches},
                        {"part_size", l.part_size}});
    finish(r.decomposition, r.report, std::move(trace));
  } else if (c.mode == "degenerateA" || c.mode == "degenerateC") {
    auto [p, q] = derive_pq(c, delta);
    o.doc["parameters"] = {{"p", p}, {"q", q}};
    if (c.mode == "degenerateA") {
      auto r = degenerate_split(g, p, q, opt);
      finish(r.decomposition, r.report, {{"moves", r.objective_trace.size() - 1}, {"repairs", r.repairs}});
    } else {
      auto r = degenerate_max_split(g, p, q, opt);
      finish(r.decomposition, r.report, json::trace_summary(r.refine, r.used_fallback));
    }
  } else {
    throw Error(ErrorKind::ConfigError, "mode: unknown '" + c.mode + "'");
  }
  return o;
}

inline Decomposition load_decomposition(const Config& c, const Graph& g) {
  if (c.decomposition.empty()) throw Error(ErrorKind::ConfigError, "decomposition: required for verify");
  ordered_json j;
  try {
    j = ordered_json::parse(read_all(c.decomposition));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("decomposition: ") + e.what());
  }
  if (j.contains("decomposition")) j = j["decomposition"];
  if (!j.contains("parts") || !j["parts"].is_array()) throw Error(ErrorKind::MalformedInput, "decomposition: missing parts");
  Decomposition d;
  for (auto& part : j["parts"]) {
    VertexSet s(g.n());
    for (auto& v : part) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= g.n())
        throw Error(ErrorKind::MalformedInput, "decomposition: vertex out of range");
      s.insert(v.get<Vertex>());
    }
    d.parts.push_back(std::move(s));
  }
  return d;
}

inline Output run_verify(const Config& c) {
  const Graph g = load_graph(c);
  const Decomposition d = load_decomposition(c, g);
  VerifyOptions vo = default_verify_options(g);
  vo.budget = c.node_budget;
  if (c.no_maximality) vo.check_maximality = false;
  const std::size_t delta = g.max_degree();
  Report r;
  if (c.mode == "two") {
    auto [p, q] = derive_pq(c, delta + 1);
    const FreenessSpec spec = c.families.empty() ? FreenessSpec::clique(std::max<std::size_t>(p, 1)) : parse_family(c.families[0]);
    r = verify_two(g, d, spec, p, q, vo);
  } else if (c.mode == "lemma2") {
    auto [p, q] = derive_pq(c, delta + 1);
    r = verify_clique_split(g, d, p, q);
  } else if (c.mode == "k") {
    if (c.ps.size() < 2) throw Error(ErrorKind::ConfigError, "ps: mode k needs at least two values");
    r = verify_k(g, d, families_or_cliques(c, c.ps, c.ps.size() - 1), c.ps, vo);
  } else if (c.mode == "degenerateA" || c.mode == "degenerateC") {
    auto [p, q] = derive_pq(c, delta);
    r = verify_degenerate(g, d, p, q, c.mode == "degenerateA" ? DegenerateMode::LemmaA : DegenerateMode::TheoremC, vo);
  } else {
    throw Error(ErrorKind::ConfigError, "mode: unknown '" + c.mode + "'");
  }
  Output o;
  o.doc["report"] = json::to_json(r);
  o.code = r.passed() ? kOk : kVerifyFailed;
  return o;
}

inline oracle::GraphFilter filter_from(const Config& c, oracle::Claim claim) {
  oracle::GraphFilter f;
  f.connected = !c.no_connected;
  f.max_degree = c.delta;
  f.max_degree_min = c.delta_min;
  f.max_degree_max = c.delta_max;
  f.omega_min = c.omega_min;
  f.omega_max = c.omega_max;
  f.clique_free = c.clique_free;
  if (oracle::is_theorem(claim)) f.kd_minus_e_free = !c.no_kd_filter;
  else if (!f.omega_max && c.delta && *c.delta >= 2) f.omega_max = *c.delta - 2;
  return f;
}

inline std::pair<std::size_t, std::size_t> n_range(const Config& c) {
  if (c.n) return {*c.n, *c.n};
  if (!c.n_min || !c.n_max) throw Error(ErrorKind::ConfigError, "n: give --n or both --n-min and --n-max");
  return {*c.n_min, *c.n_max};
}

inline Output run_hunt(const Config& c, std::ostream& records) {
  auto claim = oracle::parse_claim(c.claim);
  if (!claim) throw Error(ErrorKind::ConfigError, "claim: unknown '" + c.claim + "'");
  oracle::HuntTask t;
  t.claim = *claim;
  std::tie(t.n_min, t.n_max) = n_range(c);
  t.filter = filter_from(c, *claim);
  t.exhaustive = c.exhaustive || c.samples == 0;
  t.samples = c.samples;
  t.edge_probability = c.edge_prob;
  t.seed = c.seed;
  t.dedup = c.dedup;
  t.record_timings = !c.no_timings;
  t.engine = decompose_options(c);
  if (!c.ps.empty()) {
    oracle::ClaimParams cp;
    cp.ps = c.ps;
    for (std::size_t i = 0; i + 1 < c.ps.size() && !c.families.empty(); ++i) cp.specs.push_back(parse_family(c.families.at(i)));
    t.grid.push_back(cp);
  } else if (c.p && c.q) {
    oracle::ClaimParams cp;
    cp.p = *c.p;
    cp.q = *c.q;
    if (!c.families.empty()) cp.spec = parse_family(c.families[0]);
    t.grid.push_back(cp);
  }
  auto summary = oracle::hunt(t, c.workers, [&](const oracle::HuntRecord& r) {
    records << json::to_json(r, !c.no_timings).dump() << '\n';
  });
  Output o;
  o.doc["summary"] = json::to_json(summary);
  o.code = summary.counterexample_candidates.empty() && summary.engine_gaps.empty() ? kOk : kVerifyFailed;
  return o;
}

inline Output run_enumerate(const Config& c, std::ostream& out) {
  auto [lo, hi] = n_range(c);
  oracle::GraphFilter f = filter_from(c, oracle::Claim::Problem1);
  f.kd_minus_e_free = !c.no_kd_filter && c.delta.has_value();
  if (!c.omega_max) f.omega_max.reset();
  std::size_t count = 0;
  for (std::size_t n = lo; n <= hi; ++n)
    oracle::enumerate_graphs(n, f, c.dedup, [&](const oracle::MaskGraph& m) {
      ++count;
      if (!c.count_only) out << to_graph6(oracle::from_mask(m)) << '\n';
      return true;
    });
  Output o;
  o.doc["count"] = count;
  return o;
}

inline Output run_stats(const Config& c) {
  const Graph g = load_graph(c);
  Output o;
  auto& j = o.doc["stats"];
  j["n"] = g.n();
  j["m"] = g.m();
  j["graph6"] = to_graph6(g);
  j["graph_hash"] = json::hex64(graph_hash(g));
  if (g.n() > 0) {
    j["max_degree"] = g.max_degree();
    j["min_degree"] = g.min_degree();
    j["clique_number"] = clique_number(g);
    j["degeneracy"] = degeneracy(g).d;
  }
  j["components"] = connected_components(g).size();
  if (g.max_degree() >= 2) {
    auto w = find_kd_minus_e(g, g.max_degree());
    j["kd_minus_e"] = w ? ordered_json(w->w.to_vector()) : ordered_json(nullptr);
  }
  return o;
}

/// Parses argv and runs one command. Structured output goes to `out` (or the
/// --out file); diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"vertex partitions with a maximum free part"};
  app.require_subcommand(1);

  auto graph_input = [&](CLI::App* s) {
    s->add_option("-i,--input", c.input, "graph file, '-' for stdin");
    s->add_option("--format", c.format, "graph6 | edgelist | dimacs");
    s->add_option("--declared-n", c.declared_n, "vertex count for headerless edge lists");
  };
  auto params = [&](CLI::App* s) {
    s->add_option("--mode", c.mode, "two | k | lemma2 | degenerateA | degenerateC");
    s->add_option("--family", c.families, "clique:k | core:t | cycle-family | file:<path>");
    s->add_option("--p", c.p);
    s->add_option("--q", c.q);
    s->add_option("--ps", c.ps)->delimiter(',');
    s->add_option("--node-budget", c.node_budget)->check(CLI::PositiveNumber);
    s->add_option("--fallback-n", c.fallback_n);
    s->add_option("--repair-cap", c.repair_cap);
    s->add_option("--seed", c.seed);
    s->add_option("-o,--out", c.out, "artifact path (default stdout)");
    s->add_flag("--no-maximality", c.no_maximality, "skip the exact maximality recheck");
  };
  auto filters = [&](CLI::App* s) {
    s->add_option("--n", c.n);
    s->add_option("--n-min", c.n_min);
    s->add_option("--n-max", c.n_max);
    s->add_option("--delta", c.delta);
    s->add_option("--delta-min", c.delta_min);
    s->add_option("--delta-max", c.delta_max);
    s->add_option("--omega-min", c.omega_min);
    s->add_option("--omega-max", c.omega_max);
    s->add_option("--clique-free", c.clique_free, "reject hosts containing K_t");
    s->add_flag("--no-connected", c.no_connected);
    s->add_flag("--no-kd-filter", c.no_kd_filter, "keep hosts containing K_Δ minus an edge");
    s->add_flag("--dedup", c.dedup, "one representative per isomorphism class");
  };

  auto* dec = app.add_subcommand("decompose", "compute and verify a decomposition");
  graph_input(dec), params(dec);
  auto* ver = app.add_subcommand("verify", "check a decomposition record against a graph");
  graph_input(ver), params(ver);
  ver->add_option("-d,--decomposition", c.decomposition, "JSON with a parts array")->required();
  auto* hunt = app.add_subcommand("hunt", "oracle versus engine over many hosts");
  filters(hunt), params(hunt);
  hunt->add_option("--claim", c.claim, "theorem1 | corollary1 | lemma2 | problem1 | problem2");
  hunt->add_flag("--exhaustive", c.exhaustive);
  hunt->add_option("--samples", c.samples, "hosts per n in sampling mode");
  hunt->add_option("--edge-prob", c.edge_prob);
  hunt->add_option("--workers", c.workers);
  hunt->add_option("--records", c.records, "JSONL record sink");
  hunt->add_flag("--no-timings", c.no_timings);
  auto* en = app.add_subcommand("enumerate", "list labeled graphs passing filters");
  filters(en);
  en->add_option("-o,--out", c.out);
  en->add_flag("--count", c.count_only);
  auto* st = app.add_subcommand("stats", "basic invariants of a graph");
  graph_input(st);
  st->add_option("-o,--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kConfig;
  }
  c.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out.empty() && c.out != "-") {
    file.open(c.out, std::ios::binary);
    if (!file) {
      err << "config error: out: cannot write '" << c.out << "'\n";
      return kConfig;
    }
    sink = &file;
  }

  Output o;
  o.doc["config"] = config_json(c);
  try {
    Output r;
    if (c.command == "decompose") r = run_decompose(c);
    else if (c.command == "verify") r = run_verify(c);
    else if (c.command == "hunt") {
      std::ofstream rec;
      std::ostringstream discard;
      std::ostream* rs = &discard;
      if (!c.records.empty()) {
        rec.open(c.records, std::ios::binary);
        if (!rec) throw Error(ErrorKind::ConfigError, "records: cannot write '" + c.records + "'");
        rs = &rec;
      }
      r = run_hunt(c, *rs);
    } else if (c.command == "enumerate") {
      r = run_enumerate(c, *sink);
      err << r.doc["count"].get<std::size_t>() << " graphs\n";
      if (!c.count_only) return kOk;
      *sink << r.doc["count"].get<std::size_t>() << '\n';
      return kOk;
    } else r = run_stats(c);
    o.doc.update(r.doc);
    o.code = r.code;
  } catch (const Error& e) {
    o.doc["error"] = error_json(e);
    o.code = exit_code_for(e.kind());
    err << to_string(e.kind()) << ": " << e.what() << '\n';
  }
  o.doc["exit_code"] = o.code;
  *sink << o.doc.dump(2) << '\n';
  return o.code;
}

}  // namespace vpart::cli
