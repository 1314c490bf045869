// Batch front door for the edge-coloring library: generate graphs, run the
// coloring strategies, verify, search exactly, and run the acceptance suite.
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 size-cap refusal.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "px3/acceptance.hpp"
#include "px3/basic_colorings.hpp"
#include "px3/bfs_tree.hpp"
#include "px3/coloring.hpp"
#include "px3/domination.hpp"
#include "px3/ear.hpp"
#include "px3/graph.hpp"
#include "px3/oracle.hpp"
#include "px3/rng.hpp"
#include "px3/samplers.hpp"
#include "px3/three_dom.hpp"
#include "px3/three_way.hpp"

namespace {

using nlohmann::json;
using namespace px3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return {j.at("n").get<int>(), std::move(edges)};
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"edges", edges}};
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = slurp(path);
  try {
    if (format == "json") return graph_from_json(json::parse(text));
    if (format == "g6") return parse_graph(text, GraphFormat::graph6);
    if (format == "el") return parse_graph(text, GraphFormat::edge_list);
    std::size_t at = text.find_first_not_of(" \t\r\n");
    if (at != std::string::npos && text[at] == '{') return graph_from_json(json::parse(text));
    return parse_graph(text);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string dump_graph(const Graph& g, const std::string& format) {
  if (format == "g6") return render_graph6(g) + "\n";
  if (format == "json") return graph_to_json(g).dump(2) + "\n";
  return render_edge_list(g);
}

std::vector<int> ints_from_file(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<int> out;
  int x = 0;
  while (in >> x) out.push_back(x);
  if (!in.eof()) throw UsageError(path + ": expected whitespace-separated integers");
  return out;
}

std::vector<int> split_ints(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + csv);
    }
  }
  return out;
}

std::vector<double> split_doubles(const std::string& csv) {
  std::vector<double> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("bad number list: " + csv);
    }
  }
  return out;
}

InnerStrategy inner_of(const std::string& name) {
  if (name == "exact") return InnerStrategy::exact_oracle;
  if (name == "tree") return InnerStrategy::spanning_tree_delta;
  if (name == "recursive") return InnerStrategy::recursive_three_way;
  throw UsageError("unknown inner strategy: " + name);
}

// ------------------------------------------------------------------ generate

struct GenerateOpts {
  std::string family;
  int n = 0;
  int a = 0, b = 0;
  double p = 0.5;
  int delta = 3;
  std::string sizes;
  int r = 0, q = 3;
  std::string weights;
  double cutoff = 0.0;
  std::string prefix;
  int rights = 0;
  std::uint64_t seed = 12345;
  std::string out;
  std::string format = "el";
};

Graph make_graph(const GenerateOpts& o, Rng& rng) {
  const std::string& f = o.family;
  if (f == "path") return families::path(o.n);
  if (f == "cycle") return families::cycle(o.n);
  if (f == "complete") return families::complete(o.n);
  if (f == "complete_bipartite") return families::complete_bipartite(o.a, o.b);
  if (f == "wheel") return families::wheel(o.n);
  if (f == "star") return families::star(o.n);
  if (f == "threshold") {
    if (!o.weights.empty()) return families::threshold({split_doubles(o.weights), o.cutoff});
    return random_threshold_graph(o.n, o.delta, rng);
  }
  if (f == "chain") {
    if (!o.prefix.empty()) return families::chain({split_ints(o.prefix), o.rights});
    return random_chain_graph(o.n, o.delta, rng);
  }
  if (f == "shared_vertex_cliques") {
    std::vector<int> sizes = split_ints(o.sizes);
    return families::shared_vertex_cliques(static_cast<int>(sizes.size()), sizes);
  }
  if (f == "join_empty_clique") return families::join_empty_clique(o.r, o.q);
  if (f == "random_tree") return random_tree(o.n, rng);
  if (f == "random_connected") return random_connected_graph(o.n, o.p, rng);
  if (f == "random_min_degree") return random_connected_min_degree(o.n, o.p, o.delta, rng);
  if (f == "random_nontraceable") return random_two_connected_nontraceable(o.n, rng);
  throw UsageError("unknown family: " + f);
}

int cmd_generate(const GenerateOpts& o) {
  Rng rng(o.seed);
  emit(o.out, dump_graph(make_graph(o, rng), o.format));
  return 0;
}

// --------------------------------------------------------------------- color

struct ColorOpts {
  std::string in;
  std::string format = "auto";
  std::string strategy;
  std::string out;
  std::string dom = "auto";
  std::string subgraph;
  std::string trace;
  std::string inner = "exact";
  bool json_out = false;
};

json tree_to_json(const ComponentTree& t) {
  json rows = json::array();
  for (int v : t.order) {
    const auto i = static_cast<std::size_t>(v);
    rows.push_back({{"vertex", v},
                    {"level", t.level[i]},
                    {"parent", t.parent[i]},
                    {"anchor", t.anchor[i]},
                    {"late", static_cast<bool>(t.late[i])}});
  }
  return {{"root", t.root}, {"members", t.members}, {"rows", rows}};
}

json trace_to_json(const ThreeWayColoringTrace& t) {
  const Graph& g = t.coloring.graph();
  json comps = json::array();
  for (const OutsideComponent& c : t.components) {
    json jc = {{"kind", std::string(1, c.kind)}, {"vertices", c.vertices}};
    if (c.tree) jc["tree"] = tree_to_json(*c.tree);
    comps.push_back(jc);
  }
  json legs = json::array();
  for (int v = 0; v < g.n(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (t.leg[i] < 0) continue;
    const Edge& e = g.edge(t.leg[i]);
    legs.push_back({{"vertex", v},
                    {"edge", {e.u, e.v}},
                    {"foot", t.foot[i]},
                    {"recolored", static_cast<bool>(t.leg_recolored[i])}});
  }
  json log = json::array();
  for (const RecolorStep& s : t.recolor_log)
    log.push_back({{"vertex", s.vertex}, {"edge", {s.u, s.v}}, {"from", s.from}, {"to", s.to}});
  json wits = json::array();
  for (int v = 0; v < g.n(); ++v) {
    const auto& w = t.witnesses[static_cast<std::size_t>(v)];
    if (!w) continue;
    json paths = json::array();
    json ends = json::array();
    for (const VDPath& p : w->paths) {
      paths.push_back(p.vertices);
      ends.push_back(vd_path_end_color(t.coloring, p));
    }
    wits.push_back({{"vertex", v}, {"paths", paths}, {"end_colors", ends}});
  }
  return {{"dominating", t.dominating}, {"inner_colors", t.inner_colors},
          {"total_colors", t.total_colors}, {"components", comps},
          {"legs", legs},               {"recolor_log", log},
          {"witnesses", wits}};
}

int cmd_color(const ColorOpts& o) {
  Graph g = load_graph(o.in, o.format);
  EdgeColoring col;
  json extra = json::object();
  if (o.strategy == "tree") {
    col = color_tree(g);
  } else if (o.strategy == "traceable") {
    col = color_traceable(g);
  } else if (o.strategy == "contract") {
    if (o.subgraph.empty())
      throw UsageError("strategy contract needs --subgraph FILE listing the inside vertices");
    std::vector<int> verts = ints_from_file(o.subgraph);
    InducedSubgraph sub = induced_subgraph(g, verts);
    ContractionColoring got =
        color_by_contraction(g, sub.to_parent, color_inner(sub.graph, inner_of(o.inner)));
    col = got.coloring;
    extra["quotient_colors"] = got.quotient_colors;
    extra["inner_colors"] = got.inner_colors;
  } else if (o.strategy == "3way") {
    std::vector<int> dom =
        o.dom == "auto" ? greedy_connected_dominating_set(g) : ints_from_file(o.dom);
    ThreeWayColoringTrace t = color_three_way(g, dom, inner_of(o.inner));
    col = t.coloring;
    extra["dominating"] = t.dominating;
    extra["inner_colors"] = t.inner_colors;
    if (!o.trace.empty()) emit(o.trace, trace_to_json(t).dump(2) + "\n");
  } else if (o.strategy == "3dom") {
    std::vector<int> dom =
        o.dom == "auto" ? find_connected_s_dominating_set(g, 3) : ints_from_file(o.dom);
    ThreeDomColoring t = color_three_dom(g, dom, inner_of(o.inner));
    col = t.coloring;
    extra["dominating"] = t.dominating;
    extra["inner_colors"] = t.inner_colors;
  } else if (o.strategy == "ear") {
    EarColoring t = color_ear(g);
    col = t.coloring;
    extra["traceable"] = t.traceable;
    extra["long_ears"] = t.decomposition.long_ears;
  } else {
    throw UsageError("unknown strategy: " + o.strategy);
  }

  VerifyResult check = verify_3_proper(col);
  const int colors = col.palette_size();
  if (!o.out.empty()) emit(o.out, render_coloring(col));
  if (o.json_out) {
    json j = {{"strategy", o.strategy}, {"colors", colors}, {"verified", check.ok}};
    for (const auto& [k, v] : extra.items()) j[k] = v;
    json colored = json::array();
    for (int i = 0; i < g.m(); ++i) colored.push_back({g.edge(i).u, g.edge(i).v, col.color(i)});
    j["coloring"] = colored;
    std::cout << j.dump(2) << "\n";
  } else {
    if (o.out.empty()) std::cout << render_coloring(col);
    std::cout << "colors=" << colors << " verified=" << (check.ok ? "true" : "false") << "\n";
  }
  return check.ok ? 0 : 1;
}

// -------------------------------------------------------------------- verify

struct VerifyOpts {
  std::string in;
  std::string format = "auto";
  std::string coloring;
  bool json_out = false;
};

int cmd_verify(const VerifyOpts& o) {
  Graph g = load_graph(o.in, o.format);
  EdgeColoring c = parse_coloring(g, slurp(o.coloring));
  VerifyResult r = verify_3_proper(c);
  if (o.json_out) {
    json j = {{"ok", r.ok}, {"triples_checked", r.triples_checked}};
    j["failing"] = r.failing ? json(*r.failing) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (r.ok) {
    std::cout << "ok (" << r.triples_checked << " triples)\n";
  } else {
    const auto& f = *r.failing;
    std::cout << "failing triple: " << f[0] << " " << f[1] << " " << f[2] << "\n";
  }
  return r.ok ? 0 : 1;
}

// --------------------------------------------------------------------- exact

struct ExactOpts {
  std::string in;
  std::string format = "auto";
  int max_colors = 8;
  int max_edges = 20;
  std::int64_t budget = 0;  // exact: work cap; refute: sample count
  int refute = 0;           // when > 0, try to rule this palette size out
  std::uint64_t seed = 12345;
  std::string out;  // witness or counterexample coloring
  bool json_out = false;
};

int cmd_exact(const ExactOpts& o) {
  Graph g = load_graph(o.in, o.format);
  if (o.refute > 0) {
    const int samples = o.budget > 0 ? static_cast<int>(o.budget) : 1000;
    RefuteResult r = px3_lower_bound_refute(g, o.refute, samples, o.seed);
    if (r.counterexample && !o.out.empty()) emit(o.out, render_coloring(*r.counterexample));
    if (o.json_out) {
      json j = {{"palette", o.refute},
                {"exhaustive", r.exhaustive},
                {"samples", r.samples},
                {"sampled_failures", r.sampled_failures}};
      j["proved_no_coloring"] = r.exhaustive ? json(r.proved_no_coloring) : json(nullptr);
      j["counterexample_found"] = r.counterexample.has_value();
      std::cout << j.dump(2) << "\n";
    } else if (r.exhaustive && r.proved_no_coloring) {
      std::cout << "palette " << o.refute << " refuted exhaustively\n";
    } else if (r.exhaustive) {
      std::cout << "palette " << o.refute << " admits a coloring\n";
    } else {
      std::cout << "sampled " << r.samples << " colorings, " << r.sampled_failures << " failed\n";
    }
    return 0;
  }
  OracleCaps caps;
  caps.cap_edges = o.max_edges;
  caps.cap_colors = o.max_colors;
  if (o.budget > 0) caps.cap_work = o.budget;
  PxResult r = px3_exact(g, caps);
  if (!o.out.empty()) emit(o.out, render_coloring(r.witness));
  if (o.json_out) {
    json colored = json::array();
    for (int i = 0; i < g.m(); ++i)
      colored.push_back({g.edge(i).u, g.edge(i).v, r.witness.color(i)});
    json j = {{"px3", r.value}, {"refuted_palette", r.refuted_palette}, {"witness", colored}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "px3=" << r.value << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ dominate

struct DominateOpts {
  std::string in;
  std::string format = "auto";
  std::string kind = "3way";
  bool connected = false;
  bool json_out = false;
};

int cmd_dominate(const DominateOpts& o) {
  Graph g = load_graph(o.in, o.format);
  std::vector<int> dom;
  if (o.kind == "3way")
    dom = greedy_connected_dominating_set(g);
  else if (o.kind == "3dom")
    dom = find_connected_s_dominating_set(g, 3);
  else if (o.kind == "min")
    dom = find_connected_s_dominating_set(g, 1);
  else
    throw UsageError("unknown kind: " + o.kind);
  DominationCert cert = check_domination(g, dom, 3);
  if (o.connected && !cert.connected) throw std::logic_error("search returned a disconnected set");
  if (o.json_out) {
    json j = {{"set", dom},
              {"size", dom.size()},
              {"dominating", cert.dominating},
              {"connected", cert.connected},
              {"three_way", cert.s_way},
              {"three_dominating", cert.s_dominating}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "set=";
    for (std::size_t i = 0; i < dom.size(); ++i) std::cout << (i ? " " : "") << dom[i];
    std::cout << "\nsize=" << dom.size() << " dominating=" << (cert.dominating ? "true" : "false")
              << " connected=" << (cert.connected ? "true" : "false")
              << " 3way=" << (cert.s_way ? "true" : "false")
              << " 3dom=" << (cert.s_dominating ? "true" : "false") << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- eardecomp

struct EarOpts {
  std::string in;
  std::string format = "auto";
  int cap = 16;
  std::string out;
  bool json_out = false;
};

int cmd_eardecomp(const EarOpts& o) {
  Graph g = load_graph(o.in, o.format);
  EarDecomposition d = nonincreasing_ear_decomposition(g, o.cap);
  std::ostringstream text;
  if (o.json_out) {
    json ears = json::array();
    for (const Ear& e : d.ears) {
      std::vector<int> route{e.a};
      route.insert(route.end(), e.inner.begin(), e.inner.end());
      route.push_back(e.b);
      ears.push_back({{"path", route}, {"length", e.length()}});
    }
    text << json{{"start_cycle", d.start_cycle}, {"ears", ears}, {"long_ears", d.long_ears}}.dump(2)
         << "\n";
  } else {
    text << "cycle:";
    for (int v : d.start_cycle) text << " " << v;
    text << "\n";
    for (std::size_t k = 0; k < d.ears.size(); ++k) {
      const Ear& e = d.ears[k];
      text << "ear " << k << ": " << e.a;
      for (int v : e.inner) text << " " << v;
      text << " " << e.b << " (length " << e.length() << ")\n";
    }
    text << "long_ears=" << d.long_ears << "\n";
  }
  emit(o.out, text.str());
  return 0;
}

// ----------------------------------------------------------------- recognize

struct RecognizeOpts {
  std::string in;
  std::string format = "auto";
  std::string family;
  bool json_out = false;
};

int cmd_recognize(const RecognizeOpts& o) {
  Graph g = load_graph(o.in, o.format);
  if (o.family == "threshold") {
    std::optional<ThresholdSpec> s = recognize_threshold(g);
    if (o.json_out) {
      json j = {{"family", "threshold"}, {"recognized", s.has_value()}};
      if (s) {
        j["weights"] = s->weights;
        j["cutoff"] = s->threshold;
      }
      std::cout << j.dump(2) << "\n";
    } else if (s) {
      std::cout << "threshold=true\nweights=";
      for (std::size_t i = 0; i < s->weights.size(); ++i)
        std::cout << (i ? " " : "") << s->weights[i];
      std::cout << "\ncutoff=" << s->threshold << "\n";
    } else {
      std::cout << "threshold=false\n";
    }
    return s ? 0 : 1;
  }
  if (o.family == "chain") {
    std::optional<ChainRecognition> r = recognize_chain(g);
    if (o.json_out) {
      json j = {{"family", "chain"}, {"recognized", r.has_value()}};
      if (r) {
        j["prefix"] = r->spec.prefix;
        j["rights"] = r->spec.right_size;
        j["relabel"] = r->relabel;
      }
      std::cout << j.dump(2) << "\n";
    } else if (r) {
      std::cout << "chain=true\nprefix=";
      for (std::size_t i = 0; i < r->spec.prefix.size(); ++i)
        std::cout << (i ? " " : "") << r->spec.prefix[i];
      std::cout << "\nrights=" << r->spec.right_size << "\nrelabel=";
      for (std::size_t i = 0; i < r->relabel.size(); ++i)
        std::cout << (i ? " " : "") << r->relabel[i];
      std::cout << "\n";
    } else {
      std::cout << "chain=false\n";
    }
    return r ? 0 : 1;
  }
  throw UsageError("unknown family: " + o.family + " (expected threshold or chain)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive 3-proper edge colorings: every vertex triple of the result is joined "
               "by a properly colored tree",
               "px3"};
  app.require_subcommand(1);

  GenerateOpts go;
  CLI::App* gen = app.add_subcommand("generate", "emit a named graph family or a random sample");
  gen->add_option("--family", go.family,
                  "path|cycle|complete|complete_bipartite|wheel|star|threshold|chain|"
                  "shared_vertex_cliques|join_empty_clique|random_tree|random_connected|"
                  "random_min_degree|random_nontraceable")
      ->required();
  gen->add_option("--n", go.n, "order (samplers: target order)");
  gen->add_option("--a", go.a, "left side size (complete_bipartite)");
  gen->add_option("--b", go.b, "right side size (complete_bipartite)");
  gen->add_option("--p", go.p, "edge probability (random samplers)");
  gen->add_option("--delta", go.delta, "minimum degree (samplers)");
  gen->add_option("--sizes", go.sizes, "clique sizes, comma separated (shared_vertex_cliques)");
  gen->add_option("--r", go.r, "independent side size (join_empty_clique)");
  gen->add_option("--q", go.q, "clique size (join_empty_clique)");
  gen->add_option("--weights", go.weights, "vertex weights, comma separated (threshold)");
  gen->add_option("--cutoff", go.cutoff, "edge iff weight sum >= cutoff (threshold)");
  gen->add_option("--prefix", go.prefix, "left neighborhood sizes, comma separated (chain)");
  gen->add_option("--rights", go.rights, "right side size (chain)");
  gen->add_option("--seed", go.seed, "random seed")->capture_default_str();
  gen->add_option("--out", go.out, "output file (default stdout)");
  gen->add_option("--format", go.format, "output format")
      ->check(CLI::IsMember({"el", "g6", "json"}))
      ->capture_default_str();

  ColorOpts co;
  CLI::App* color = app.add_subcommand("color", "run a coloring strategy and verify the result");
  color->add_option("--in", co.in, "input graph file")->required();
  color->add_option("--format", co.format, "input format")
      ->check(CLI::IsMember({"auto", "el", "g6", "json"}));
  color->add_option("--strategy", co.strategy, "tree|traceable|contract|3way|3dom|ear")->required();
  color->add_option("--out", co.out, "write the coloring here (lines \"u v c\")");
  color->add_option("--dominating-set", co.dom, "auto, or a file of vertex ids (3way/3dom)")
      ->capture_default_str();
  color->add_option("--subgraph", co.subgraph, "file of inside vertex ids (contract)");
  color->add_option("--trace", co.trace, "write the full construction trace as JSON (3way)");
  color->add_option("--inner", co.inner, "inside-palette strategy: exact|tree|recursive")
      ->capture_default_str();
  color->add_flag("--json", co.json_out, "JSON summary on stdout");

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand("verify", "check a coloring triple by triple");
  verify->add_option("--in", vo.in, "input graph file")->required();
  verify->add_option("--format", vo.format, "input format")
      ->check(CLI::IsMember({"auto", "el", "g6", "json"}));
  verify->add_option("--coloring", vo.coloring, "coloring file (lines \"u v c\")")->required();
  verify->add_flag("--json", vo.json_out, "JSON report on stdout");

  ExactOpts eo;
  CLI::App* exact = app.add_subcommand("exact", "smallest working palette by exhaustive search");
  exact->add_option("--in", eo.in, "input graph file")->required();
  exact->add_option("--format", eo.format, "input format")
      ->check(CLI::IsMember({"auto", "el", "g6", "json"}));
  exact->add_option("--max-colors", eo.max_colors, "refuse beyond this palette")
      ->capture_default_str();
  exact->add_option("--max-edges", eo.max_edges, "refuse larger graphs")->capture_default_str();
  exact->add_option("--budget", eo.budget,
                    "work cap (canonical colorings); with --refute, sample count");
  exact->add_option("--refute", eo.refute, "only try to rule out this palette size");
  exact->add_option("--seed", eo.seed, "random seed (sampling refutation)")->capture_default_str();
  exact->add_option("--out", eo.out, "write the witness (or found counterexample) coloring here");
  exact->add_flag("--json", eo.json_out, "JSON report on stdout");

  DominateOpts dopt;
  CLI::App* dominate = app.add_subcommand("dominate", "find a certified dominating set");
  dominate->add_option("--in", dopt.in, "input graph file")->required();
  dominate->add_option("--format", dopt.format, "input format")
      ->check(CLI::IsMember({"auto", "el", "g6", "json"}));
  dominate->add_option("--kind", dopt.kind,
                       "3way (greedy connected) | 3dom (smallest with 3 inside neighbors each) | "
                       "min (smallest connected)")
      ->capture_default_str();
  dominate->add_flag("--connected", dopt.connected, "insist on a connected set");
  dominate->add_flag("--json", dopt.json_out, "JSON report on stdout");

  EarOpts ao;
  CLI::App* eardecomp = app.add_subcommand("eardecomp", "nonincreasing ear decomposition");
  eardecomp->add_option("--in", ao.in, "input graph file")->required();
  eardecomp->add_option("--format", ao.format, "input format")
      ->check(CLI::IsMember({"auto", "el", "g6", "json"}));
  eardecomp->add_option("--cap", ao.cap, "refuse graphs with more vertices")->capture_default_str();
  eardecomp->add_option("--out", ao.out, "output file (default stdout)");
  eardecomp->add_flag("--json", ao.json_out, "JSON output");

  RecognizeOpts ro;
  CLI::App* recognize = app.add_subcommand("recognize", "test family membership, with realization");
  recognize->add_option("--in", ro.in, "input graph file")->required();
  recognize->add_option("--format", ro.format, "input format")
      ->check(CLI::IsMember({"auto", "el", "g6", "json"}));
  recognize->add_option("--family", ro.family, "threshold|chain")->required();
  recognize->add_flag("--json", ro.json_out, "JSON report on stdout");

  CLI::App* suite = app.add_subcommand("suite", "run the acceptance battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(go);
    if (color->parsed()) return cmd_color(co);
    if (verify->parsed()) return cmd_verify(vo);
    if (exact->parsed()) return cmd_exact(eo);
    if (dominate->parsed()) return cmd_dominate(dopt);
    if (eardecomp->parsed()) return cmd_eardecomp(ao);
    if (recognize->parsed()) return cmd_recognize(ro);
    if (suite->parsed()) {
      std::vector<CriterionResult> results = run_acceptance();
      std::cout << render_acceptance_table(results);
      return all_passed(results) ? 0 : 1;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
