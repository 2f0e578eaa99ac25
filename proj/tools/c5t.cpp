#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "c5t/c5t.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace c5t;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct LoadedInput {
  LabeledGraph lg;
  std::string path;
  GraphFormat format = GraphFormat::EdgeList;
  std::uint64_t digest = 0;
};

LoadedInput load_input(const std::string& path, const std::string& format_id_str) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string raw = buf.str();

  LoadedInput li;
  li.path = path;
  li.format = format_from_id(format_id_str);
  li.digest = fnv1a64(raw);
  std::istringstream stream(raw);
  li.lg = read_graph(stream, li.format);
  return li;
}

json input_json(const LoadedInput& li) {
  return json{{"path", li.path},
              {"format", format_id(li.format)},
              {"digest", "fnv1a64:" + hex64(li.digest)},
              {"order", li.lg.graph.order()},
              {"edges", li.lg.graph.edge_count()},
              {"relabeled", li.lg.relabeled}};
}

json witness_json(const CycleWitness& w) { return json(w.vertices); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

json constants_json() {
  json out;
  for (BoundName b : all_bounds) out[bound_id(b)] = bound_value(b);
  return out;
}

json report_skeleton(const std::string& command) {
  json j;
  j["schema"] = "c5t/1";
  j["command"] = command;
  return j;
}

void finish_report(json& j, const Timer& timer) {
  j["runtime"] = json{{"elapsed_ms", timer.elapsed_ms()}};
  j["tool"] = json{{"name", "c5t"}, {"version", kVersion}};
  std::cout << j.dump(2) << "\n";
}

void write_graph_file(const Graph& g, const std::string& path, GraphFormat fmt) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  write_graph(g, out, fmt);
}

int effective_threads(int requested) {
  if (requested < 1) throw std::invalid_argument("threads must be >= 1");
  if (const char* env = std::getenv("C5T_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < requested) return cap;
    } catch (const std::exception&) {
      throw std::invalid_argument("C5T_THREADS must be a positive integer");
    }
  }
  return requested;
}

// ---- analyze ----------------------------------------------------------

int cmd_analyze(const LoadedInput& li, bool as_json, const Timer& timer) {
  const Graph& g = li.lg.graph;
  const auto tris = enumerate_triangles(g);
  const auto c4 = find_c4(g);
  const auto c5 = find_c5(g);
  const auto ring = girth(g);
  const auto decomposition = decompose_blocks(g);
  int crown = 0, k4 = 0, invalid = 0;
  for (const Block& b : decomposition.blocks) {
    if (std::holds_alternative<CrownBlock>(b.kind))
      ++crown;
    else if (std::holds_alternative<K4Block>(b.kind))
      ++k4;
    else
      ++invalid;
  }
  const BoundReport bounds = make_bound_report(g);

  if (as_json) {
    json j = report_skeleton("analyze");
    j["input"] = input_json(li);
    json result;
    result["triangles"] = tris.size();
    result["c4"] = c4 ? json{{"free", false}, {"witness", witness_json(*c4)}}
                      : json{{"free", true}};
    result["c5"] = c5 ? json{{"free", false}, {"witness", witness_json(*c5)}}
                      : json{{"free", true}};
    result["girth"] = ring ? json(*ring) : json(nullptr);
    result["blocks"] = json{{"total", decomposition.blocks.size()},
                            {"crown", crown},
                            {"k4", k4},
                            {"invalid", invalid}};
    json bj;
    bj["ratio"] = bounds.ratio ? json(*bounds.ratio) : json(nullptr);
    bj["constants"] = constants_json();
    bj["note"] = kAsymptoticNote;
    result["bounds"] = bj;
    j["result"] = result;
    finish_report(j, timer);
  } else {
    std::cout << "order: " << g.order() << "\n";
    std::cout << "edges: " << g.edge_count() << "\n";
    std::cout << "triangles: " << tris.size() << "\n";
    std::cout << "c4: " << (c4 ? "witness " + to_string(*c4) : "free") << "\n";
    std::cout << "c5: " << (c5 ? "witness " + to_string(*c5) : "free") << "\n";
    if (ring)
      std::cout << "girth: " << *ring << "\n";
    else
      std::cout << "girth: none (acyclic)\n";
    std::cout << "blocks: " << decomposition.blocks.size() << " (crown " << crown
              << ", k4 " << k4 << ", invalid " << invalid << ")\n";
    if (bounds.ratio)
      std::cout << "triangle ratio t/n^1.5: " << *bounds.ratio << "  ["
                << kAsymptoticNote << "]\n";
  }
  return 0;
}

// ---- reduce -----------------------------------------------------------

int cmd_reduce(const LoadedInput& li, const std::string& out_path, bool as_json,
               const Timer& timer) {
  const Graph& g = li.lg.graph;
  const ReductionResult r = select_edges(g);  // throws C5FoundError on a C5
  const ReductionReport rep = verify_reduction(g, r);
  const auto g0_girth = girth(r.g0);

  if (!out_path.empty()) write_graph_file(r.g0, out_path, li.format);

  if (as_json) {
    json j = report_skeleton("reduce");
    j["input"] = input_json(li);
    json result;
    result["stripped_edges"] = r.stats.stripped_edges;
    result["triangles"] = r.stats.triangles;
    result["g0_edges"] = r.stats.g0_edges;
    result["g0_girth"] = g0_girth ? json(*g0_girth) : json(nullptr);
    if (!out_path.empty())
      result["g0"] = json{{"path", out_path}, {"format", format_id(li.format)}};
    else
      result["g0"] = json{{"edges", edges_json(r.g0.edges())}};
    result["verification"] = json{{"subgraph", rep.subgraph_ok},
                                  {"bijection", rep.bijection_ok},
                                  {"count", rep.count_ok},
                                  {"c4_free", rep.c4_free},
                                  {"c5_free", rep.c5_free},
                                  {"pass", rep.pass()}};
    j["result"] = result;
    finish_report(j, timer);
  } else {
    std::cout << "triangles: " << r.stats.triangles << "\n";
    std::cout << "g0 edges: " << r.stats.g0_edges << "\n";
    if (g0_girth)
      std::cout << "g0 girth: " << *g0_girth << "\n";
    else
      std::cout << "g0 girth: none (acyclic)\n";
    std::cout << "verification: " << (rep.pass() ? "pass" : "FAIL") << "\n";
    if (!out_path.empty()) std::cout << "g0 written to " << out_path << "\n";
  }
  return rep.pass() ? 0 : 3;
}

// ---- construct --------------------------------------------------------

struct ConstructResult {
  Graph graph;
  json params;
};

int emit_construct(const ConstructResult& built, const std::string& out_path,
                   const std::string& format_id_str, bool as_json,
                   const Timer& timer) {
  const Graph& g = built.graph;
  const GraphFormat fmt = format_from_id(format_id_str);
  const std::size_t t = count_triangles(g);
  const auto c5 = find_c5(g);
  if (c5)
    throw std::logic_error("constructed graph contains a 5-cycle: " +
                           to_string(*c5));
  const auto ring = girth(g);

  if (!out_path.empty()) write_graph_file(g, out_path, fmt);

  if (as_json) {
    json j = report_skeleton("construct");
    j["params"] = built.params;
    json result;
    result["order"] = g.order();
    result["edges"] = g.edge_count();
    result["triangles"] = t;
    result["girth"] = ring ? json(*ring) : json(nullptr);
    result["c5_free"] = true;
    if (!out_path.empty())
      result["output"] = json{{"path", out_path}, {"format", format_id(fmt)}};
    else
      result["graph"] = json{{"edges", edges_json(g.edges())}};
    j["result"] = result;
    finish_report(j, timer);
  } else {
    std::cout << "n=" << g.order() << " m=" << g.edge_count() << " t=" << t
              << "\n";
    if (out_path.empty()) {
      write_graph(g, std::cout, fmt);
    }
  }
  return 0;
}

// ---- search -----------------------------------------------------------

json record_json(const SearchRecord& rec) {
  json j;
  j["n"] = rec.n;
  j["max_triangles"] = rec.max_triangles;
  j["witness"] = edges_json(rec.witness);
  j["nodes_explored"] = rec.nodes_explored;
  return j;
}

// Merge-by-order persistence: a record already in the file wins if its core
// fields match the fresh one, so re-running never rewrites settled lines.
void persist_table(const std::vector<SearchRecord>& records,
                   const std::string& path) {
  std::map<int, std::string> lines;
  {
    std::ifstream in(path, std::ios::binary);
    std::string line;
    int line_number = 0;
    while (in && std::getline(in, line)) {
      ++line_number;
      if (line.empty()) continue;
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("existing table " + path + " line " +
                                    std::to_string(line_number) +
                                    " is not a search record");
      lines[j["n"].get<int>()] = line;
    }
  }
  for (const SearchRecord& rec : records) {
    const std::string fresh = record_json(rec).dump();
    auto it = lines.find(rec.n);
    if (it == lines.end() || it->second != fresh) lines[rec.n] = fresh;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open table file '" + path + "'");
  for (const auto& [n, line] : lines) out << line << "\n";
}

int cmd_search(std::optional<int> single, std::optional<std::pair<int, int>> range,
               const SearchOptions& opts, const std::string& out_path,
               bool as_json, const Timer& timer) {
  if (single.has_value() == range.has_value())
    throw std::invalid_argument("need exactly one of --n or --range");
  const int lo = single ? *single : range->first;
  const int hi = single ? *single : range->second;
  const auto records = search_table(lo, hi, opts);

  if (!out_path.empty()) persist_table(records, out_path);

  if (as_json) {
    json j = report_skeleton("search");
    j["params"] = json{{"lo", lo},
                       {"hi", hi},
                       {"cap", opts.cap},
                       {"threads", opts.threads},
                       {"bound_pruning", opts.bound_pruning}};
    json rows = json::array();
    for (const SearchRecord& rec : records) rows.push_back(record_json(rec));
    j["result"] = json{{"records", rows}};
    if (!out_path.empty()) j["result"]["table"] = out_path;
    finish_report(j, timer);
  } else {
    for (const SearchRecord& rec : records) {
      std::cout << "n=" << rec.n << " max=" << rec.max_triangles
                << " nodes=" << rec.nodes_explored << " witness:";
      for (const Edge& e : rec.witness) std::cout << " " << e.u << "-" << e.v;
      std::cout << "\n";
    }
    if (!out_path.empty()) std::cout << "table written to " << out_path << "\n";
  }
  return 0;
}

// ---- bounds -----------------------------------------------------------

int cmd_bounds(const std::optional<LoadedInput>& li, std::optional<int> at_n,
               bool as_json, const Timer& timer) {
  if (as_json) {
    json j = report_skeleton("bounds");
    if (li) j["input"] = input_json(*li);
    if (at_n) j["params"] = json{{"n", *at_n}};
    json result;
    result["constants"] = constants_json();
    result["note"] = kAsymptoticNote;
    if (at_n) {
      json eval;
      eval["n"] = *at_n;
      for (BoundName b : all_bounds) eval[bound_id(b)] = eval_bound(*at_n, b);
      result["eval"] = eval;
    }
    if (li) {
      const BoundReport rep = make_bound_report(li->lg.graph);
      result["report"] = json{
          {"n", rep.n},
          {"triangles", rep.triangles},
          {"ratio", rep.ratio ? json(*rep.ratio) : json(nullptr)}};
    }
    j["result"] = result;
    finish_report(j, timer);
  } else {
    std::cout << "constants  [" << kAsymptoticNote << "]\n";
    for (BoundName b : all_bounds)
      std::cout << "  " << bound_id(b) << " = " << bound_value(b) << "\n";
    if (at_n) {
      std::cout << "c * n^1.5 at n=" << *at_n << "\n";
      for (BoundName b : all_bounds)
        std::cout << "  " << bound_id(b) << " = " << eval_bound(*at_n, b)
                  << "\n";
    }
    if (li) {
      const BoundReport rep = make_bound_report(li->lg.graph);
      std::cout << "graph: n=" << rep.n << " triangles=" << rep.triangles;
      if (rep.ratio)
        std::cout << " ratio=" << *rep.ratio;
      else
        std::cout << " ratio=undefined";
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout.precision(17);

  CLI::App app{"triangle block structure toolkit for C5-free graphs"};
  app.require_subcommand(1);

  std::string input_path, format_str = "edge-list", out_path, named_name;
  bool as_json = false;
  int pp_q = 0, bg_q = 0;
  std::string bg_side = "B";
  std::optional<int> search_n, bounds_n;
  std::vector<int> search_range;
  SearchOptions search_opts;
  bool no_prune = false;

  auto* analyze = app.add_subcommand("analyze", "triangles, cycles, blocks");
  analyze->add_option("input", input_path, "graph file")->required();
  analyze->add_option("--format", format_str, "edge-list or graph6");
  analyze->add_flag("--json", as_json, "JSON report");

  auto* reduce = app.add_subcommand("reduce", "select one edge per triangle");
  reduce->add_option("input", input_path, "graph file")->required();
  reduce->add_option("--out", out_path, "write g0 here");
  reduce->add_option("--format", format_str, "edge-list or graph6");
  reduce->add_flag("--json", as_json, "JSON report");

  auto* construct = app.add_subcommand("construct", "generate fixture graphs");
  construct->require_subcommand(1);
  construct->add_option("--out", out_path, "write the graph here");
  construct->add_option("--format", format_str, "edge-list or graph6");
  construct->add_flag("--json", as_json, "JSON report");
  auto* pp = construct->add_subcommand("pp", "projective plane incidence graph");
  pp->fallthrough();
  pp->add_option("--q", pp_q, "plane order (prime)")->required();
  auto* bg = construct->add_subcommand("bg", "doubled incidence graph");
  bg->fallthrough();
  bg->add_option("--q", bg_q, "plane order (prime)")->required();
  bg->add_option("--side", bg_side, "color class to double: A or B");
  auto* named = construct->add_subcommand("named", "named family");
  named->fallthrough();
  named->add_option("--name", named_name, "e.g. 'book 3', 'complete 4'")
      ->required();

  auto* search = app.add_subcommand("search", "exact maxima for small orders");
  auto* opt_n = search->add_option("--n", search_n, "single order");
  search->add_option("--range", search_range, "orders lo..hi")
      ->expected(2)
      ->excludes(opt_n);
  search->add_option("--cap", search_opts.cap, "largest accepted order");
  search->add_option("--threads", search_opts.threads, "parallel width");
  search->add_flag("--no-prune", no_prune, "disable bound pruning");
  search->add_option("--out", out_path, "JSON-lines table file");
  search->add_flag("--json", as_json, "JSON report");

  auto* bounds = app.add_subcommand("bounds", "published constants and ratios");
  bounds->add_option("input", input_path, "graph file (optional)");
  bounds->add_option("--n", bounds_n, "evaluate c*n^1.5 here");
  bounds->add_option("--format", format_str, "edge-list or graph6");
  bounds->add_flag("--json", as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Timer timer;
  try {
    if (*analyze) return cmd_analyze(load_input(input_path, format_str), as_json, timer);
    if (*reduce)
      return cmd_reduce(load_input(input_path, format_str), out_path, as_json,
                        timer);
    if (*construct) {
      ConstructResult built;
      if (*pp) {
        built = {projective_plane_incidence(pp_q).graph,
                 json{{"kind", "pp"}, {"q", pp_q}}};
      } else if (*bg) {
        if (bg_side != "A" && bg_side != "B")
          throw std::invalid_argument("--side must be A or B");
        const Side side = bg_side == "A" ? Side::A : Side::B;
        built = {bg_double(projective_plane_incidence(bg_q), side),
                 json{{"kind", "bg"}, {"q", bg_q}, {"side", bg_side}}};
      } else {
        built = {named_graph(named_name),
                 json{{"kind", "named"}, {"name", named_name}}};
      }
      return emit_construct(built, out_path, format_str, as_json, timer);
    }
    if (*search) {
      search_opts.threads = effective_threads(search_opts.threads);
      search_opts.bound_pruning = !no_prune;
      std::optional<std::pair<int, int>> range;
      if (search_range.size() == 2)
        range = std::pair{search_range[0], search_range[1]};
      return cmd_search(search_n, range, search_opts, out_path, as_json, timer);
    }
    if (*bounds) {
      std::optional<LoadedInput> li;
      if (!input_path.empty()) li = load_input(input_path, format_str);
      return cmd_bounds(li, bounds_n, as_json, timer);
    }
  } catch (const C5FoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;  // unreachable: a subcommand was required
}
