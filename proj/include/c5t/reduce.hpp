#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "c5t/blocks.hpp"
#include "c5t/detect.hpp"
#include "c5t/graph.hpp"

namespace c5t {

class C5FoundError : public std::runtime_error {
 public:
  explicit C5FoundError(CycleWitness w)
      : std::runtime_error("input contains a 5-cycle: " + to_string(w)),
        witness(std::move(w)) {}

  CycleWitness witness;
};

struct ReductionStats {
  std::size_t triangles = 0;
  std::size_t g0_edges = 0;
  std::size_t stripped_edges = 0;
};

// g0 has one edge per triangle of the input; the map records which edge each
// triangle contributed.
struct ReductionResult {
  Graph g0;
  Graph stripped;
  std::vector<std::pair<Triangle, Edge>> assignment;  // sorted by triangle
  ReductionStats stats;
};

// Picks one edge from each triangle so that distinct triangles pick distinct
// edges: in a crown with base {a,b}, a < b, the triangle with apex c picks
// a-c; in a K4 on a < b < c < d the triangles abc, abd, acd, bcd pick ab,
// ad, ac, bc. The chosen edges form a C4-free, C5-free subgraph.
inline ReductionResult select_edges(const Graph& g) {
  if (auto w = find_c5(g)) throw C5FoundError(std::move(*w));

  ReductionResult r{Graph(g.order()), strip_nontriangle_edges(g), {}, {}};
  const BlockDecomposition d = decompose_blocks(r.stripped);

  r.assignment.reserve(d.triangle_count());
  for (const Block& blk : d.blocks) {
    if (const auto* crown = std::get_if<CrownBlock>(&blk.kind)) {
      for (VertexId c : crown->apexes)
        r.assignment.emplace_back(make_triangle(crown->base.u, crown->base.v, c),
                                  make_edge(crown->base.u, c));
    } else if (const auto* k4 = std::get_if<K4Block>(&blk.kind)) {
      const auto [a, b, c, e] = k4->vertices;
      r.assignment.emplace_back(make_triangle(a, b, c), make_edge(a, b));
      r.assignment.emplace_back(make_triangle(a, b, e), make_edge(a, e));
      r.assignment.emplace_back(make_triangle(a, c, e), make_edge(a, c));
      r.assignment.emplace_back(make_triangle(b, c, e), make_edge(b, c));
    } else {
      throw std::logic_error(
          "unclassifiable block in a C5-free graph (contract violation)");
    }
  }
  std::sort(r.assignment.begin(), r.assignment.end());

  for (const auto& [t, e] : r.assignment) {
    if (r.g0.has_edge(e.u, e.v))
      throw std::logic_error("edge selected by two triangles (contract violation)");
    r.g0.add_edge(e.u, e.v);
  }

  r.stats.triangles = d.triangle_count();
  r.stats.g0_edges = r.g0.edge_count();
  r.stats.stripped_edges = r.stripped.edge_count();

  if (r.stats.g0_edges != r.stats.triangles)
    throw std::logic_error("edge count of g0 differs from the triangle count");
  if (auto w = find_c4(r.g0))
    throw std::logic_error("g0 contains a 4-cycle: " + to_string(*w));
  if (auto w = find_c5(r.g0))
    throw std::logic_error("g0 contains a 5-cycle: " + to_string(*w));
  return r;
}

struct ReductionReport {
  bool subgraph_ok = false;   // g0 is a subgraph of the stripped input
  bool bijection_ok = false;  // triangles <-> selected edges, edge inside its triangle
  bool count_ok = false;      // |E(g0)| equals the triangle count
  bool c4_free = false;
  bool c5_free = false;

  bool pass() const {
    return subgraph_ok && bijection_ok && count_ok && c4_free && c5_free;
  }
};

// Re-derives every property of a reduction from scratch, trusting nothing in
// r beyond the data itself.
inline ReductionReport verify_reduction(const Graph& g, const ReductionResult& r) {
  ReductionReport rep;

  const Graph stripped = strip_nontriangle_edges(g);
  rep.subgraph_ok = r.g0.order() == g.order();
  if (rep.subgraph_ok)
    for (const Edge& e : r.g0.edges())
      if (!stripped.has_edge(e.u, e.v)) {
        rep.subgraph_ok = false;
        break;
      }

  const std::vector<Triangle> tris = enumerate_triangles(stripped);
  std::vector<Triangle> keys;
  std::vector<Edge> values;
  keys.reserve(r.assignment.size());
  values.reserve(r.assignment.size());
  bool edges_inside = true;
  for (const auto& [t, e] : r.assignment) {
    keys.push_back(t);
    values.push_back(e);
    if (!(t.contains(e.u) && t.contains(e.v))) edges_inside = false;
  }
  std::sort(keys.begin(), keys.end());
  std::sort(values.begin(), values.end());
  const bool keys_match = keys == tris;
  const bool values_distinct =
      std::adjacent_find(values.begin(), values.end()) == values.end();
  const bool values_match = values == r.g0.edges();
  rep.bijection_ok = keys_match && values_distinct && values_match && edges_inside;

  rep.count_ok = r.g0.edge_count() == tris.size();
  rep.c4_free = !find_c4(r.g0).has_value();
  rep.c5_free = !find_c5(r.g0).has_value();
  return rep;
}

}  // namespace c5t
