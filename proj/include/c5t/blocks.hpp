#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "c5t/detect.hpp"
#include "c5t/graph.hpp"

namespace c5t {

// A crown: k >= 1 triangles through one shared base edge.
struct CrownBlock {
  Edge base;
  std::vector<VertexId> apexes;  // ascending
};

// The four triangles of a complete graph on four vertices.
struct K4Block {
  std::array<VertexId, 4> vertices;  // ascending
};

// Neither shape fits; only possible when the host graph contains a C5.
struct InvalidBlock {
  std::string reason;
  std::optional<CycleWitness> c5_witness;
};

using BlockKind = std::variant<CrownBlock, K4Block, InvalidBlock>;

struct Block {
  int id = 0;
  std::vector<Triangle> triangles;  // lexicographically sorted
  BlockKind kind;
  std::vector<Edge> edge_set;  // sorted union of the triangles' edges
};

// Every triangle belongs to exactly one block; distinct blocks are
// edge-disjoint (checked on construction).
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::map<Triangle, int> assignment;

  std::size_t triangle_count() const { return assignment.size(); }
};

// Keeps exactly the edges of g that lie in at least one triangle. A single
// pass suffices: removing an edge in no triangle destroys no triangle.
inline Graph strip_nontriangle_edges(const Graph& g) {
  Graph out(g.order());
  const int words = g.row_words();
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v : g.neighbors(u))
      if (v > u && detail::count_common(g.row(u), g.row(v), words) > 0)
        out.add_edge(u, v);
  return out;
}

// Classifies one block of g. The K4 condition is checked before the crown
// condition; for a single triangle the lexicographically smallest edge is
// the base.
inline BlockKind classify_block(const std::vector<Triangle>& triangles,
                                const Graph& g) {
  if (triangles.empty())
    throw std::invalid_argument("classify_block: empty triangle list");

  std::set<VertexId> vertex_set;
  for (const Triangle& t : triangles) {
    vertex_set.insert(t.a);
    vertex_set.insert(t.b);
    vertex_set.insert(t.c);
  }

  if (vertex_set.size() == 4) {
    std::array<VertexId, 4> vs{};
    std::copy(vertex_set.begin(), vertex_set.end(), vs.begin());
    bool complete = true;
    for (int i = 0; i < 4 && complete; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!g.has_edge(vs[i], vs[j])) {
          complete = false;
          break;
        }
    if (complete) return K4Block{vs};
  }

  if (triangles.size() == 1) {
    const Triangle& t = triangles.front();
    return CrownBlock{Edge{t.a, t.b}, {t.c}};
  }

  // Two distinct triangles share at most one edge, so at most one candidate
  // base survives.
  for (const Edge& base : triangles.front().edges()) {
    bool shared = true;
    for (const Triangle& t : triangles)
      if (!(t.contains(base.u) && t.contains(base.v))) {
        shared = false;
        break;
      }
    if (!shared) continue;
    std::vector<VertexId> apexes;
    apexes.reserve(triangles.size());
    for (const Triangle& t : triangles) {
      VertexId apex = t.a;
      if (apex == base.u || apex == base.v) apex = t.b;
      if (apex == base.u || apex == base.v) apex = t.c;
      apexes.push_back(apex);
    }
    std::sort(apexes.begin(), apexes.end());
    return CrownBlock{base, std::move(apexes)};
  }

  std::string reason = "block is neither a crown nor a K4";
  std::optional<CycleWitness> witness = find_c5(g);
  if (witness) {
    bool inside = true;
    for (VertexId v : witness->vertices)
      if (!vertex_set.count(v)) inside = false;
    reason += inside ? "; C5 witness lies within the block"
                     : "; C5 witness found elsewhere in the graph";
  } else {
    reason += "; no C5 witness found in the graph";
  }
  return InvalidBlock{std::move(reason), std::move(witness)};
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace detail

// Partitions all triangles of g into blocks: union-find over triangles,
// merging whenever two triangles share an edge. Blocks are numbered by their
// lexicographically smallest triangle.
inline BlockDecomposition decompose_blocks(const Graph& g) {
  const std::vector<Triangle> tris = enumerate_triangles(g);
  detail::UnionFind uf(tris.size());
  std::map<Edge, int> edge_owner;
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (const Edge& e : tris[i].edges()) {
      auto [it, inserted] = edge_owner.emplace(e, static_cast<int>(i));
      if (!inserted) uf.unite(it->second, static_cast<int>(i));
    }

  std::map<int, std::vector<int>> groups;  // root -> triangle indices, ascending
  for (std::size_t i = 0; i < tris.size(); ++i)
    groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

  std::vector<const std::vector<int>*> ordered;
  ordered.reserve(groups.size());
  for (const auto& [root, members] : groups) ordered.push_back(&members);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* x, const auto* y) { return x->front() < y->front(); });

  BlockDecomposition d;
  d.blocks.reserve(ordered.size());
  for (const auto* members : ordered) {
    Block b;
    b.id = static_cast<int>(d.blocks.size());
    b.triangles.reserve(members->size());
    for (int i : *members) {
      b.triangles.push_back(tris[i]);
      d.assignment.emplace(tris[i], b.id);
      for (const Edge& e : tris[i].edges()) b.edge_set.push_back(e);
    }
    std::sort(b.edge_set.begin(), b.edge_set.end());
    b.edge_set.erase(std::unique(b.edge_set.begin(), b.edge_set.end()),
                     b.edge_set.end());
    b.kind = classify_block(b.triangles, g);
    d.blocks.push_back(std::move(b));
  }

  // decomposition invariants: total assignment, pairwise edge-disjointness
  if (d.assignment.size() != tris.size())
    throw std::logic_error("block decomposition does not partition the triangles");
  std::map<Edge, int> seen;
  for (const Block& b : d.blocks)
    for (const Edge& e : b.edge_set) {
      auto [it, inserted] = seen.emplace(e, b.id);
      if (!inserted && it->second != b.id)
        throw std::logic_error("blocks are not edge-disjoint");
    }
  return d;
}

struct Claim1Report {
  bool precondition_ok = false;  // input is C5-free
  std::optional<CycleWitness> c5_witness;
  int crown_blocks = 0;
  int k4_blocks = 0;
  int invalid_blocks = 0;
  bool pass = false;
};

// Every block of a C5-free graph is a crown or a K4.
inline Claim1Report check_claim1(const Graph& g) {
  Claim1Report r;
  r.c5_witness = find_c5(g);
  r.precondition_ok = !r.c5_witness.has_value();
  if (!r.precondition_ok) return r;
  for (const Block& b : decompose_blocks(g).blocks) {
    if (std::holds_alternative<CrownBlock>(b.kind))
      ++r.crown_blocks;
    else if (std::holds_alternative<K4Block>(b.kind))
      ++r.k4_blocks;
    else
      ++r.invalid_blocks;
  }
  r.pass = r.invalid_blocks == 0;
  return r;
}

struct Claim2Report {
  bool c5_free = false;
  std::optional<CycleWitness> c5_witness;
  bool stripped = false;  // every edge lies in a triangle
  std::vector<Edge> untriangled_edges;
  long long c4_count = 0;
  std::vector<CycleWitness> violations;  // C4s whose edges span several blocks
  bool pass = false;
};

// The four edges of any C4 of a stripped C5-free graph lie inside a single
// block. C4s are enumerated once each via the diagonal pair that contains
// the smallest vertex of the cycle.
inline Claim2Report check_claim2(const Graph& g) {
  Claim2Report r;
  r.c5_witness = find_c5(g);
  r.c5_free = !r.c5_witness.has_value();
  const int words = g.row_words();
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v : g.neighbors(u))
      if (v > u && detail::count_common(g.row(u), g.row(v), words) == 0)
        r.untriangled_edges.push_back(Edge{u, v});
  r.stripped = r.untriangled_edges.empty();
  if (!r.c5_free || !r.stripped) return r;

  const BlockDecomposition d = decompose_blocks(g);
  std::map<Edge, int> edge_block;
  for (const Block& b : d.blocks)
    for (const Edge& e : b.edge_set) edge_block.emplace(e, b.id);

  std::vector<VertexId> common;
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      common.clear();
      detail::for_each_common(g.row(u), g.row(v), words,
                              [&](int w) { common.push_back(w); });
      for (std::size_t i = 0; i < common.size(); ++i) {
        if (common[i] < u) continue;  // counted at the other diagonal
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          ++r.c4_count;
          const VertexId x = common[i], y = common[j];
          const Edge cycle_edges[4] = {make_edge(u, x), make_edge(x, v),
                                       make_edge(v, y), make_edge(y, u)};
          int block = -1;
          bool same = true;
          for (const Edge& e : cycle_edges) {
            auto it = edge_block.find(e);
            if (it == edge_block.end()) {
              same = false;  // cannot happen on a stripped graph
              break;
            }
            if (block < 0)
              block = it->second;
            else if (it->second != block)
              same = false;
          }
          if (!same) r.violations.push_back(CycleWitness{{u, x, v, y}});
        }
      }
    }
  }
  r.pass = r.violations.empty();
  return r;
}

}  // namespace c5t
