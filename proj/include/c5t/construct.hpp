#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "c5t/detect.hpp"
#include "c5t/graph.hpp"

namespace c5t {

enum class Side { A, B };

struct BipartiteGraph {
  Graph graph;
  std::vector<Side> side;  // one entry per vertex; every edge crosses
};

inline BipartiteGraph make_bipartite(Graph g, std::vector<Side> side) {
  if (static_cast<int>(side.size()) != g.order())
    throw std::invalid_argument("side vector does not match the graph order");
  for (const Edge& e : g.edges())
    if (side[e.u] == side[e.v])
      throw std::invalid_argument("edge inside one side: " + std::to_string(e.u) +
                                  "-" + std::to_string(e.v));
  return BipartiteGraph{std::move(g), std::move(side)};
}

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Point-line incidence graph of the projective plane over F_q (q prime).
// Points and lines both run over the canonical homogeneous coordinates
// (1,y,z), (0,1,z), (0,0,1); point i and line j are adjacent when their dot
// product vanishes mod q. Vertices 0..N-1 are points, N..2N-1 lines,
// N = q^2+q+1. The graph is (q+1)-regular with girth 6.
inline BipartiteGraph projective_plane_incidence(int q) {
  if (!is_prime(q))
    throw std::invalid_argument("projective plane order must be prime, got " +
                                std::to_string(q));
  std::vector<std::array<int, 3>> reps;
  reps.reserve(q * q + q + 1);
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) reps.push_back({1, y, z});
  for (int z = 0; z < q; ++z) reps.push_back({0, 1, z});
  reps.push_back({0, 0, 1});

  const int N = static_cast<int>(reps.size());
  Graph g(2 * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int dot = 0;
      for (int k = 0; k < 3; ++k) dot += reps[i][k] * reps[j][k];
      if (dot % q == 0) g.add_edge(i, N + j);
    }
  std::vector<Side> side(2 * N, Side::B);
  std::fill(side.begin(), side.begin() + N, Side::A);
  return BipartiteGraph{std::move(g), std::move(side)};
}

// Doubles one color class of a bipartite graph: each vertex b on the chosen
// side gets a twin b' adjacent to b and to every neighbor of b. Twins are
// appended after the original vertices in ascending order of b. Every edge
// a-b and the new edge b-b' lie in exactly one triangle a-b-b', so the
// result has one triangle per original edge and is C5-free.
inline Graph bg_double(const BipartiteGraph& bg, Side doubled = Side::B) {
  const int n = bg.graph.order();
  std::vector<VertexId> twin(n, -1);
  int extra = 0;
  for (VertexId v = 0; v < n; ++v)
    if (bg.side[v] == doubled) twin[v] = n + extra++;

  Graph out(n + extra);
  for (const Edge& e : bg.graph.edges()) {
    out.add_edge(e.u, e.v);
    const VertexId b = bg.side[e.u] == doubled ? e.u : e.v;
    const VertexId a = b == e.u ? e.v : e.u;
    out.add_edge(a, twin[b]);
  }
  for (VertexId v = 0; v < n; ++v)
    if (twin[v] >= 0) out.add_edge(v, twin[v]);
  return out;
}

inline Graph complete_graph(int k) {
  if (k < 0) throw std::invalid_argument("complete graph order must be >= 0");
  Graph g(k);
  for (VertexId u = 0; u < k; ++u)
    for (VertexId v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle length must be >= 3");
  Graph g(k);
  for (VertexId v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

inline Graph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path order must be >= 1");
  Graph g(k);
  for (VertexId v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

// k triangles sharing the base edge 0-1; apexes are 2..k+1.
inline Graph book_graph(int k) {
  if (k < 1) throw std::invalid_argument("book size must be >= 1");
  Graph g(k + 2);
  g.add_edge(0, 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(0, 2 + i);
    g.add_edge(1, 2 + i);
  }
  return g;
}

// k triangles sharing only the center vertex 0.
inline Graph friendship_graph(int k) {
  if (k < 1) throw std::invalid_argument("friendship size must be >= 1");
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(0, 1 + 2 * i);
    g.add_edge(0, 2 + 2 * i);
    g.add_edge(1 + 2 * i, 2 + 2 * i);
  }
  return g;
}

// Parses "family k", e.g. "complete 4", "cycle 6", "book 3", "friendship 2",
// "path 5".
inline Graph named_graph(const std::string& name) {
  std::istringstream in(name);
  std::string family;
  long long k = 0;
  std::string rest;
  if (!(in >> family >> k) || (in >> rest))
    throw std::invalid_argument("expected '<family> <size>', got '" + name + "'");
  if (k < 0 || k > 100000)
    throw std::invalid_argument("size out of range: " + std::to_string(k));
  const int size = static_cast<int>(k);
  if (family == "complete") return complete_graph(size);
  if (family == "cycle") return cycle_graph(size);
  if (family == "path") return path_graph(size);
  if (family == "book") return book_graph(size);
  if (family == "friendship") return friendship_graph(size);
  throw std::invalid_argument("unknown graph family '" + family + "'");
}

// G(n, p) followed by a deterministic repair loop: while a C5 remains, delete
// one of its five edges, chosen by the next draw from the same generator.
// Identical (n, p, seed) always yields the identical graph.
inline Graph random_c5_free(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("order must be >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  Graph g(n);
  if (p > 0.0) {
    const bool always = p >= 1.0;
    // p * 2^64, computed in extended precision so the threshold is exact for
    // representable p
    const auto threshold = static_cast<std::uint64_t>(
        static_cast<long double>(p) * 18446744073709551616.0L);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) {
        const std::uint64_t draw = rng();
        if (always || draw < threshold) g.add_edge(u, v);
      }
  }
  while (auto w = find_c5(g)) {
    const int k = static_cast<int>(rng() % 5);
    g.remove_edge(w->vertices[k], w->vertices[(k + 1) % 5]);
  }
  return g;
}

}  // namespace c5t
