#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c5t/graph.hpp"

namespace c5t {

// An explicit cycle: consecutive vertices (cyclically) are adjacent in the
// witnessed graph, all vertices distinct.
struct CycleWitness {
  std::vector<VertexId> vertices;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

inline bool is_valid_cycle(const Graph& g, const CycleWitness& w) {
  const auto& vs = w.vertices;
  if (vs.size() < 3) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

inline std::string to_string(const CycleWitness& w) {
  std::string s;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.vertices[i]);
  }
  return s;
}

namespace detail {

// Calls f(w) for every set bit w of rowA & rowB, ascending.
template <typename F>
void for_each_common(const std::uint64_t* a, const std::uint64_t* b, int words,
                     F&& f) {
  for (int i = 0; i < words; ++i) {
    std::uint64_t m = a[i] & b[i];
    while (m) {
      int bit = std::countr_zero(m);
      f(i * 64 + bit);
      m &= m - 1;
    }
  }
}

inline int count_common(const std::uint64_t* a, const std::uint64_t* b,
                        int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace detail

// All triangles, each listed once, sorted lexicographically.
inline std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  const int words = g.row_words();
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      detail::for_each_common(g.row(u), g.row(v), words, [&](int w) {
        if (w > v) out.push_back(Triangle{u, v, w});
      });
    }
  }
  return out;
}

inline std::size_t count_triangles(const Graph& g) {
  std::size_t t = 0;
  const int words = g.row_words();
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v : g.neighbors(u))
      if (v > u)
        detail::for_each_common(g.row(u), g.row(v), words, [&](int w) {
          if (w > v) ++t;
        });
  return t;
}

// A C4 exists iff some vertex pair has two common neighbors. Scans pairs in
// ascending order and takes the two smallest common neighbors, so the
// returned witness is reproducible.
inline std::optional<CycleWitness> find_c4(const Graph& g) {
  const int words = g.row_words();
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      VertexId x = -1;
      for (int i = 0; i < words; ++i) {
        std::uint64_t m = g.row(u)[i] & g.row(v)[i];
        while (m) {
          int w = i * 64 + std::countr_zero(m);
          m &= m - 1;
          if (x < 0)
            x = w;
          else
            return CycleWitness{{u, x, v, w}};
        }
      }
    }
  }
  return std::nullopt;
}

// For each edge (a,b) in ascending order, searches a path b-c-d-e of length 3
// avoiding repeats with e adjacent to a. First hit wins, so the witness is
// deterministic for a fixed graph.
inline std::optional<CycleWitness> find_c5(const Graph& g) {
  const int words = g.row_words();
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b : g.neighbors(a)) {
      if (b <= a) continue;
      for (VertexId c : g.neighbors(b)) {
        if (c == a) continue;
        for (VertexId d : g.neighbors(c)) {
          if (d == a || d == b) continue;
          std::optional<VertexId> e;
          detail::for_each_common(g.row(d), g.row(a), words, [&](int w) {
            if (!e && w != b && w != c) e = w;
          });
          if (e) return CycleWitness{{a, b, c, d, *e}};
        }
      }
    }
  }
  return std::nullopt;
}

// Length of a shortest cycle, absent for forests. BFS from every root; a
// non-tree edge (u,w) closes a cycle of length at most dist[u]+dist[w]+1,
// and the minimum over all roots is exact.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n), queue(n);
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    int head = 0, tail = 0;
    dist[root] = 0;
    queue[tail++] = root;
    while (head < tail) {
      VertexId u = queue[head++];
      if (best > 0 && 2 * dist[u] + 1 >= best) continue;
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
    if (best == 3) break;
  }
  if (best < 0) return std::nullopt;
  return best;
}

// True iff g + (u,v) would contain a C5, i.e. there is a simple path of
// length 4 from u to v in g. The edge must be absent.
inline bool creates_c5(const Graph& g, VertexId u, VertexId v) {
  if (g.has_edge(u, v))
    throw std::invalid_argument("creates_c5 expects the edge to be absent");
  if (u == v)
    throw std::invalid_argument("creates_c5 expects distinct endpoints");
  const int words = g.row_words();
  for (VertexId a : g.neighbors(u)) {
    if (a == v) continue;
    for (VertexId b : g.neighbors(a)) {
      if (b == u || b == v) continue;
      bool found = false;
      detail::for_each_common(g.row(b), g.row(v), words, [&](int c) {
        if (c != u && c != a) found = true;
      });
      if (found) return true;
    }
  }
  return false;
}

}  // namespace c5t
