#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace c5t {

using VertexId = int;

// Undirected edge, stored normalized with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  if (a == b)
    throw std::invalid_argument("loop edge (" + std::to_string(a) + "," +
                                std::to_string(a) + ") not allowed");
  if (a > b) std::swap(a, b);
  return Edge{a, b};
}

// Vertex triple, stored sorted ascending.
struct Triangle {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;

  bool contains(VertexId x) const { return x == a || x == b || x == c; }
  std::array<Edge, 3> edges() const {
    return {Edge{a, b}, Edge{a, c}, Edge{b, c}};
  }
};

inline Triangle make_triangle(VertexId x, VertexId y, VertexId z) {
  std::array<VertexId, 3> s{x, y, z};
  std::sort(s.begin(), s.end());
  if (s[0] == s[1] || s[1] == s[2])
    throw std::invalid_argument("triangle vertices must be distinct");
  return Triangle{s[0], s[1], s[2]};
}

// Simple undirected graph on vertices 0..n-1. Adjacency is kept both as
// sorted neighbor lists and as 64-bit rows; the rows make common-neighbor
// scans cheap. No loops, no multi-edges; analysis code treats graphs as
// immutable, mutation happens only while building.
class Graph {
 public:
  Graph() : Graph(0) {}

  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be >= 0");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    adj_.resize(n);
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  int row_words() const { return words_; }

  const std::uint64_t* row(VertexId v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  // Idempotent; rejects loops and out-of-range endpoints.
  void add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("loop edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") not allowed");
    if (has_edge(u, v)) return;
    set_bit(u, v);
    set_bit(v, u);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++m_;
  }

  // No-op when the edge is absent.
  void remove_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !has_edge(u, v)) return;
    clear_bit(u, v);
    clear_bit(v, u);
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --m_;
  }

  const std::vector<VertexId>& neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  // All edges in ascending normalized order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v : adj_[u])
        if (v > u) out.push_back(Edge{u, v});
    return out;
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.bits_ == y.bits_;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range for order " + std::to_string(n_));
  }
  void set_bit(VertexId u, VertexId v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |=
        std::uint64_t{1} << (v & 63);
  }
  void clear_bit(VertexId u, VertexId v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &=
        ~(std::uint64_t{1} << (v & 63));
  }
  static void insert_sorted(std::vector<VertexId>& xs, VertexId v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
  }
  static void erase_sorted(std::vector<VertexId>& xs, VertexId v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it != xs.end() && *it == v) xs.erase(it);
  }

  int n_;
  int words_;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<VertexId>> adj_;
};

inline Graph from_edge_list(int n,
                            const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph with_edge(const Graph& g, VertexId u, VertexId v) {
  Graph h = g;
  h.add_edge(u, v);
  return h;
}

}  // namespace c5t
