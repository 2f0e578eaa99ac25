#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "c5t/graph.hpp"

namespace c5t {

// Vertex counts are capped so a stray huge label cannot request a
// multi-gigabyte adjacency matrix.
inline constexpr int kMaxOrder = 20000;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}

  int line;
};

// labels[i] is the input name of vertex i. relabeled is false exactly when
// every label is its own index.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  bool relabeled = false;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline long long parse_index(std::string_view tok, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a nonnegative integer, got '" +
                               std::string(tok) + "'");
  return value;
}

}  // namespace detail

// Edge-list format: '#' starts a comment; blank lines are skipped; an
// optional first line "n <count>" fixes the order and demands 0-based
// integer endpoints. Without the header, all-numeric tokens are taken as
// 0-based indices (order = max index + 1); otherwise tokens are labels,
// numbered in order of first appearance.
inline LabeledGraph parse_edge_list(std::istream& in) {
  struct RawEdge {
    int line;
    std::string a, b;
  };
  std::vector<RawEdge> raw;
  bool header = false;
  long long header_n = -1;
  int line_number = 0;
  bool saw_content = false;

  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view sv = line;
    if (const auto hash = sv.find('#'); hash != std::string_view::npos)
      sv = sv.substr(0, hash);
    const auto tokens = detail::split_tokens(sv);
    if (tokens.empty()) continue;
    if (!saw_content && tokens.size() == 2 && tokens[0] == "n" &&
        detail::all_digits(tokens[1])) {
      header = true;
      header_n = detail::parse_index(tokens[1], line_number);
      if (header_n > kMaxOrder)
        throw ParseError(line_number,
                         "order " + std::to_string(header_n) + " exceeds the limit " +
                             std::to_string(kMaxOrder));
      saw_content = true;
      continue;
    }
    saw_content = true;
    if (tokens.size() != 2)
      throw ParseError(line_number, "expected 'u v', got " +
                                        std::to_string(tokens.size()) + " token(s)");
    raw.push_back(RawEdge{line_number, std::string(tokens[0]), std::string(tokens[1])});
  }

  const bool numeric = header || [&] {
    for (const RawEdge& e : raw)
      if (!detail::all_digits(e.a) || !detail::all_digits(e.b)) return false;
    return true;
  }();

  LabeledGraph out;
  if (numeric) {
    std::vector<std::pair<int, std::pair<long long, long long>>> edges;
    long long max_index = -1;
    edges.reserve(raw.size());
    for (const RawEdge& e : raw) {
      const long long a = detail::parse_index(e.a, e.line);
      const long long b = detail::parse_index(e.b, e.line);
      for (long long idx : {a, b}) {
        if (header && idx >= header_n)
          throw ParseError(e.line, "vertex " + std::to_string(idx) +
                                       " out of range [0, " +
                                       std::to_string(header_n) + ")");
        if (idx > kMaxOrder)
          throw ParseError(e.line, "vertex " + std::to_string(idx) +
                                       " exceeds the limit " +
                                       std::to_string(kMaxOrder));
      }
      if (a == b)
        throw ParseError(e.line, "loop edge " + std::to_string(a) + "-" +
                                     std::to_string(b));
      max_index = std::max({max_index, a, b});
      edges.push_back({e.line, {a, b}});
    }
    const int n = header ? static_cast<int>(header_n)
                         : static_cast<int>(max_index + 1);
    out.graph = Graph(n);
    for (const auto& [ln, uv] : edges)
      out.graph.add_edge(static_cast<VertexId>(uv.first),
                         static_cast<VertexId>(uv.second));
    out.labels.reserve(n);
    for (int i = 0; i < n; ++i) out.labels.push_back(std::to_string(i));
    out.relabeled = false;
  } else {
    std::unordered_map<std::string, VertexId> index;
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(raw.size());
    auto intern = [&](const std::string& label, int ln) {
      const auto [it, inserted] =
          index.emplace(label, static_cast<VertexId>(out.labels.size()));
      if (inserted) {
        if (static_cast<int>(out.labels.size()) >= kMaxOrder)
          throw ParseError(ln, "more than " + std::to_string(kMaxOrder) +
                                   " distinct vertices");
        out.labels.push_back(label);
      }
      return it->second;
    };
    for (const RawEdge& e : raw) {
      if (e.a == e.b)
        throw ParseError(e.line, "loop edge " + e.a + "-" + e.b);
      const VertexId u = intern(e.a, e.line);
      const VertexId v = intern(e.b, e.line);
      edges.push_back({u, v});
    }
    out.graph = Graph(static_cast<int>(out.labels.size()));
    for (const auto& [u, v] : edges) out.graph.add_edge(u, v);
    out.relabeled = true;
  }
  return out;
}

// Header plus one "u v" line per edge in ascending order; parsing the output
// reproduces the graph, isolated vertices included.
inline void serialize_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.order() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string s;
  if (n <= 62) {
    s += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    s += '~';
    s += static_cast<char>(63 + ((n >> 12) & 63));
    s += static_cast<char>(63 + ((n >> 6) & 63));
    s += static_cast<char>(63 + (n & 63));
  } else {
    throw std::invalid_argument("graph6 orders above 258047 are not supported");
  }
  int acc = 0, bits = 0;
  for (VertexId v = 1; v < n; ++v)
    for (VertexId u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        s += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  if (bits) s += static_cast<char>(63 + (acc << (6 - bits)));
  return s;
}

inline Graph graph6_decode(std::string_view s) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (s.substr(0, kPrefix.size()) == kPrefix) s = s.substr(kPrefix.size());
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  if (s[0] == ':' || s[0] == ';' || s[0] == '&')
    throw std::invalid_argument("sparse6/digraph6 headers are not supported");

  std::size_t i = 0;
  auto next = [&]() -> int {
    if (i >= s.size()) throw std::invalid_argument("graph6 string truncated");
    const unsigned char c = static_cast<unsigned char>(s[i++]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("invalid graph6 byte at position " +
                                  std::to_string(i - 1));
    return c - 63;
  };

  long long n = 0;
  const int first = next();
  if (first < 63) {
    n = first;
  } else {
    const int a = next();
    if (a == 63)
      throw std::invalid_argument("graph6 orders above 258047 are not supported");
    n = (static_cast<long long>(a) << 12) |
        (static_cast<long long>(next()) << 6) | next();
  }
  if (n > kMaxOrder)
    throw std::invalid_argument("order " + std::to_string(n) +
                                " exceeds the limit " + std::to_string(kMaxOrder));

  Graph g(static_cast<int>(n));
  int acc = 0, bits = 0;
  for (VertexId v = 1; v < n; ++v)
    for (VertexId u = 0; u < v; ++u) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) g.add_edge(u, v);
      --bits;
    }
  if (i != s.size())
    throw std::invalid_argument("trailing bytes after graph6 data");
  return g;
}

enum class GraphFormat { EdgeList, Graph6 };

inline GraphFormat format_from_id(const std::string& id) {
  if (id == "edge-list") return GraphFormat::EdgeList;
  if (id == "graph6") return GraphFormat::Graph6;
  throw std::invalid_argument("unknown format '" + id +
                              "' (expected edge-list or graph6)");
}

inline const char* format_id(GraphFormat f) {
  return f == GraphFormat::EdgeList ? "edge-list" : "graph6";
}

// A graph6 stream holds one graph on its first nonblank line.
inline LabeledGraph read_graph(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(in);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view sv = line;
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back())))
      sv.remove_suffix(1);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
      sv.remove_prefix(1);
    if (sv.empty()) continue;
    try {
      LabeledGraph out;
      out.graph = graph6_decode(sv);
      out.labels.reserve(out.graph.order());
      for (int i = 0; i < out.graph.order(); ++i)
        out.labels.push_back(std::to_string(i));
      return out;
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_number, e.what());
    }
  }
  throw ParseError(line_number > 0 ? line_number : 1, "no graph6 data found");
}

inline void write_graph(const Graph& g, std::ostream& out, GraphFormat format) {
  if (format == GraphFormat::EdgeList)
    serialize_edge_list(g, out);
  else
    out << graph6_encode(g) << "\n";
}

// FNV-1a, used to fingerprint raw input bytes in reports.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t value) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 15];
    value >>= 4;
  }
  return out;
}

}  // namespace c5t
