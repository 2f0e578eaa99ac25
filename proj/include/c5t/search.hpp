#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "c5t/graph.hpp"

namespace c5t {

// threads > 1 changes nodes_explored between runs but never the maximum or
// the witness; the default is fully deterministic.
struct SearchOptions {
  int cap = 8;  // refuse larger orders unless raised explicitly
  int threads = 1;
  bool bound_pruning = true;
  int split_depth = 12;  // slot depth where parallel tasks fork
};

struct SearchRecord {
  int n = 0;
  long long max_triangles = 0;
  std::vector<Edge> witness;  // edge set of one maximizer
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

namespace detail {

// Vertex pairs in lexicographic order; future[pos][v] holds the neighbors v
// could still gain from slots at index >= pos.
struct SlotTable {
  int n = 0;
  std::vector<Edge> slot;
  std::vector<std::vector<std::uint64_t>> future;
};

inline SlotTable make_slot_table(int n) {
  SlotTable s;
  s.n = n;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) s.slot.push_back(Edge{u, v});
  const int m = static_cast<int>(s.slot.size());
  s.future.assign(m + 1, std::vector<std::uint64_t>(n, 0));
  for (int pos = m - 1; pos >= 0; --pos) {
    s.future[pos] = s.future[pos + 1];
    s.future[pos][s.slot[pos].u] |= 1ull << s.slot[pos].v;
    s.future[pos][s.slot[pos].v] |= 1ull << s.slot[pos].u;
  }
  return s;
}

inline std::vector<Edge> mask_edges(const std::vector<std::uint64_t>& adj) {
  std::vector<Edge> out;
  for (VertexId u = 0; u < static_cast<VertexId>(adj.size()); ++u) {
    std::uint64_t m = adj[u];
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (v > u) out.push_back(Edge{u, v});
    }
  }
  return out;
}

// Include-first DFS over edge slots. Sequential search prunes on <= and so
// keeps the first leaf attaining the maximum; parallel tasks prune strictly
// against max(local best, shared incumbent), which preserves every subtree
// that can still tie the optimum, so the task-order reduction recovers the
// same leaf the sequential order would.
struct SearchDfs {
  const SlotTable& slots;
  bool bound_pruning;
  bool strict_prune;
  std::atomic<long long>* shared_best;
  std::vector<std::uint64_t> adj;
  long long t = 0;
  long long best = -1;
  std::vector<std::uint64_t> best_adj;
  std::uint64_t nodes = 0;

  SearchDfs(const SlotTable& st, const SearchOptions& o, bool strict,
            std::atomic<long long>* shared)
      : slots(st),
        bound_pruning(o.bound_pruning),
        strict_prune(strict),
        shared_best(shared),
        adj(st.n, 0) {}

  // Would u-v close a 5-cycle, i.e. is there a path u-a-b-c-v of length 4?
  bool creates_c5(VertexId u, VertexId v) const {
    const std::uint64_t bu = 1ull << u, bv = 1ull << v;
    std::uint64_t as = adj[u] & ~bv;
    while (as) {
      const int a = std::countr_zero(as);
      as &= as - 1;
      const std::uint64_t ba = 1ull << a;
      std::uint64_t bs = adj[a] & ~bu & ~bv;
      while (bs) {
        const int b = std::countr_zero(bs);
        bs &= bs - 1;
        if (adj[b] & adj[v] & ~bu & ~ba) return true;
      }
    }
    return false;
  }

  // Admissible: each undecided slot can complete at most this many
  // triangles, counting a triangle only at its largest slot.
  long long potential(int pos) const {
    const auto& fut = slots.future[pos];
    const int m = static_cast<int>(slots.slot.size());
    long long sum = 0;
    for (int i = pos; i < m; ++i) {
      const auto [u, v] = slots.slot[i];
      const std::uint64_t pu = adj[u] | fut[u];
      const std::uint64_t pv = adj[v] | fut[v];
      sum += std::popcount(pu & pv & ~(1ull << u) & ~(1ull << v));
    }
    return sum;
  }

  void record_leaf() {
    if (t > best) {
      best = t;
      best_adj = adj;
    }
    if (shared_best) {
      long long cur = shared_best->load(std::memory_order_relaxed);
      while (t > cur && !shared_best->compare_exchange_weak(
                            cur, t, std::memory_order_relaxed)) {
      }
    }
  }

  void run(int pos) {
    ++nodes;
    const int m = static_cast<int>(slots.slot.size());
    if (pos == m) {
      record_leaf();
      return;
    }
    if (bound_pruning) {
      long long incumbent = best;
      if (shared_best) {
        const long long s = shared_best->load(std::memory_order_relaxed);
        if (s > incumbent) incumbent = s;
      }
      if (incumbent >= 0) {
        const long long reachable = t + potential(pos);
        if (strict_prune ? reachable < incumbent : reachable <= incumbent)
          return;
      }
    }
    const auto [u, v] = slots.slot[pos];
    if (!creates_c5(u, v)) {
      const long long gained = std::popcount(adj[u] & adj[v]);
      adj[u] |= 1ull << v;
      adj[v] |= 1ull << u;
      t += gained;
      run(pos + 1);
      adj[u] &= ~(1ull << v);
      adj[v] &= ~(1ull << u);
      t -= gained;
    }
    run(pos + 1);
  }
};

struct SearchPrefix {
  std::vector<std::uint64_t> adj;
  long long t = 0;
};

// Enumerates depth-limited DFS states in the exact order the sequential
// search would reach them; no bound pruning here so the task list does not
// depend on incumbent timing.
inline void collect_prefixes(SearchDfs& walker, int pos, int depth,
                             std::vector<SearchPrefix>& out) {
  ++walker.nodes;
  if (pos == depth) {
    out.push_back(SearchPrefix{walker.adj, walker.t});
    return;
  }
  const auto [u, v] = walker.slots.slot[pos];
  if (!walker.creates_c5(u, v)) {
    const long long gained = std::popcount(walker.adj[u] & walker.adj[v]);
    walker.adj[u] |= 1ull << v;
    walker.adj[v] |= 1ull << u;
    walker.t += gained;
    collect_prefixes(walker, pos + 1, depth, out);
    walker.adj[u] &= ~(1ull << v);
    walker.adj[v] &= ~(1ull << u);
    walker.t -= gained;
  }
  collect_prefixes(walker, pos + 1, depth, out);
}

}  // namespace detail

// Exact maximum triangle count over all C5-free graphs on n vertices, with
// one maximizing edge set. Exponential in n; the cap is a safety rail.
inline SearchRecord exact_ex(int n, const SearchOptions& opts = {}) {
  if (n < 0) throw std::invalid_argument("order must be >= 0");
  if (n > 64) throw std::invalid_argument("orders above 64 are not supported");
  if (n > opts.cap)
    throw std::invalid_argument(
        "order " + std::to_string(n) + " exceeds the search cap " +
        std::to_string(opts.cap) +
        "; raise the cap to accept the exponential cost");

  const auto start = std::chrono::steady_clock::now();
  const detail::SlotTable slots = detail::make_slot_table(n);
  const int m = static_cast<int>(slots.slot.size());
  const int threads = std::max(1, opts.threads);
  const int depth = std::min(opts.split_depth, m);

  SearchRecord rec;
  rec.n = n;

  if (threads == 1 || depth <= 0 || depth >= m) {
    detail::SearchDfs dfs(slots, opts, false, nullptr);
    dfs.run(0);
    rec.max_triangles = dfs.best;
    rec.witness = detail::mask_edges(dfs.best_adj);
    rec.nodes_explored = dfs.nodes;
  } else {
    detail::SearchDfs walker(slots, opts, false, nullptr);
    std::vector<detail::SearchPrefix> prefixes;
    detail::collect_prefixes(walker, 0, depth, prefixes);

    struct TaskResult {
      long long best = -1;
      std::vector<std::uint64_t> adj;
      std::uint64_t nodes = 0;
    };
    std::vector<TaskResult> results(prefixes.size());
    std::atomic<long long> shared{-1};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) return;
        detail::SearchDfs dfs(slots, opts, true, &shared);
        dfs.adj = prefixes[i].adj;
        dfs.t = prefixes[i].t;
        dfs.run(depth);
        results[i] = TaskResult{dfs.best, std::move(dfs.best_adj), dfs.nodes};
      }
    };
    std::vector<std::thread> pool;
    const std::size_t width =
        std::min(static_cast<std::size_t>(threads), prefixes.size());
    pool.reserve(width);
    for (std::size_t i = 0; i < width; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();

    rec.nodes_explored = walker.nodes;
    const TaskResult* top = nullptr;
    for (const TaskResult& res : results) {
      rec.nodes_explored += res.nodes;
      if (!top || res.best > top->best) top = &res;
    }
    rec.max_triangles = top->best;
    rec.witness = detail::mask_edges(top->adj);
  }

  rec.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rec;
}

// exact_ex for every n in [lo, hi]; the counts must be nondecreasing.
inline std::vector<SearchRecord> search_table(int lo, int hi,
                                              const SearchOptions& opts = {}) {
  if (lo < 0 || hi < lo)
    throw std::invalid_argument("search range must satisfy 0 <= lo <= hi");
  std::vector<SearchRecord> out;
  out.reserve(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) {
    out.push_back(exact_ex(n, opts));
    if (out.size() >= 2 &&
        out[out.size() - 2].max_triangles > out.back().max_triangles)
      throw std::logic_error("maximum dropped between consecutive orders");
  }
  return out;
}

}  // namespace c5t
