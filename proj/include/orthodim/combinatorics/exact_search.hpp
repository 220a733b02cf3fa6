#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "orthodim/combinatorics/graph.hpp"
#include "orthodim/error.hpp"

namespace orthodim {

/// Budgets for the brute-force oracles. Exceeding any of them raises CapacityError.
struct SearchLimits {
  std::size_t chromatic_max_vertices = 64;
  std::size_t independence_max_vertices = 128;
  std::size_t multichromatic_max_vertices = 16;
  std::size_t hypergraph_max_vertices = 64;
  std::uint64_t max_nodes = 50'000'000;
};

struct ChromaticResult {
  std::uint32_t value = 0;
  VertexColoring witness;
};

struct VertexSetResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;  // sorted
};

struct MultichromaticResult {
  std::uint32_t value = 0;
  TupleColoring witness;
};

namespace detail {

class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  DynBitset operator&(const DynBitset& o) const {
    DynBitset r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        const int b = std::countr_zero(x);
        f(i * 64 + static_cast<std::size_t>(b));
        x &= x - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline std::vector<DynBitset> neighborhood_bitsets(const Graph& g) {
  std::vector<DynBitset> nb(g.num_vertices(), DynBitset(g.num_vertices()));
  for (const auto& e : g.edges()) {
    nb[e.u].set(e.v);
    nb[e.v].set(e.u);
  }
  return nb;
}

// Branch-and-bound maximum clique with greedy-coloring bounds.
class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, std::uint64_t max_nodes, std::size_t stop_at)
      : n_(g.num_vertices()), nb_(neighborhood_bitsets(g)), max_nodes_(max_nodes), stop_at_(stop_at) {}

  std::vector<Vertex> run() {
    DynBitset all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    std::vector<Vertex> current;
    if (n_ > 0) expand(current, all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(std::vector<Vertex>& current, DynBitset cand) {
    if (++nodes_ > max_nodes_) throw CapacityError("maximum clique search exceeded node budget");
    // Greedy sequential coloring of the candidates gives an upper bound per vertex.
    std::vector<Vertex> order;
    std::vector<std::uint32_t> bound;
    DynBitset uncolored = cand;
    std::uint32_t color = 0;
    while (!uncolored.none()) {
      ++color;
      DynBitset avail = uncolored;
      while (!avail.none()) {
        std::size_t v = 0;
        bool found = false;
        avail.for_each([&](std::size_t i) {
          if (!found) {
            v = i;
            found = true;
          }
        });
        avail.reset(v);
        uncolored.reset(v);
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(color);
        nb_[v].for_each([&](std::size_t u) { avail.reset(u); });
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + bound[idx] <= best_.size()) return;
      if (best_.size() >= stop_at_) return;
      const Vertex v = order[idx];
      current.push_back(v);
      DynBitset next = cand & nb_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      cand.reset(v);
    }
  }

  std::size_t n_;
  std::vector<DynBitset> nb_;
  std::uint64_t max_nodes_;
  std::size_t stop_at_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> best_;
};

}  // namespace detail

/// Maximum clique (sorted witness). Stops early once a clique of size `stop_at` is found.
inline VertexSetResult maximum_clique(const Graph& g, const SearchLimits& limits = {},
                                      std::size_t stop_at = SIZE_MAX) {
  if (g.num_vertices() > limits.independence_max_vertices)
    throw CapacityError("maximum_clique: " + std::to_string(g.num_vertices()) + " vertices exceeds limit " +
                        std::to_string(limits.independence_max_vertices));
  auto w = detail::MaxCliqueSearch(g, limits.max_nodes, stop_at).run();
  return {w.size(), std::move(w)};
}

/// Exact independence number with a witness set.
inline VertexSetResult independence_number_exact(const Graph& g, const SearchLimits& limits = {}) {
  if (g.num_vertices() > limits.independence_max_vertices)
    throw CapacityError("independence_number_exact: " + std::to_string(g.num_vertices()) +
                        " vertices exceeds limit " + std::to_string(limits.independence_max_vertices));
  return maximum_clique(g.complement(), limits);
}

/// DSATUR greedy coloring; ties go to the lowest index.
inline VertexColoring greedy_coloring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::int64_t> color(n, -1);
  std::vector<std::vector<bool>> seen(n);
  std::vector<std::size_t> sat(n, 0);
  std::uint32_t used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (best == n || sat[v] > sat[best] || (sat[v] == sat[best] && g.degree(v) > g.degree(best))) best = v;
    }
    std::uint32_t c = 0;
    while (c < seen[best].size() && seen[best][c]) ++c;
    color[best] = c;
    used = std::max(used, c + 1);
    for (Vertex u : g.neighbors(best)) {
      if (seen[u].size() <= c) seen[u].resize(c + 1, false);
      if (!seen[u][c]) {
        seen[u][c] = true;
        ++sat[u];
      }
    }
  }
  std::vector<std::uint32_t> out(color.begin(), color.end());
  return VertexColoring(std::move(out), std::max<std::uint32_t>(used, n == 0 ? 0 : 1));
}

namespace detail {

class DsaturBranchAndBound {
 public:
  DsaturBranchAndBound(const Graph& g, std::uint32_t lower, VertexColoring upper, std::uint64_t max_nodes)
      : g_(g),
        n_(g.num_vertices()),
        lower_(lower),
        best_(static_cast<std::uint32_t>(upper.colors_used())),
        best_colors_(upper.colors),
        color_(n_, -1),
        count_(n_ * 64, 0),
        sat_(n_, 0),
        max_nodes_(max_nodes) {}

  ChromaticResult run() {
    if (best_ > lower_) search(0, 0);
    return {best_, VertexColoring(best_colors_, best_)};
  }

 private:
  void assign(std::size_t v, std::uint32_t c) {
    color_[v] = c;
    for (Vertex u : g_.neighbors(v))
      if (count_[u * 64 + c]++ == 0) sat_[u] |= std::uint64_t{1} << c;
  }
  void unassign(std::size_t v, std::uint32_t c) {
    color_[v] = -1;
    for (Vertex u : g_.neighbors(v))
      if (--count_[u * 64 + c] == 0) sat_[u] &= ~(std::uint64_t{1} << c);
  }

  void search(std::size_t colored, std::uint32_t used) {
    if (++nodes_ > max_nodes_) throw CapacityError("chromatic_number_exact exceeded node budget");
    if (used >= best_) return;
    if (colored == n_) {
      best_ = used;
      best_colors_.assign(color_.begin(), color_.end());
      return;
    }
    std::size_t v = n_;
    int best_sat = -1;
    for (std::size_t u = 0; u < n_; ++u) {
      if (color_[u] >= 0) continue;
      const int s = std::popcount(sat_[u]);
      if (s > best_sat) {
        best_sat = s;
        v = u;
      }
    }
    for (std::uint32_t c = 0; c <= used && c < 64; ++c) {
      if (c == used && used + 1 >= best_) break;
      if ((sat_[v] >> c) & 1U) continue;
      assign(v, c);
      search(colored + 1, std::max(used, c + 1));
      unassign(v, c);
      if (best_ <= lower_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint32_t lower_;
  std::uint32_t best_;
  std::vector<std::uint32_t> best_colors_;
  std::vector<std::int64_t> color_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint64_t> sat_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact chromatic number by DSATUR branch-and-bound seeded with a clique
/// lower bound and a greedy upper bound. The witness coloring uses colors
/// 0..value-1.
inline ChromaticResult chromatic_number_exact(const Graph& g, const SearchLimits& limits = {}) {
  const std::size_t n = g.num_vertices();
  if (n > limits.chromatic_max_vertices)
    throw CapacityError("chromatic_number_exact: " + std::to_string(n) + " vertices exceeds limit " +
                        std::to_string(limits.chromatic_max_vertices));
  if (n == 0) return {0, VertexColoring({}, 0)};
  if (g.num_edges() == 0) return {1, VertexColoring(std::vector<std::uint32_t>(n, 0), 1)};
  SearchLimits clique_limits = limits;
  clique_limits.independence_max_vertices = std::max(limits.independence_max_vertices, n);
  const auto clique = maximum_clique(g, clique_limits);
  auto res = detail::DsaturBranchAndBound(g, static_cast<std::uint32_t>(clique.value), greedy_coloring(g),
                                          limits.max_nodes)
                 .run();
  // Relabel colors by first appearance so the witness is canonical.
  std::vector<std::int64_t> relabel(res.value, -1);
  std::uint32_t next = 0;
  for (auto& c : res.witness.colors) {
    if (relabel[c] < 0) relabel[c] = next++;
    c = static_cast<std::uint32_t>(relabel[c]);
  }
  return res;
}

/// Proper 2-coloring of a graph by breadth-first search, roots at the lowest
/// uncolored index get color 0.
inline std::optional<VertexColoring> two_color_graph(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::int8_t> col(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (col[root] >= 0) continue;
    col[root] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(root));
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        if (col[u] < 0) {
          col[u] = static_cast<std::int8_t>(1 - col[v]);
          q.push(u);
        } else if (col[u] == col[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return VertexColoring(std::vector<std::uint32_t>(col.begin(), col.end()), 2);
}

namespace detail {

// Backtracking 2-coloring of a k-uniform hypergraph with propagation on
// hyperedges that have exactly one uncolored vertex and are otherwise monochromatic.
class HypergraphTwoColoring {
 public:
  HypergraphTwoColoring(const UniformHypergraph& h, std::uint64_t max_nodes)
      : h_(h), col_(h.num_vertices(), -1), max_nodes_(max_nodes) {}

  std::optional<VertexColoring> run() {
    if (!search()) return std::nullopt;
    std::vector<std::uint32_t> out(col_.size());
    for (std::size_t i = 0; i < col_.size(); ++i) out[i] = col_[i] < 0 ? 0U : static_cast<std::uint32_t>(col_[i]);
    return VertexColoring(std::move(out), 2);
  }

 private:
  bool propagate(std::size_t from_trail) {
    for (std::size_t t = from_trail; t < trail_.size(); ++t) {
      const Vertex v = trail_[t];
      for (auto ei : h_.incident(v)) {
        auto e = h_.hyperedge(ei);
        int cnt[2] = {0, 0};
        Vertex free = 0;
        int nfree = 0;
        for (Vertex u : e) {
          if (col_[u] < 0) {
            free = u;
            ++nfree;
          } else {
            ++cnt[col_[u]];
          }
        }
        if (nfree == 0 && (cnt[0] == 0 || cnt[1] == 0)) return false;
        if (nfree == 1 && (cnt[0] == 0 || cnt[1] == 0)) {
          const int forced = cnt[0] == 0 ? 0 : 1;
          col_[free] = static_cast<std::int8_t>(forced);
          trail_.push_back(free);
        }
      }
    }
    return true;
  }

  void undo(std::size_t to) {
    while (trail_.size() > to) {
      col_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  bool search() {
    if (++nodes_ > max_nodes_) throw CapacityError("hypergraph 2-coloring exceeded node budget");
    std::size_t v = 0;
    while (v < col_.size() && col_[v] >= 0) ++v;
    if (v == col_.size()) return true;
    const bool first = trail_.empty();
    for (int c = 0; c < 2; ++c) {
      if (first && c == 1) break;  // color swap symmetry
      const std::size_t mark = trail_.size();
      col_[v] = static_cast<std::int8_t>(c);
      trail_.push_back(static_cast<Vertex>(v));
      if (propagate(mark) && search()) return true;
      undo(mark);
    }
    return false;
  }

  const UniformHypergraph& h_;
  std::vector<std::int8_t> col_;
  std::vector<Vertex> trail_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// A proper 2-coloring (no monochromatic hyperedge) if one exists.
inline std::optional<VertexColoring> is_two_colorable(const UniformHypergraph& h, const SearchLimits& limits = {}) {
  if (h.uniformity() == 2) return two_color_graph(*h.as_graph());
  if (h.num_vertices() > limits.hypergraph_max_vertices * 64)
    throw CapacityError("is_two_colorable: instance too large");
  return detail::HypergraphTwoColoring(h, limits.max_nodes).run();
}

/// Proper 2-coloring of the subgraph induced by N(v). Entry i of the result
/// colors g.neighbors(v)[i].
inline std::optional<VertexColoring> two_color_neighborhood(const Graph& g, Vertex v) {
  detail::require(v < g.num_vertices(), "two_color_neighborhood: vertex out of range");
  auto nb = g.neighbors(v);
  return two_color_graph(g.induced_subgraph(nb));
}

namespace detail {

class HypergraphColoringSearch {
 public:
  HypergraphColoringSearch(const UniformHypergraph& h, std::uint32_t colors, std::uint64_t max_nodes,
                           std::uint64_t& nodes)
      : h_(h), c_(colors), col_(h.num_vertices(), 0), max_nodes_(max_nodes), nodes_(nodes) {}

  bool run() { return search(0, 0); }
  std::vector<std::uint32_t> colors() const { return col_; }

 private:
  bool closes_monochromatic(Vertex v) const {
    for (auto ei : h_.incident(v)) {
      auto e = h_.hyperedge(ei);
      if (e.back() != v) continue;  // only check once every vertex is assigned
      bool mono = true;
      for (Vertex u : e) mono = mono && col_[u] == col_[v];
      if (mono) return true;
    }
    return false;
  }

  bool search(std::size_t v, std::uint32_t used) {
    if (++nodes_ > max_nodes_) throw CapacityError("hypergraph chromatic search exceeded node budget");
    if (v == col_.size()) return true;
    for (std::uint32_t c = 0; c < c_ && c <= used; ++c) {
      col_[v] = c;
      if (!closes_monochromatic(static_cast<Vertex>(v)) && search(v + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  const UniformHypergraph& h_;
  std::uint32_t c_;
  std::vector<std::uint32_t> col_;
  std::uint64_t max_nodes_;
  std::uint64_t& nodes_;
};

}  // namespace detail

/// Exact chromatic number of a uniform hypergraph (least c with no
/// monochromatic hyperedge). 2-uniform inputs use the graph solver.
inline ChromaticResult hypergraph_chromatic_number_exact(const UniformHypergraph& h,
                                                         const SearchLimits& limits = {}) {
  if (h.uniformity() == 2) return chromatic_number_exact(*h.as_graph(), limits);
  const std::size_t n = h.num_vertices();
  if (n > limits.hypergraph_max_vertices)
    throw CapacityError("hypergraph_chromatic_number_exact: " + std::to_string(n) + " vertices exceeds limit " +
                        std::to_string(limits.hypergraph_max_vertices));
  if (n == 0) return {0, VertexColoring({}, 0)};
  if (h.num_hyperedges() == 0) return {1, VertexColoring(std::vector<std::uint32_t>(n, 0), 1)};
  if (auto two = is_two_colorable(h, limits)) return {2, *two};
  std::uint64_t nodes = 0;
  for (std::uint32_t c = 3;; ++c) {
    detail::HypergraphColoringSearch s(h, c, limits.max_nodes, nodes);
    if (s.run()) return {c, VertexColoring(s.colors(), c)};
  }
}

namespace detail {

class MultichromaticSearch {
 public:
  MultichromaticSearch(const Graph& g, std::uint32_t k, std::uint32_t c, std::uint64_t max_nodes,
                       std::uint64_t& nodes)
      : g_(g), k_(k), c_(c), sets_(g.num_vertices(), 0), max_nodes_(max_nodes), nodes_(nodes) {
    candidates_ = subsets(c, k);
  }

  bool run() { return search(0, 0); }
  const std::vector<std::uint64_t>& sets() const { return sets_; }

 private:
  static std::vector<std::uint64_t> subsets(std::uint32_t c, std::uint32_t k) {
    std::vector<std::uint64_t> out;
    if (k == 0 || k > c) return out;
    std::uint64_t x = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = c == 64 ? 0 : (std::uint64_t{1} << c);
    while (c == 64 || x < limit) {
      out.push_back(x);
      const std::uint64_t lo = x & (~x + 1);
      const std::uint64_t r = x + lo;
      if (r == 0) break;
      x = (((r ^ x) >> 2) / lo) | r;
    }
    return out;
  }

  bool search(std::size_t v, std::uint32_t used) {
    if (++nodes_ > max_nodes_) throw CapacityError("multichromatic_number_exact exceeded node budget");
    if (v == sets_.size()) return true;
    std::uint64_t forbidden = 0;
    for (Vertex u : g_.neighbors(static_cast<Vertex>(v)))
      if (u < v) forbidden |= sets_[u];
    for (std::uint64_t s : candidates_) {
      if (s & forbidden) continue;
      // Colors not used so far are interchangeable: fresh colors must be used in order.
      const std::uint64_t fresh = used >= 64 ? 0 : (s >> used);
      if (fresh & (fresh + 1)) continue;
      const std::uint32_t new_used =
          std::max<std::uint32_t>(used, 64 - static_cast<std::uint32_t>(std::countl_zero(s)));
      sets_[v] = s;
      if (search(v + 1, new_used)) return true;
    }
    sets_[v] = 0;
    return false;
  }

  const Graph& g_;
  std::uint32_t k_;
  std::uint32_t c_;
  std::vector<std::uint64_t> sets_;
  std::vector<std::uint64_t> candidates_;
  std::uint64_t max_nodes_;
  std::uint64_t& nodes_;
};

}  // namespace detail

/// Smallest c admitting a homomorphism g -> K(c,k), i.e. a k-tuple coloring with c colors.
inline MultichromaticResult multichromatic_number_exact(const Graph& g, std::uint32_t k,
                                                        const SearchLimits& limits = {}) {
  detail::require(k >= 1, "multichromatic_number_exact: k must be positive");
  const std::size_t n = g.num_vertices();
  if (n > limits.multichromatic_max_vertices)
    throw CapacityError("multichromatic_number_exact: " + std::to_string(n) + " vertices exceeds limit " +
                        std::to_string(limits.multichromatic_max_vertices));
  if (n == 0) return {0, TupleColoring{k, 0, {}}};
  const auto clique = maximum_clique(g, limits);
  const std::uint32_t upper = k * static_cast<std::uint32_t>(greedy_coloring(g).colors_used());
  if (upper > 64) throw CapacityError("multichromatic_number_exact: palette would exceed 64 colors");
  std::uint64_t nodes = 0;
  for (std::uint32_t c = std::max<std::uint32_t>(k, k * static_cast<std::uint32_t>(clique.value)); c <= upper; ++c) {
    detail::MultichromaticSearch s(g, k, c, limits.max_nodes, nodes);
    if (s.run()) return {c, TupleColoring{k, c, s.sets()}};
  }
  throw std::logic_error("multichromatic_number_exact: blow-up of a greedy coloring must succeed");
}

}  // namespace orthodim
