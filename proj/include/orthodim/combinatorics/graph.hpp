#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthodim/error.hpp"

namespace orthodim {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are
/// sorted. For n up to `kDenseLimit` an adjacency bit matrix backs
/// `adjacent()`; larger graphs fall back to binary search.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n) { build_bits(); }

  /// Throws InvalidArgument on self-loops, out-of-range endpoints or
  /// duplicate edges.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
    for (auto& e : edges) {
      detail::require(e.u != e.v, "graph: self-loop at vertex " + std::to_string(e.u));
      detail::require(e.u < n && e.v < n, "graph: edge endpoint out of range");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
      detail::require(edges[i] != edges[i - 1], "graph: duplicate edge {" + std::to_string(edges[i].u) +
                                                    "," + std::to_string(edges[i].v) + "}");
    }
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    build_bits();
  }

  /// Builds a graph from an edge list that may contain duplicates in either
  /// orientation; self-loops are still rejected.
  static Graph from_edges_dedup(std::size_t n, std::vector<Edge> edges) {
    for (auto& e : edges)
      if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
  }

  static Graph complete(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, std::move(es));
  }

  static Graph cycle(std::size_t n) {
    detail::require(n >= 3, "cycle: need at least 3 vertices");
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i) es.push_back({i, static_cast<Vertex>((i + 1) % n)});
    return Graph(n, std::move(es));
  }

  static Graph path(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, std::move(es));
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    if (!bits_.empty()) return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
  Graph induced_subgraph(std::span<const Vertex> vertices) const {
    std::vector<std::int64_t> pos(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      detail::require(vertices[i] < n_, "induced_subgraph: vertex out of range");
      detail::require(pos[vertices[i]] < 0, "induced_subgraph: repeated vertex");
      pos[vertices[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> es;
    for (const auto& e : edges_) {
      if (pos[e.u] >= 0 && pos[e.v] >= 0)
        es.push_back({static_cast<Vertex>(pos[e.u]), static_cast<Vertex>(pos[e.v])});
    }
    return Graph(vertices.size(), std::move(es));
  }

  Graph complement() const {
    std::vector<Edge> es;
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex j = i + 1; j < n_; ++j)
        if (!adjacent(i, j)) es.push_back({i, j});
    return Graph(n_, std::move(es));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void build_bits() {
    bits_.clear();
    words_ = (n_ + 63) / 64;
    if (n_ == 0 || n_ > kDenseLimit) return;
    bits_.assign(n_ * words_, 0);
    for (const auto& e : edges_) {
      bits_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      bits_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// k-uniform hypergraph. Hyperedges are stored sorted and in lexicographic order.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;

  /// Throws InvalidArgument if a hyperedge has the wrong size, repeated or
  /// out-of-range vertices, or if a hyperedge appears twice.
  UniformHypergraph(std::size_t n, std::size_t k, std::vector<std::vector<Vertex>> hyperedges)
      : n_(n), k_(k) {
    detail::require(k >= 2, "hypergraph: uniformity must be at least 2");
    for (auto& e : hyperedges) {
      detail::require(e.size() == k, "hypergraph: hyperedge of size " + std::to_string(e.size()) +
                                         " in a " + std::to_string(k) + "-uniform hypergraph");
      std::sort(e.begin(), e.end());
      for (std::size_t i = 0; i < k; ++i) {
        detail::require(e[i] < n, "hypergraph: vertex out of range");
        detail::require(i == 0 || e[i] != e[i - 1], "hypergraph: repeated vertex in hyperedge");
      }
    }
    std::sort(hyperedges.begin(), hyperedges.end());
    for (std::size_t i = 1; i < hyperedges.size(); ++i)
      detail::require(hyperedges[i] != hyperedges[i - 1], "hypergraph: duplicate hyperedge");
    flat_.reserve(hyperedges.size() * k);
    for (const auto& e : hyperedges) flat_.insert(flat_.end(), e.begin(), e.end());
    m_ = hyperedges.size();
    build_incidence();
  }

  /// Same as the constructor but silently drops duplicate hyperedges.
  static UniformHypergraph from_hyperedges_dedup(std::size_t n, std::size_t k,
                                                 std::vector<std::vector<Vertex>> hyperedges) {
    for (auto& e : hyperedges) std::sort(e.begin(), e.end());
    std::sort(hyperedges.begin(), hyperedges.end());
    hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());
    return UniformHypergraph(n, k, std::move(hyperedges));
  }

  static UniformHypergraph from_graph(const Graph& g) {
    std::vector<std::vector<Vertex>> es;
    es.reserve(g.num_edges());
    for (const auto& e : g.edges()) es.push_back({e.u, e.v});
    return UniformHypergraph(g.num_vertices(), 2, std::move(es));
  }

  /// The 2-uniform case viewed as a graph; absent for k >= 3.
  std::optional<Graph> as_graph() const {
    if (k_ != 2) return std::nullopt;
    std::vector<Edge> es;
    es.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) es.push_back({flat_[2 * i], flat_[2 * i + 1]});
    return Graph(n_, std::move(es));
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_hyperedges() const noexcept { return m_; }
  std::size_t uniformity() const noexcept { return k_; }

  std::span<const Vertex> hyperedge(std::size_t i) const {
    return std::span<const Vertex>(flat_).subspan(i * k_, k_);
  }

  /// Indices of hyperedges containing v.
  std::span<const std::uint32_t> incident(Vertex v) const { return incidence_.at(v); }

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.flat_ == b.flat_;
  }

 private:
  void build_incidence() {
    incidence_.assign(n_, {});
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < k_; ++j) incidence_[flat_[i * k_ + j]].push_back(static_cast<std::uint32_t>(i));
  }

  std::size_t n_ = 0;
  std::size_t k_ = 2;
  std::size_t m_ = 0;
  std::vector<Vertex> flat_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

/// Assignment of one of `palette` colors to each vertex.
struct VertexColoring {
  std::vector<std::uint32_t> colors;
  std::uint32_t palette = 0;

  VertexColoring() = default;
  VertexColoring(std::vector<std::uint32_t> c, std::uint32_t p) : colors(std::move(c)), palette(p) {
    for (auto x : colors) detail::require(x < palette, "coloring: color outside palette");
  }

  /// Number of distinct colors actually used.
  std::size_t colors_used() const {
    std::vector<std::uint32_t> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool is_proper(const Graph& g) const {
    if (colors.size() != g.num_vertices()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return colors[e.u] == colors[e.v]; });
  }

  /// Proper for a hypergraph: no hyperedge is monochromatic.
  bool is_proper(const UniformHypergraph& h) const {
    if (colors.size() != h.num_vertices()) return false;
    for (std::size_t i = 0; i < h.num_hyperedges(); ++i) {
      auto e = h.hyperedge(i);
      bool mono = std::all_of(e.begin(), e.end(), [&](Vertex v) { return colors[v] == colors[e[0]]; });
      if (mono) return false;
    }
    return true;
  }
};

/// k-tuple coloring: each vertex receives a k-subset of [palette], stored as a bitmask.
struct TupleColoring {
  std::uint32_t k = 1;
  std::uint32_t palette = 0;
  std::vector<std::uint64_t> sets;

  bool is_valid() const {
    if (palette > 64) return false;
    const std::uint64_t allowed = palette == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << palette) - 1);
    return std::all_of(sets.begin(), sets.end(), [&](std::uint64_t s) {
      return (s & ~allowed) == 0 && static_cast<std::uint32_t>(__builtin_popcountll(s)) == k;
    });
  }

  /// Adjacent vertices must receive disjoint color sets.
  bool is_proper(const Graph& g) const {
    if (!is_valid() || sets.size() != g.num_vertices()) return false;
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return (sets[e.u] & sets[e.v]) != 0; });
  }
};

}  // namespace orthodim
