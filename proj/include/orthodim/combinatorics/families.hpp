#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "orthodim/combinatorics/graph.hpp"
#include "orthodim/error.hpp"

namespace orthodim {

/// A graph whose vertices are subsets of [d], encoded as bitmasks
/// (element i of [d] is bit i-1). Vertex j of `graph` is `subsets[j]`.
struct SetSystemGraph {
  Graph graph;
  std::vector<std::uint64_t> subsets;
  std::uint32_t ground = 0;
};

/// Exact binomial coefficient; throws CapacityError on 64-bit overflow.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<unsigned __int128>(UINT64_MAX))
      throw CapacityError("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

/// All s-subsets of [d] as bitmasks in increasing numeric order.
inline std::vector<std::uint64_t> subsets_of_size(std::uint32_t d, std::uint32_t s) {
  detail::require(d <= 63, "subsets_of_size: ground set too large for bitmask encoding");
  std::vector<std::uint64_t> out;
  if (s > d) return out;
  if (s == 0) return {0};
  std::uint64_t x = (std::uint64_t{1} << s) - 1;
  const std::uint64_t limit = std::uint64_t{1} << d;
  while (x < limit) {
    out.push_back(x);
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

/// No two cyclically consecutive elements of [d].
inline bool is_stable_subset(std::uint64_t set, std::uint32_t d) {
  const std::uint64_t full = (std::uint64_t{1} << d) - 1;
  const std::uint64_t rotated = ((set << 1) | (set >> (d - 1))) & full;
  return (set & rotated) == 0;
}

namespace detail {

inline void check_kneser_params(std::uint32_t d, std::uint32_t s, const char* name) {
  require(s >= 1 && d >= 2 * s, std::string(name) + ": need d >= 2s >= 2");
  require(d <= 63, std::string(name) + ": d must be at most 63");
}

inline SetSystemGraph disjointness_graph(std::vector<std::uint64_t> sets, std::uint32_t d) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) == 0) es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return {Graph(sets.size(), std::move(es)), std::move(sets), d};
}

}  // namespace detail

/// Kneser graph K(d,s): s-subsets of [d], adjacent iff disjoint.
inline SetSystemGraph kneser_graph(std::uint32_t d, std::uint32_t s) {
  detail::check_kneser_params(d, s, "kneser_graph");
  if (binomial(d, s) > 20000) throw CapacityError("kneser_graph: too many vertices");
  return detail::disjointness_graph(subsets_of_size(d, s), d);
}

/// Schrijver graph S(d,s): the induced subgraph of K(d,s) on stable sets.
inline SetSystemGraph schrijver_graph(std::uint32_t d, std::uint32_t s) {
  detail::check_kneser_params(d, s, "schrijver_graph");
  if (binomial(d, s) > 2000000) throw CapacityError("schrijver_graph: enumeration too large");
  std::vector<std::uint64_t> stable;
  for (auto x : subsets_of_size(d, s))
    if (is_stable_subset(x, d)) stable.push_back(x);
  if (stable.size() > 20000) throw CapacityError("schrijver_graph: too many vertices");
  return detail::disjointness_graph(std::move(stable), d);
}

/// The graph on t/2-subsets of [t] with edges between sets meeting in exactly t/4 elements.
inline SetSystemGraph frankl_rodl_graph(std::uint32_t t) {
  detail::require(t >= 4 && t % 4 == 0, "frankl_rodl_graph: t must be a positive multiple of 4");
  detail::require(t <= 63, "frankl_rodl_graph: t must be at most 63");
  if (binomial(t, t / 2) > 20000) throw CapacityError("frankl_rodl_graph: too many vertices");
  auto sets = subsets_of_size(t, t / 2);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (static_cast<std::uint32_t>(std::popcount(sets[i] & sets[j])) == t / 4)
        es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return {Graph(sets.size(), std::move(es)), std::move(sets), t};
}

/// Lexicographic product G1 • G2 on V1 x V2, vertex (x,y) at index x*|V2| + y.
inline Graph lexicographic_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.num_vertices();
  const std::size_t n2 = g2.num_vertices();
  detail::require(n1 > 0 && n2 > 0, "lexicographic_product: both graphs must be nonempty");
  auto id = [n2](std::size_t x, std::size_t y) { return static_cast<Vertex>(x * n2 + y); };
  std::vector<Edge> es;
  es.reserve(g1.num_edges() * n2 * n2 + n1 * g2.num_edges());
  for (const auto& e : g1.edges())
    for (std::size_t y1 = 0; y1 < n2; ++y1)
      for (std::size_t y2 = 0; y2 < n2; ++y2) es.push_back({id(e.u, y1), id(e.v, y2)});
  for (std::size_t x = 0; x < n1; ++x)
    for (const auto& e : g2.edges()) es.push_back({id(x, e.u), id(x, e.v)});
  return Graph(n1 * n2, std::move(es));
}

inline std::string format_subset(std::uint64_t set) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < 64; ++i) {
    if ((set >> i) & 1U) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace orthodim
