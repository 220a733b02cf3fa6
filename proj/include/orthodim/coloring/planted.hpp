#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "orthodim/combinatorics/families.hpp"

namespace orthodim {

enum class PlantedKind { tripartite, kneser_sub };

struct PlantedInstance {
  Graph graph;
  VertexColoring coloring;  // a proper 3-coloring
};

/// Random graphs with od at most 3. `tripartite`: random balanced 3-partition
/// and cross edges with probability p. `kneser_sub`: n random vertices of the
/// odd graph K(2s+1, s) for the least s with enough vertices.
inline PlantedInstance planted_od3_instance(std::size_t n, PlantedKind kind, std::uint64_t seed, double p = 0.5) {
  detail::require(n >= 1, "planted_od3_instance: need at least one vertex");
  std::mt19937_64 rng(seed);
  if (kind == PlantedKind::tripartite) {
    detail::require(p >= 0.0 && p <= 1.0, "planted_od3_instance: p must lie in [0,1]");
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint32_t> part(n);
    for (std::size_t i = 0; i < n; ++i) part[order[i]] = static_cast<std::uint32_t>(i % 3);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (part[u] != part[v] && coin(rng)) es.push_back({u, v});
    return {Graph(n, std::move(es)), VertexColoring(std::move(part), 3)};
  }
  std::uint32_t s = 1;
  while (binomial(2 * s + 1, s) < n) {
    ++s;
    if (s > 7) throw InvalidArgument("planted_od3_instance: kneser-sub supports at most 6435 vertices");
  }
  const auto k = kneser_graph(2 * s + 1, s);
  std::vector<Vertex> pick(k.subsets.size());
  std::iota(pick.begin(), pick.end(), Vertex{0});
  std::shuffle(pick.begin(), pick.end(), rng);
  pick.resize(n);
  std::sort(pick.begin(), pick.end());
  // Sets through 0, sets through 1 but not 0, and the rest (pairwise intersecting).
  std::vector<std::uint32_t> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = k.subsets[pick[i]];
    c[i] = (a & 1U) ? 0 : (a & 2U) ? 1 : 2;
  }
  return {k.graph.induced_subgraph(pick), VertexColoring(std::move(c), 3)};
}

inline PlantedKind parse_planted_kind(const std::string& s) {
  if (s == "tripartite") return PlantedKind::tripartite;
  if (s == "kneser-sub") return PlantedKind::kneser_sub;
  throw InvalidArgument("unknown planted kind '" + s + "' (expected tripartite or kneser-sub)");
}

}  // namespace orthodim
