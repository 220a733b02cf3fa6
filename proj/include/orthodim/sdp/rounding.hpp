#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "orthodim/combinatorics/exact_search.hpp"
#include "orthodim/sdp/solver.hpp"

namespace orthodim {

inline constexpr int kDefaultRoundingTrials = 64;

/// KMS threshold c = sqrt(2 (1 - 2/kappa) ln(max_degree + 1)).
inline double kms_threshold(double kappa, std::size_t max_degree) {
  return std::sqrt(2.0 * (1.0 - 2.0 / kappa) * std::log(static_cast<double>(max_degree) + 1.0));
}

/// Threshold rounding of a vector coloring: per trial, draw a Gaussian
/// direction r (seed + trial), keep {v : <u_v,r> >= c}, then for every edge
/// still inside drop the endpoint with the smaller projection. Returns the
/// largest set over all trials (earliest trial on ties), sorted.
inline std::vector<Vertex> kms_independent_set(const Graph& g, const VectorColoring& vc, double kappa,
                                               std::uint64_t seed, int trials = kDefaultRoundingTrials,
                                               const SdpConfig& cfg = {}) {
  detail::require(kappa >= 2.0, "kms_independent_set: kappa must be at least 2");
  detail::require(trials >= 1, "kms_independent_set: trials must be positive");
  const std::size_t n = g.num_vertices();
  detail::require(static_cast<std::size_t>(vc.vectors.rows()) == n, "kms_independent_set: vector coloring size mismatch");
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  if (g.num_edges() == 0) return all;
  const double res = detail::edge_residual(g, detail::normalize_rows(vc.vectors), detail::t_of_kappa(kappa), false);
  if (res > cfg.eps_con)
    throw InvalidArgument("kms_independent_set: vector coloring is infeasible at kappa " + std::to_string(kappa) +
                          " (residual " + std::to_string(res) + ")");

  if (kappa <= 2.0) {
    if (auto two = two_color_graph(g)) {
      std::vector<Vertex> side[2];
      for (Vertex v = 0; v < n; ++v) side[two->colors[v]].push_back(v);
      return side[0].size() >= side[1].size() ? side[0] : side[1];
    }
  }
  const double c = kappa <= 2.0 ? 0.0 : kms_threshold(kappa, g.max_degree());
  const Eigen::Index r = vc.vectors.cols();
  std::vector<Vertex> best;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd dir(r);
    for (Eigen::Index j = 0; j < r; ++j) dir(j) = gauss(rng);
    const Eigen::VectorXd proj = vc.vectors * dir;
    std::vector<char> in(n, 0);
    for (Vertex v = 0; v < n; ++v) in[v] = proj(v) >= c * vc.vectors.row(v).norm();
    for (const auto& e : g.edges())
      if (in[e.u] && in[e.v]) {
        if (proj(e.u) < proj(e.v)) in[e.u] = 0;
        else in[e.v] = 0;
      }
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v)
      if (in[v]) set.push_back(v);
    if (set.size() > best.size()) best = std::move(set);
  }
  for (std::size_t i = 0; i < best.size(); ++i)
    for (std::size_t j = i + 1; j < best.size(); ++j)
      if (g.adjacent(best[i], best[j])) throw VerificationError("kms_independent_set: rounding produced an edge");
  return best;
}

}  // namespace orthodim
