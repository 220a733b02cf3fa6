#pragma once

#include <bit>
#include <cmath>
#include <map>
#include <vector>

#include "orthodim/combinatorics/families.hpp"
#include "orthodim/representations/types.hpp"

namespace orthodim {

/// Vertex v gets the unit vector e_{c(v)} in R^palette.
inline RealOrthogonalRepresentation representation_from_coloring(const UniformHypergraph& h, const VertexColoring& c) {
  detail::require(c.colors.size() == h.num_vertices(), "representation_from_coloring: coloring size mismatch");
  if (!c.is_proper(h)) throw InvalidArgument("representation_from_coloring: coloring is not proper");
  RealOrthogonalRepresentation rep;
  rep.vectors = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(h.num_vertices()), std::max<Eigen::Index>(c.palette, 1));
  for (std::size_t v = 0; v < c.colors.size(); ++v)
    rep.vectors(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(c.colors[v])) = 1.0;
  return rep;
}

inline RealOrthogonalRepresentation representation_from_coloring(const Graph& g, const VertexColoring& c) {
  return representation_from_coloring(UniformHypergraph::from_graph(g), c);
}

/// Result of reading colors off sign patterns. `patterns[c]` is the sign
/// vector in {-1,0,+1}^t shared by every vertex of color c.
struct SignPatternColoring {
  VertexColoring coloring;
  std::vector<std::vector<int>> patterns;
};

/// Colors each vertex by the sign pattern of its vector (entries within
/// eps_orth of zero count as 0). Colors are numbered by first appearance.
inline SignPatternColoring coloring_from_representation(const UniformHypergraph& h,
                                                        const RealOrthogonalRepresentation& rep) {
  const auto report = verify_real(h, rep);
  if (!report.valid()) throw VerificationError("coloring_from_representation: " + report.summary());
  std::map<std::vector<int>, std::uint32_t> index;
  SignPatternColoring out;
  std::vector<std::uint32_t> colors(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    std::vector<int> sign(rep.dim());
    for (std::size_t i = 0; i < rep.dim(); ++i) {
      const double x = rep.vectors(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(i));
      sign[i] = std::abs(x) <= rep.eps_orth ? 0 : (x > 0 ? 1 : -1);
    }
    auto [it, fresh] = index.emplace(sign, static_cast<std::uint32_t>(out.patterns.size()));
    if (fresh) out.patterns.push_back(sign);
    colors[v] = it->second;
  }
  out.coloring = VertexColoring(std::move(colors), static_cast<std::uint32_t>(out.patterns.size()));
  if (!out.coloring.is_proper(h))
    throw VerificationError("coloring_from_representation: sign coloring is not proper (vectors too close to the tolerance)");
  return out;
}

inline SignPatternColoring coloring_from_representation(const Graph& g, const RealOrthogonalRepresentation& rep) {
  return coloring_from_representation(UniformHypergraph::from_graph(g), rep);
}

/// The ±1 vectors u_A with (u_A)_i = +1 iff i ∈ A, on frankl_rodl_graph(t).
/// Adjacent sets satisfy <u_A,u_B> = t - 2|A△B| = 0 exactly.
inline RealOrthogonalRepresentation frankl_rodl_representation(std::uint32_t t) {
  const auto fr = frankl_rodl_graph(t);
  RealOrthogonalRepresentation rep;
  rep.eps_orth = 0.0;
  rep.vectors.resize(static_cast<Eigen::Index>(fr.subsets.size()), t);
  for (std::size_t v = 0; v < fr.subsets.size(); ++v)
    for (std::uint32_t i = 0; i < t; ++i)
      rep.vectors(static_cast<Eigen::Index>(v), i) = ((fr.subsets[v] >> i) & 1U) ? 1.0 : -1.0;
  return rep;
}

}  // namespace orthodim
