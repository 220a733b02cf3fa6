#pragma once

#include <cmath>
#include <string>

#include "orthodim/representations/types.hpp"

namespace orthodim {

/// Checks dim U_v = k (Gram determinant of the basis >= eps_nz) and that
/// adjacent subspaces are orthogonal (every cross inner product <= eps_orth).
inline VerificationReport verify_subspace(const Graph& g, const SubspaceRepresentation& rep) {
  detail::require(rep.size() == g.num_vertices(), "verify_subspace: representation has " + std::to_string(rep.size()) +
                                                      " subspaces for " + std::to_string(g.num_vertices()) + " vertices");
  VerificationReport r;
  for (Vertex v = 0; v < rep.size(); ++v) {
    const auto& b = rep.bases[v];
    const bool shape = static_cast<std::size_t>(b.rows()) == rep.ambient && static_cast<std::size_t>(b.cols()) == rep.k;
    if (!shape || !((b.transpose() * b).determinant() >= rep.eps_nz)) r.bad_vertices.push_back(v);
  }
  if (!r.bad_vertices.empty()) r.detail = "basis shape or rank wrong";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    const auto& a = rep.bases[e.u];
    const auto& b = rep.bases[e.v];
    if (a.rows() != b.rows() || (a.transpose() * b).cwiseAbs().maxCoeff() > rep.eps_orth) r.bad_edges.push_back(i);
  }
  return r;
}

/// U_v = span{e_c : c in f(v)} inside R^palette.
inline SubspaceRepresentation subspace_from_tuple_coloring(const TupleColoring& f) {
  detail::require(f.is_valid(), "subspace_from_tuple_coloring: invalid tuple coloring");
  SubspaceRepresentation rep;
  rep.ambient = f.palette;
  rep.k = f.k;
  for (auto set : f.sets) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(f.palette, f.k);
    Eigen::Index col = 0;
    for (std::uint32_t c = 0; c < f.palette; ++c)
      if ((set >> c) & 1U) b(c, col++) = 1.0;
    rep.bases.push_back(std::move(b));
  }
  return rep;
}

/// Orthonormal basis of the column span by modified Gram-Schmidt with one
/// re-orthogonalization pass. Throws if a column is (nearly) dependent.
inline Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& a, double eps_nz = 1e-6) {
  Eigen::MatrixXd q = a;
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const double original = q.col(j).norm();
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    const double norm = q.col(j).norm();
    if (!(original > 0) || !(norm >= eps_nz * std::max(1.0, original)))
      throw InvalidArgument("orthonormal_basis: column " + std::to_string(j + 1) + " is linearly dependent on earlier columns");
    q.col(j) /= norm;
  }
  return q;
}

/// Representation of G1 • G2 from a k-subspace representation of G1 and a
/// k-dimensional representation of G2: w_{(x,y)} = B_x u_y, where B_x is an
/// orthonormal basis of U_x. Vertex (x,y) has index x*|V2| + y.
inline RealOrthogonalRepresentation compose_lexicographic(const SubspaceRepresentation& sub,
                                                          const RealOrthogonalRepresentation& inner) {
  detail::require(inner.dim() == sub.k, "compose_lexicographic: inner dimension " + std::to_string(inner.dim()) +
                                            " differs from subspace dimension " + std::to_string(sub.k));
  const Eigen::Index n2 = static_cast<Eigen::Index>(inner.size());
  RealOrthogonalRepresentation out;
  out.eps_orth = std::max(sub.eps_orth, inner.eps_orth);
  out.eps_nz = std::min(sub.eps_nz, inner.eps_nz);
  out.vectors.resize(static_cast<Eigen::Index>(sub.size()) * n2, static_cast<Eigen::Index>(sub.ambient));
  for (std::size_t x = 0; x < sub.size(); ++x) {
    detail::require(static_cast<std::size_t>(sub.bases[x].rows()) == sub.ambient &&
                        static_cast<std::size_t>(sub.bases[x].cols()) == sub.k,
                    "compose_lexicographic: basis of vertex " + std::to_string(x + 1) + " has the wrong shape");
    Eigen::MatrixXd b;
    try {
      b = orthonormal_basis(sub.bases[x], sub.eps_nz);
    } catch (const InvalidArgument&) {
      throw InvalidArgument("compose_lexicographic: degenerate basis at vertex " + std::to_string(x + 1));
    }
    for (Eigen::Index y = 0; y < n2; ++y)
      out.vectors.row(static_cast<Eigen::Index>(x) * n2 + y) = (b * inner.vectors.row(y).transpose()).transpose();
  }
  return out;
}

}  // namespace orthodim
