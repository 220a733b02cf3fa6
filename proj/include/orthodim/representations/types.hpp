#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "orthodim/combinatorics/graph.hpp"
#include "orthodim/error.hpp"
#include "orthodim/exactalg/linalg.hpp"

namespace orthodim {

/// Per-vertex vectors of a common dimension over GF(p) or Q.
struct ExactOrthogonalRepresentation {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<ExactVector> vectors;

  ExactOrthogonalRepresentation() = default;
  ExactOrthogonalRepresentation(Field f, std::size_t t, std::vector<ExactVector> vs)
      : field(f), dim(t), vectors(std::move(vs)) {
    for (const auto& v : vectors) {
      detail::require(v.field() == field, "representation: vector over " + v.field().name() + ", expected " + field.name());
      detail::require(v.dim() == dim, "representation: vector of dimension " + std::to_string(v.dim()) +
                                          ", expected " + std::to_string(dim));
    }
  }

  std::size_t size() const noexcept { return vectors.size(); }
};

/// Real vectors, one row per vertex, with the tolerances used to judge them.
struct RealOrthogonalRepresentation {
  Eigen::MatrixXd vectors;  // n x t
  double eps_orth = 1e-9;
  double eps_nz = 1e-6;

  std::size_t size() const noexcept { return static_cast<std::size_t>(vectors.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(vectors.cols()); }
};

/// Per-vertex k-dimensional subspaces of R^t, each given by k basis columns.
struct SubspaceRepresentation {
  std::size_t ambient = 0;
  std::size_t k = 0;
  std::vector<Eigen::MatrixXd> bases;  // each ambient x k
  double eps_orth = 1e-9;
  double eps_nz = 1e-6;

  std::size_t size() const noexcept { return bases.size(); }
};

/// Ordered k-tuples of distinct vertices, no vertex shared between tuples.
struct TupleCollection {
  std::size_t k = 2;
  std::vector<std::vector<Vertex>> tuples;

  TupleCollection() = default;
  TupleCollection(std::size_t arity, std::vector<std::vector<Vertex>> ts) : k(arity), tuples(std::move(ts)) {
    detail::require(k >= 2, "tuples: arity must be at least 2");
    std::vector<Vertex> seen;
    for (const auto& t : tuples) {
      detail::require(t.size() == k, "tuples: tuple of size " + std::to_string(t.size()) + ", expected " +
                                         std::to_string(k));
      seen.insert(seen.end(), t.begin(), t.end());
    }
    std::sort(seen.begin(), seen.end());
    detail::require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                    "tuples: a vertex appears twice (tuples must be pairwise disjoint with distinct entries)");
  }
};

struct VerificationReport {
  std::vector<Vertex> bad_vertices;      // zero / isotropic / rank-deficient
  std::vector<std::size_t> bad_edges;    // hyperedge indices with no orthogonal pair
  std::string detail;

  bool valid() const noexcept { return bad_vertices.empty() && bad_edges.empty(); }

  std::string summary() const {
    if (valid()) return "valid";
    std::string s = "invalid:";
    if (!bad_vertices.empty()) s += " " + std::to_string(bad_vertices.size()) + " bad vertices (first " + std::to_string(bad_vertices[0] + 1) + ")";
    if (!bad_edges.empty()) s += " " + std::to_string(bad_edges.size()) + " unsatisfied hyperedges (first #" + std::to_string(bad_edges[0] + 1) + ")";
    if (!detail.empty()) s += "; " + detail;
    return s;
  }
};

namespace detail {

template <class Orth>
void check_hyperedges(const UniformHypergraph& h, VerificationReport& rep, Orth&& orth) {
  for (std::size_t i = 0; i < h.num_hyperedges(); ++i) {
    auto e = h.hyperedge(i);
    bool found = false;
    for (std::size_t a = 0; a < e.size() && !found; ++a)
      for (std::size_t b = a + 1; b < e.size() && !found; ++b) found = orth(e[a], e[b]);
    if (!found) rep.bad_edges.push_back(i);
  }
}

}  // namespace detail

inline VerificationReport verify_exact(const UniformHypergraph& h, const ExactOrthogonalRepresentation& rep) {
  detail::require(rep.size() == h.num_vertices(), "verify_exact: representation has " + std::to_string(rep.size()) +
                                                      " vectors for " + std::to_string(h.num_vertices()) + " vertices");
  VerificationReport r;
  for (Vertex v = 0; v < rep.size(); ++v)
    if (inner_product(rep.vectors[v], rep.vectors[v]).is_zero()) r.bad_vertices.push_back(v);
  detail::check_hyperedges(h, r, [&](Vertex a, Vertex b) {
    return inner_product(rep.vectors[a], rep.vectors[b]).is_zero();
  });
  return r;
}

inline VerificationReport verify_exact(const Graph& g, const ExactOrthogonalRepresentation& rep) {
  return verify_exact(UniformHypergraph::from_graph(g), rep);
}

inline VerificationReport verify_real(const UniformHypergraph& h, const RealOrthogonalRepresentation& rep) {
  detail::require(rep.size() == h.num_vertices(), "verify_real: representation has " + std::to_string(rep.size()) +
                                                      " vectors for " + std::to_string(h.num_vertices()) + " vertices");
  VerificationReport r;
  for (Eigen::Index v = 0; v < rep.vectors.rows(); ++v)
    if (!(std::abs(rep.vectors.row(v).squaredNorm()) >= rep.eps_nz)) r.bad_vertices.push_back(static_cast<Vertex>(v));
  detail::check_hyperedges(h, r, [&](Vertex a, Vertex b) {
    return std::abs(rep.vectors.row(a).dot(rep.vectors.row(b))) <= rep.eps_orth;
  });
  return r;
}

inline VerificationReport verify_real(const Graph& g, const RealOrthogonalRepresentation& rep) {
  return verify_real(UniformHypergraph::from_graph(g), rep);
}

}  // namespace orthodim
