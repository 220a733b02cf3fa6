#pragma once

#include <vector>

#include "orthodim/combinatorics/exact_search.hpp"
#include "orthodim/combinatorics/families.hpp"
#include "orthodim/exactalg/linalg.hpp"

namespace orthodim {

/// binom(t+s-2, s-1), an upper bound on the Ramsey number R(s,t).
inline std::uint64_t erdos_szekeres_bound(std::uint64_t s, std::uint64_t t) {
  detail::require(s >= 1 && t >= 1, "erdos_szekeres_bound: s and t must be positive");
  return binomial(t + s - 2, s - 1);
}

namespace detail {

inline void require_nonzero_diagonal(const ExactMatrix& m, const char* who) {
  require(m.is_square(), std::string(who) + ": matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    require(!m.at(i, i).is_zero(), std::string(who) + ": diagonal entry " + std::to_string(i + 1) + " is zero");
}

}  // namespace detail

/// Graph on the rows of m with i ~ i' iff M_{ii'} != 0 or M_{i'i} != 0.
inline Graph nonzero_pattern_graph(const ExactMatrix& m) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < m.rows(); ++i)
    for (Vertex j = i + 1; j < m.rows(); ++j)
      if (!m.at(i, j).is_zero() || !m.at(j, i).is_zero()) es.push_back({i, j});
  return Graph(m.rows(), std::move(es));
}

/// s indices that are pairwise linked in the nonzero pattern of m. Exists
/// whenever the diagonal is nonzero and n >= R(s, rank(m)+1).
inline std::vector<Vertex> ramsey_clique(const ExactMatrix& m, std::uint32_t s, const SearchLimits& limits = {}) {
  detail::require_nonzero_diagonal(m, "ramsey_clique");
  detail::require(s >= 1, "ramsey_clique: s must be positive");
  const std::size_t r = rank(m);
  const std::uint64_t need = erdos_szekeres_bound(s, r + 1);
  detail::require(m.rows() >= need, "ramsey_clique: " + std::to_string(m.rows()) + " rows is below R(" +
                                        std::to_string(s) + "," + std::to_string(r + 1) + ") bound " + std::to_string(need));
  SearchLimits lim = limits;
  lim.independence_max_vertices = std::max<std::size_t>(lim.independence_max_vertices, m.rows());
  auto clique = maximum_clique(nonzero_pattern_graph(m), lim, s);
  if (clique.value < s) throw VerificationError("ramsey_clique: no clique of the guaranteed size was found");
  clique.witness.resize(s);
  return clique.witness;
}

struct GrwReport {
  std::size_t sparsity = 0;  // number of nonzero entries s(M)
  std::size_t rank = 0;
  double bound = 0;  // n^2 / (4 rank)
  bool holds = false;
};

/// Checks s(M) >= n^2 / (4 rank(M)) for a square matrix with nonzero diagonal.
inline GrwReport grw_check(const ExactMatrix& m) {
  detail::require_nonzero_diagonal(m, "grw_check");
  GrwReport r;
  const std::size_t n = m.rows();
  r.sparsity = m.nonzeros();
  r.rank = rank(m);
  if (n == 0) {
    r.holds = true;
    return r;
  }
  r.bound = static_cast<double>(n) * static_cast<double>(n) / (4.0 * static_cast<double>(r.rank));
  r.holds = 4 * r.rank * r.sparsity >= n * n;  // exact integer comparison
  return r;
}

}  // namespace orthodim
