#pragma once

#include <string>
#include <vector>

#include "orthodim/representations/types.hpp"

namespace orthodim {

/// Largest output dimension symmetrize will materialize.
inline constexpr std::size_t kMaxSymmetrizedDimension = std::size_t{1} << 22;

/// Tensor symmetrization of an orthogonal representation along a collection
/// of disjoint k-tuples. For each tuple a:
///   w_{a[1]} = (u_{a[1]} ⊗ ... ⊗ u_{a[k]})^{⊗k}
///   w_{a[2]} = u_{a[1]}^{⊗k} ⊗ ... ⊗ u_{a[k]}^{⊗k}
/// and every other vertex gets u_v^{⊗k²}. The output lives in dimension t^{k²}.
inline ExactOrthogonalRepresentation symmetrize(const UniformHypergraph& h, const ExactOrthogonalRepresentation& rep,
                                                const TupleCollection& a) {
  const auto report = verify_exact(h, rep);
  if (!report.valid()) throw InvalidArgument("symmetrize: input is not an orthogonal representation (" + report.summary() + ")");
  const std::size_t k = a.k;
  std::size_t dim = 1;
  for (std::size_t i = 0; i < k * k; ++i) {
    dim *= rep.dim;
    if (dim > kMaxSymmetrizedDimension)
      throw CapacityError("symmetrize: output dimension " + std::to_string(rep.dim) + "^" + std::to_string(k * k) +
                          " exceeds " + std::to_string(kMaxSymmetrizedDimension));
  }
  for (const auto& tup : a.tuples) {
    for (Vertex v : tup) detail::require(v < h.num_vertices(), "symmetrize: tuple vertex out of range");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j)
        if (inner_product(rep.vectors[tup[i]], rep.vectors[tup[j]]).is_zero()) {
          std::string t;
          for (Vertex v : tup) t += (t.empty() ? "" : ",") + std::to_string(v + 1);
          throw InvalidArgument("symmetrize: tuple (" + t + ") has orthogonal entries " + std::to_string(tup[i] + 1) +
                                " and " + std::to_string(tup[j] + 1));
        }
  }

  std::vector<ExactVector> w(h.num_vertices());
  std::vector<bool> done(h.num_vertices(), false);
  const int kk = static_cast<int>(k);
  for (const auto& tup : a.tuples) {
    ExactVector chain = rep.vectors[tup[0]];
    ExactVector powers = tensor_power(rep.vectors[tup[0]], kk);
    for (std::size_t i = 1; i < k; ++i) {
      chain = tensor_product(chain, rep.vectors[tup[i]]);
      powers = tensor_product(powers, tensor_power(rep.vectors[tup[i]], kk));
    }
    w[tup[0]] = tensor_power(chain, kk);
    w[tup[1]] = std::move(powers);
    done[tup[0]] = done[tup[1]] = true;
  }
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    if (!done[v]) w[v] = tensor_power(rep.vectors[v], kk * kk);
  return ExactOrthogonalRepresentation(rep.field, dim, std::move(w));
}

}  // namespace orthodim
