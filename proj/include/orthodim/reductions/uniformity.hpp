#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "orthodim/combinatorics/families.hpp"
#include "orthodim/combinatorics/io.hpp"
#include "orthodim/exactalg/field.hpp"
#include "orthodim/reductions/provenance.hpp"
#include "orthodim/representations/types.hpp"

namespace orthodim {

struct UniformityLimits {
  std::size_t max_vertices = 1'000'000;
  std::size_t max_hyperedges = 5'000'000;  // before deduplication
};

struct UniformityReduction {
  UniformHypergraph hypergraph;
  std::size_t k1 = 0, k2 = 0, m = 0;
  std::size_t s = 0;       // ceil(k2/k1)
  std::size_t copies = 0;  // ell
  Provenance provenance;

  /// Global index of vertex j in copy i (both 0-based).
  Vertex vertex(std::size_t copy, Vertex j, std::size_t n) const { return static_cast<Vertex>(copy * n + j); }
};

/// ell = binom(m^{k1^2} + s - 1, s - 1), exactly.
inline BigInt uniformity_copies(std::size_t k1, std::size_t k2, std::size_t m) {
  detail::require(k2 >= k1 && k1 >= 2, "uniformity: need k2 >= k1 >= 2");
  detail::require(m >= 1, "uniformity: need m >= 1");
  const std::size_t s = (k2 + k1 - 1) / k1;
  BigInt top = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(k1 * k1)) + BigInt(s - 1);
  BigInt r = 1;
  for (std::size_t i = 0; i < s - 1; ++i) r = r * (top - BigInt(i)) / BigInt(i + 1);
  return r;
}

namespace detail {

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  if (k > n) return;
  while (true) {
    f(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace detail

/// Copy-and-union lift of a k1-uniform hypergraph to arity k2. For every
/// s-1 distinct copies with one hyperedge each, a further copy, one of its
/// hyperedges and a (k2-(s-1)k1)-subset of it, the union is a hyperedge.
inline UniformityReduction uniformity_reduce(const UniformHypergraph& h1, std::size_t k2, std::size_t m,
                                             const UniformityLimits& limits = {}) {
  const std::size_t k1 = h1.uniformity();
  const BigInt ell_big = uniformity_copies(k1, k2, m);
  const std::size_t n = h1.num_vertices();
  if (ell_big * BigInt(std::max<std::size_t>(n, 1)) > BigInt(limits.max_vertices))
    throw CapacityError("uniformity_reduce: ell = " + ell_big.str() + " copies of " + std::to_string(n) +
                        " vertices exceeds the ceiling of " + std::to_string(limits.max_vertices));
  UniformityReduction out;
  out.k1 = k1;
  out.k2 = k2;
  out.m = m;
  out.s = (k2 + k1 - 1) / k1;
  out.copies = static_cast<std::size_t>(ell_big);
  const std::size_t ell = out.copies, s = out.s;
  const std::size_t tail = k2 - (s - 1) * k1;
  const std::size_t me = h1.num_hyperedges();

  BigInt estimate = BigInt(binomial(k1, tail)) * BigInt(ell - (s - 1));
  for (std::size_t i = 0; i < s; ++i) estimate *= BigInt(me);
  {
    BigInt c = 1;  // binom(ell, s-1)
    for (std::size_t i = 0; i < s - 1; ++i) c = c * BigInt(ell - i) / BigInt(i + 1);
    estimate *= c;
  }
  if (estimate > BigInt(limits.max_hyperedges))
    throw CapacityError("uniformity_reduce: " + estimate.str() + " hyperedges exceeds the ceiling of " +
                        std::to_string(limits.max_hyperedges));

  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(estimate));
  std::vector<std::vector<std::size_t>> tails;
  detail::combinations(k1, tail, [&](const std::vector<std::size_t>& c) { tails.push_back(c); });
  if (me) detail::combinations(ell, s - 1, [&](const std::vector<std::size_t>& head) {
    for (std::size_t last = 0; last < ell; ++last) {
      if (std::find(head.begin(), head.end(), last) != head.end()) continue;
      // Odometer over the hyperedge chosen in each head copy.
      std::vector<std::size_t> pick(s - 1, 0);
      while (true) {
        std::vector<Vertex> base;
        for (std::size_t j = 0; j < s - 1; ++j)
          for (Vertex v : h1.hyperedge(pick[j])) base.push_back(out.vertex(head[j], v, n));
        for (std::size_t e = 0; e < me; ++e) {
          const auto le = h1.hyperedge(e);
          for (const auto& t : tails) {
            auto full = base;
            for (auto i : t) full.push_back(out.vertex(last, le[i], n));
            edges.push_back(std::move(full));
          }
        }
        std::size_t pos = 0;
        while (pos < s - 1 && ++pick[pos] == me) pick[pos++] = 0;
        if (pos == s - 1) break;
      }
    }
  });
  out.hypergraph = UniformHypergraph::from_hyperedges_dedup(n * ell, k2, std::move(edges));
  out.provenance.reduction = "uniformity";
  out.provenance.add("k1", k1);
  out.provenance.add("k2", k2);
  out.provenance.add("m", m);
  out.provenance.add("s", s);
  out.provenance.add("ell", ell);
  out.provenance.input_digests = {digest_hex(to_string(h1))};
  return out;
}

/// Gives every copy of vertex j the vector of j. The result represents the
/// reduced hypergraph whenever rep represents h1.
inline ExactOrthogonalRepresentation transport_uniformity_representation(const UniformHypergraph& h1,
                                                                        const ExactOrthogonalRepresentation& rep,
                                                                        const UniformityReduction& reduced) {
  const auto report = verify_exact(h1, rep);
  if (!report.valid())
    throw InvalidArgument("transport_uniformity_representation: input is not a representation (" + report.summary() + ")");
  const std::size_t n = h1.num_vertices();
  detail::require(reduced.hypergraph.num_vertices() == n * reduced.copies,
                  "transport_uniformity_representation: reduced hypergraph does not match the input");
  std::vector<ExactVector> vs;
  vs.reserve(n * reduced.copies);
  for (std::size_t c = 0; c < reduced.copies; ++c) vs.insert(vs.end(), rep.vectors.begin(), rep.vectors.end());
  ExactOrthogonalRepresentation out(rep.field, rep.dim, std::move(vs));
  const auto check = verify_exact(reduced.hypergraph, out);
  if (!check.valid()) throw VerificationError("transport_uniformity_representation: " + check.summary());
  return out;
}

}  // namespace orthodim
