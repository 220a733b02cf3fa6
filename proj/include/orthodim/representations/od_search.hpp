#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orthodim/combinatorics/exact_search.hpp"
#include "orthodim/representations/types.hpp"

namespace orthodim {

struct FiniteFieldOd {
  std::uint32_t dimension = 0;
  ExactOrthogonalRepresentation witness;
};

namespace detail {

// Projective points of GF(p)^t (first nonzero coordinate 1) with nonzero
// self inner product, in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> nonisotropic_points(std::uint32_t p, std::uint32_t t,
                                                                   std::size_t max_points) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> v(t, 0);
  while (true) {
    std::size_t lead = 0;
    while (lead < t && v[lead] == 0) ++lead;
    if (lead < t && v[lead] == 1) {
      std::uint64_t norm = 0;
      for (auto x : v) norm += static_cast<std::uint64_t>(x) * x;
      if (norm % p != 0) {
        out.push_back(v);
        if (out.size() > max_points)
          throw CapacityError("od_exact_finite_field: more than " + std::to_string(max_points) +
                              " candidate vectors in GF(" + std::to_string(p) + ")^" + std::to_string(t));
      }
    }
    std::size_t i = t;
    while (i > 0 && ++v[i - 1] == p) v[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// Invariant of v under signed coordinate permutations and nonzero scaling.
inline std::vector<std::uint32_t> orbit_key(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  std::vector<std::uint32_t> best;
  for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
    std::vector<std::uint32_t> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::uint32_t x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v[i]) * lambda) % p);
      w[i] = std::min(x, (p - x) % p);
    }
    std::sort(w.begin(), w.end());
    if (best.empty() || w < best) best = std::move(w);
  }
  return best;
}

class FiniteFieldRepSearch {
 public:
  FiniteFieldRepSearch(const UniformHypergraph& h, std::uint32_t p, std::uint32_t t, const SearchLimits& limits,
                       std::size_t max_points)
      : h_(h), p_(p), t_(t), max_nodes_(limits.max_nodes) {
    pts_ = nonisotropic_points(p, t, max_points);
    m_ = pts_.size();
    w_ = (m_ + 63) / 64;
    orth_.assign(m_ * w_, 0);
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b) {
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i < t; ++i) s += static_cast<std::uint64_t>(pts_[a][i]) * pts_[b][i];
        if (s % p == 0) orth_[a * w_ + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    reps_.assign(w_, 0);
    std::map<std::vector<std::uint32_t>, bool> seen;
    for (std::size_t a = 0; a < m_; ++a)
      if (seen.emplace(orbit_key(pts_[a], p), true).second) reps_[a / 64] |= std::uint64_t{1} << (a % 64);
  }

  std::optional<ExactOrthogonalRepresentation> run() {
    const std::size_t n = h_.num_vertices();
    const Field f = Field::gf(p_);
    if (n == 0) return ExactOrthogonalRepresentation(f, t_, {});
    if (m_ == 0) return std::nullopt;
    assign_.assign(n, -1);
    std::vector<std::uint64_t> dom(n * w_, 0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t a = 0; a < m_; ++a) dom[v * w_ + a / 64] |= std::uint64_t{1} << (a % 64);
    // The signed permutation group acts on all-full domains, so the first
    // branching vertex may be restricted to one point per orbit.
    std::size_t root = 0;
    for (std::size_t v = 1; v < n; ++v)
      if (h_.incident(static_cast<Vertex>(v)).size() > h_.incident(static_cast<Vertex>(root)).size()) root = v;
    for (std::size_t i = 0; i < w_; ++i) dom[root * w_ + i] &= reps_[i];
    if (!search(dom, root)) return std::nullopt;
    std::vector<ExactVector> vs;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<long long> c(pts_[static_cast<std::size_t>(assign_[v])].begin(),
                               pts_[static_cast<std::size_t>(assign_[v])].end());
      vs.emplace_back(f, c);
    }
    return ExactOrthogonalRepresentation(f, t_, std::move(vs));
  }

 private:
  bool orth(std::size_t a, std::size_t b) const { return (orth_[a * w_ + b / 64] >> (b % 64)) & 1U; }

  std::size_t dom_count(const std::vector<std::uint64_t>& dom, std::size_t v) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_; ++i) c += static_cast<std::size_t>(std::popcount(dom[v * w_ + i]));
    return c;
  }

  // Filters domains after v has been assigned; false on a dead end.
  bool propagate(std::vector<std::uint64_t>& dom, Vertex v) const {
    for (auto ei : h_.incident(v)) {
      auto e = h_.hyperedge(ei);
      bool satisfied = false;
      int free_count = 0;
      Vertex free = 0;
      for (std::size_t a = 0; a < e.size() && !satisfied; ++a) {
        if (assign_[e[a]] < 0) {
          ++free_count;
          free = e[a];
          continue;
        }
        for (std::size_t b = a + 1; b < e.size(); ++b)
          if (assign_[e[b]] >= 0 &&
              orth(static_cast<std::size_t>(assign_[e[a]]), static_cast<std::size_t>(assign_[e[b]]))) {
            satisfied = true;
            break;
          }
      }
      if (satisfied) continue;
      if (free_count == 0) return false;
      if (free_count == 1) {
        std::vector<std::uint64_t> mask(w_, 0);
        for (Vertex u : e)
          if (assign_[u] >= 0)
            for (std::size_t i = 0; i < w_; ++i) mask[i] |= orth_[static_cast<std::size_t>(assign_[u]) * w_ + i];
        bool any = false;
        for (std::size_t i = 0; i < w_; ++i) {
          dom[free * w_ + i] &= mask[i];
          any = any || dom[free * w_ + i] != 0;
        }
        if (!any) return false;
      }
    }
    return true;
  }

  bool search(const std::vector<std::uint64_t>& dom, std::size_t forced) {
    if (++nodes_ > max_nodes_)
      throw CapacityError("od_exact_finite_field: search exceeded node budget at t=" + std::to_string(t_));
    const std::size_t n = assign_.size();
    std::size_t v = forced;
    if (v == n) {
      std::size_t best = SIZE_MAX;
      for (std::size_t u = 0; u < n; ++u) {
        if (assign_[u] >= 0) continue;
        const std::size_t c = dom_count(dom, u);
        if (c < best) {
          best = c;
          v = u;
        }
      }
      if (v == n) return true;
    }
    for (std::size_t i = 0; i < w_; ++i) {
      std::uint64_t bits = dom[v * w_ + i];
      while (bits) {
        const std::size_t a = i * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        assign_[v] = static_cast<std::int64_t>(a);
        std::vector<std::uint64_t> next = dom;
        if (propagate(next, static_cast<Vertex>(v)) && search(next, n)) return true;
        assign_[v] = -1;
      }
    }
    return false;
  }

  const UniformHypergraph& h_;
  std::uint32_t p_;
  std::uint32_t t_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::uint32_t>> pts_;
  std::size_t m_ = 0;
  std::size_t w_ = 0;
  std::vector<std::uint64_t> orth_;
  std::vector<std::uint64_t> reps_;
  std::vector<std::int64_t> assign_;
};

}  // namespace detail

/// Candidate-count ceiling for the finite-field search (points of PG(t-1,p)).
inline constexpr std::size_t kMaxFiniteFieldCandidates = 4096;

/// A t-dimensional orthogonal representation of h over GF(p), if one exists.
inline std::optional<ExactOrthogonalRepresentation> finite_field_representation(const UniformHypergraph& h,
                                                                                std::uint32_t p, std::uint32_t t,
                                                                                const SearchLimits& limits = {}) {
  detail::require(is_prime(p), "finite_field_representation: p must be prime");
  detail::require(t >= 1, "finite_field_representation: dimension must be positive");
  return detail::FiniteFieldRepSearch(h, p, t, limits, kMaxFiniteFieldCandidates).run();
}

/// Smallest t <= t_max admitting an orthogonal representation over GF(p),
/// with a witness. Candidate vectors are nonisotropic and deduplicated up to
/// scalars; the first branching vertex only tries one vector per orbit of the
/// signed coordinate permutations.
inline std::optional<FiniteFieldOd> od_exact_finite_field(const UniformHypergraph& h, std::uint32_t p,
                                                          std::uint32_t t_max, const SearchLimits& limits = {}) {
  detail::require(is_prime(p), "od_exact_finite_field: p must be prime");
  for (std::uint32_t t = 1; t <= t_max; ++t) {
    if (t == 1 && h.num_hyperedges() > 0) continue;  // nonzero vectors in F^1 are never orthogonal
    if (auto rep = finite_field_representation(h, p, t, limits)) return FiniteFieldOd{t, std::move(*rep)};
  }
  return std::nullopt;
}

inline std::optional<FiniteFieldOd> od_exact_finite_field(const Graph& g, std::uint32_t p, std::uint32_t t_max,
                                                          const SearchLimits& limits = {}) {
  return od_exact_finite_field(UniformHypergraph::from_graph(g), p, t_max, limits);
}

/// od(h) <= 2 exactly when h is 2-colorable (over every field).
inline bool od_at_most_two(const UniformHypergraph& h, const SearchLimits& limits = {}) {
  return is_two_colorable(h, limits).has_value();
}

}  // namespace orthodim
