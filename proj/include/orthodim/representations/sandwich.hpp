#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "orthodim/combinatorics/exact_search.hpp"
#include "orthodim/representations/od_search.hpp"
#include "orthodim/representations/refute.hpp"
#include "orthodim/sdp/solver.hpp"

namespace orthodim {

struct SandwichOptions {
  SearchLimits limits;
  SdpConfig sdp;
  double eps_sdp = 1e-3;
  bool use_sdp = true;
  std::size_t sdp_max_vertices = 200;
  bool use_refuter = true;
  std::uint64_t refuter_budget = 100000;
};

/// Bounds on the real orthogonality dimension with their certificates.
struct OdBounds {
  std::uint32_t lower = 1;
  std::uint32_t upper = 1;
  std::optional<std::uint32_t> chromatic;  // exact chi when it was computed
  VertexColoring coloring;                 // proper coloring with `upper` colors
  std::optional<SdpResult> strict_sdp;     // graphs only
  std::optional<std::uint32_t> clique;     // graphs only
  std::optional<RefutationOutcome> refuter;  // set when the refuter ran
  std::vector<std::string> lower_reasons;  // every bound that attains `lower`
  std::vector<std::string> notes;          // skipped bounds, capacity overruns

  bool closed() const noexcept { return lower == upper; }
};

/// Smallest L with 3^L >= c.
inline std::uint32_t ceil_log3(std::uint64_t c) {
  std::uint32_t l = 0;
  for (std::uint64_t p = 1; p < c; p *= 3) ++l;
  return l;
}

namespace detail {

// First-fit: each vertex takes the least color that completes no monochromatic hyperedge.
inline VertexColoring greedy_hypergraph_coloring(const UniformHypergraph& h) {
  const std::size_t n = h.num_vertices();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> c(n, kUnset);
  std::uint32_t palette = n ? 1 : 0;
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t col = 0;; ++col) {
      bool ok = true;
      for (auto ei : h.incident(v)) {
        bool mono = true;
        for (Vertex w : h.hyperedge(ei))
          if (w != v && c[w] != col) mono = false;
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok) {
        c[v] = col;
        palette = std::max(palette, col + 1);
        break;
      }
    }
  }
  return VertexColoring(std::move(c), palette);
}

inline OdBounds sandwich_impl(const UniformHypergraph& h, const Graph* g, const SandwichOptions& opt) {
  OdBounds b;
  const std::size_t n = h.num_vertices();
  auto raise = [&](std::uint32_t value, const std::string& why) {
    if (value > b.lower) {
      b.lower = value;
      b.lower_reasons.clear();
    }
    if (value == b.lower) b.lower_reasons.push_back(why);
  };
  b.lower_reasons.push_back("nonzero vectors");

  try {
    const auto chi = g ? chromatic_number_exact(*g, opt.limits) : hypergraph_chromatic_number_exact(h, opt.limits);
    b.chromatic = chi.value;
    b.coloring = chi.witness;
  } catch (const CapacityError& e) {
    b.notes.push_back(std::string("exact chromatic number skipped: ") + e.what());
    b.coloring = g ? greedy_coloring(*g) : greedy_hypergraph_coloring(h);
  }
  b.upper = std::max<std::uint32_t>(b.coloring.palette, n ? 1 : 0);
  if (n == 0) {
    b.lower = b.upper = 0;
    return b;
  }
  if (h.num_hyperedges() == 0) return b;

  raise(2, "hyperedge present");
  if (b.chromatic) {
    if (*b.chromatic > 2) raise(3, "not 2-colorable");
    raise(ceil_log3(*b.chromatic), "ceil(log_3 chi)");
  } else {
    try {
      if (!od_at_most_two(h, opt.limits)) raise(3, "not 2-colorable");
    } catch (const CapacityError& e) {
      b.notes.push_back(std::string("2-colorability skipped: ") + e.what());
    }
  }

  if (g) {
    try {
      const auto w = maximum_clique(*g, opt.limits);
      b.clique = w.value;
      raise(w.value, "clique");
    } catch (const CapacityError& e) {
      b.notes.push_back(std::string("clique number skipped: ") + e.what());
    }
    if (opt.use_sdp && n <= opt.sdp_max_vertices) {
      b.strict_sdp = strict_vector_chromatic(*g, opt.sdp);
      if (!b.strict_sdp->converged) b.notes.push_back("strict vector chromatic solve did not converge");
      raise(static_cast<std::uint32_t>(std::ceil(b.strict_sdp->kappa - opt.eps_sdp)), "ceil(svchrom - eps)");
    } else if (opt.use_sdp) {
      b.notes.push_back("SDP skipped: more than " + std::to_string(opt.sdp_max_vertices) + " vertices");
    }
    if (opt.use_refuter && b.lower < 4 && b.upper >= 4) {
      b.refuter = refute_dimension_three(*g, opt.refuter_budget);
      if (*b.refuter == RefutationOutcome::refuted) raise(4, "dimension 3 refuted");
      else if (*b.refuter == RefutationOutcome::budget) b.notes.push_back("dimension 3 refuter ran out of budget");
    }
  }
  if (b.lower > b.upper)
    throw VerificationError("od_sandwich: lower bound " + std::to_string(b.lower) + " exceeds upper bound " +
                            std::to_string(b.upper));
  return b;
}

}  // namespace detail

/// log_3 chi <= od <= chi, sharpened for graphs by the clique number, the
/// strict vector chromatic number and a dimension 3 refutation.
inline OdBounds od_sandwich(const Graph& g, const SandwichOptions& opt = {}) {
  return detail::sandwich_impl(UniformHypergraph::from_graph(g), &g, opt);
}

inline OdBounds od_sandwich(const UniformHypergraph& h, const SandwichOptions& opt = {}) {
  if (auto g = h.as_graph()) return detail::sandwich_impl(h, &*g, opt);
  return detail::sandwich_impl(h, nullptr, opt);
}

}  // namespace orthodim
