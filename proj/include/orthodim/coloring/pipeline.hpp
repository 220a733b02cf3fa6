#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orthodim/combinatorics/exact_search.hpp"
#include "orthodim/sdp/rounding.hpp"
#include "orthodim/sdp/solver.hpp"

namespace orthodim {

enum class ViolationPolicy { best_effort, strict };

struct ColoringRunConfig {
  double exponent = 0.75;  // high-degree threshold n^exponent
  SdpConfig sdp;
  std::uint64_t seed = 0;
  ViolationPolicy policy = ViolationPolicy::best_effort;
  std::size_t first_rank = 16;  // tried before the default rank
  double kappa_slack = 1e-3;    // vectors are sought at kappa = 3 + kappa_slack
  int rounding_trials = kDefaultRoundingTrials;

  void validate() const {
    detail::require(exponent > 0.0 && exponent < 1.0, "coloring: exponent must lie in (0,1)");
    detail::require(rounding_trials >= 1, "coloring: rounding trials must be positive");
    detail::require(kappa_slack >= 0.0 && kappa_slack < 1.0, "coloring: kappa slack must lie in [0,1)");
    sdp.validate();
  }
};

enum class Branch { degree, sdp, greedy };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::degree: return "degree";
    case Branch::sdp: return "sdp";
    default: return "greedy";
  }
}

struct IndependentSetResult {
  std::vector<Vertex> set;
  Branch branch = Branch::sdp;
  std::size_t trigger_degree = 0;  // degree branch only
  double kappa = 3.0;              // sdp branch: level the vectors were rounded at
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  std::optional<RowMatrix> vectors;  // vector coloring used by the sdp branch
};

namespace detail {

// Minimum-degree greedy independent set; ties go to the lowest index.
inline std::vector<Vertex> greedy_independent_set(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> out;
  for (std::size_t left = n; left > 0;) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (!found || deg[v] < deg[best])) {
        best = v;
        found = true;
      }
    out.push_back(best);
    std::vector<Vertex> gone{best};
    for (Vertex u : g.neighbors(best))
      if (alive[u]) gone.push_back(u);
    for (Vertex u : gone) {
      alive[u] = 0;
      --left;
      for (Vertex w : g.neighbors(u))
        if (alive[w]) --deg[w];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void violation(IndependentSetResult& r, const ColoringRunConfig& cfg, const std::string& what) {
  if (cfg.policy == ViolationPolicy::strict) throw VerificationError("promise violated: " + what);
  r.violations.push_back(what);
}

}  // namespace detail

/// One independent set of g, assuming od(g) <= 3. A vertex of degree at least
/// n^exponent gives the larger side of its bipartite neighbourhood; otherwise
/// a vector 3-coloring is rounded with KMS hyperplane thresholds.
inline IndependentSetResult find_independent_set_od3(const Graph& g, const ColoringRunConfig& cfg,
                                                     const RowMatrix* warm = nullptr) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  detail::require(n > 0, "find_independent_set_od3: empty graph");
  IndependentSetResult r;
  const double delta = std::pow(static_cast<double>(n), cfg.exponent);
  Vertex hub = 0;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(hub)) hub = v;
  if (static_cast<double>(g.degree(hub)) >= delta) {
    r.trigger_degree = g.degree(hub);
    const auto nb = g.neighbors(hub);
    if (auto two = two_color_neighborhood(g, hub)) {
      std::vector<Vertex> side[2];
      for (std::size_t i = 0; i < nb.size(); ++i) side[two->colors[i]].push_back(nb[i]);
      r.branch = Branch::degree;
      r.set = side[0].size() >= side[1].size() ? side[0] : side[1];
      std::sort(r.set.begin(), r.set.end());
      return r;
    }
    detail::violation(r, cfg, "neighbourhood of vertex " + std::to_string(hub + 1) + " is not bipartite");
    r.branch = Branch::greedy;
    r.set = detail::greedy_independent_set(g);
    return r;
  }

  SdpConfig first = cfg.sdp;
  if (first.rank == 0) first.rank = cfg.first_rank;
  const double target = 3.0 + cfg.kappa_slack;
  auto vc = vector_coloring_at(g, target, false, first, warm);
  if (!vc && cfg.sdp.rank == 0) {
    r.notes.push_back("rank " + std::to_string(first.rank) + " failed at kappa 3, retried at the default rank");
    vc = vector_coloring_at(g, target, false, cfg.sdp);
  }
  if (!vc) {
    detail::violation(r, cfg, "no vector 3-coloring found");
    const auto res = vector_chromatic(g, cfg.sdp);
    vc = res.coloring;
    vc->kappa = std::max(res.kappa, 2.0);
  }
  r.kappa = vc->kappa;
  r.branch = Branch::sdp;
  r.set = kms_independent_set(g, *vc, vc->kappa, cfg.seed, cfg.rounding_trials, cfg.sdp);
  r.vectors = std::move(vc->vectors);
  if (r.set.empty()) {
    r.notes.push_back("rounding returned no vertex, used the greedy independent set");
    r.branch = Branch::greedy;
    r.set = detail::greedy_independent_set(g);
  }
  return r;
}

struct ColoringIteration {
  std::size_t iteration = 0;
  Branch branch = Branch::sdp;
  std::size_t set_size = 0;
  std::size_t residual = 0;  // vertices left before this iteration
  std::size_t trigger_degree = 0;
  std::vector<std::string> violations;
};

struct ColoringReport {
  VertexColoring coloring;
  std::size_t colors = 0;
  std::vector<ColoringIteration> log;
  std::vector<std::string> notes;

  std::size_t violation_count() const {
    std::size_t c = 0;
    for (const auto& it : log) c += it.violations.size();
    return c;
  }

  void write(std::ostream& out) const {
    out << "c target: O~(n^{1/4}) colors with plain KMS rounding\n";
    for (const auto& it : log) {
      out << "i " << it.iteration << ' ' << branch_name(it.branch) << ' ' << it.set_size << ' ' << it.residual << '\n';
      for (const auto& v : it.violations) out << "c violation " << it.iteration << ' ' << v << '\n';
    }
    out << "colors " << colors << '\n';
  }
};

/// Repeatedly removes an independent set and gives it a fresh color. The
/// vectors of the last SDP solve, restricted to the survivors, warm-start the
/// next one.
inline ColoringReport color_od3_graph(const Graph& g, const ColoringRunConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  detail::require(n > 0, "color_od3_graph: empty graph");
  ColoringReport rep;
  std::vector<std::uint32_t> color(n, 0);
  std::vector<Vertex> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = v;
  std::optional<RowMatrix> warm;  // rows indexed like `alive`
  std::uint32_t next = 0;
  for (std::size_t iter = 1; !alive.empty(); ++iter) {
    const Graph residual = g.induced_subgraph(alive);
    ColoringRunConfig local = cfg;
    local.seed = cfg.seed + iter;
    auto found = find_independent_set_od3(residual, local, warm ? &*warm : nullptr);
    if (found.set.empty()) throw VerificationError("color_od3_graph: empty independent set");
    for (std::size_t i = 0; i + 1 < found.set.size(); ++i)
      for (std::size_t j = i + 1; j < found.set.size(); ++j)
        if (residual.adjacent(found.set[i], found.set[j]))
          throw VerificationError("color_od3_graph: extracted set is not independent");
    ColoringIteration it{iter, found.branch, found.set.size(), alive.size(), found.trigger_degree, found.violations};
    rep.log.push_back(std::move(it));
    for (const auto& note : found.notes) rep.notes.push_back("iteration " + std::to_string(iter) + ": " + note);

    std::vector<char> taken(alive.size(), 0);
    for (Vertex v : found.set) {
      taken[v] = 1;
      color[alive[v]] = next;
    }
    ++next;
    std::vector<Vertex> keep;
    std::vector<Eigen::Index> rows;
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (!taken[i]) {
        keep.push_back(alive[i]);
        rows.push_back(static_cast<Eigen::Index>(i));
      }
    if (found.vectors && !found.violations.size()) {
      warm = RowMatrix(static_cast<Eigen::Index>(rows.size()), found.vectors->cols());
      for (std::size_t i = 0; i < rows.size(); ++i) warm->row(static_cast<Eigen::Index>(i)) = found.vectors->row(rows[i]);
    } else if (warm) {
      RowMatrix w(static_cast<Eigen::Index>(rows.size()), warm->cols());
      for (std::size_t i = 0; i < rows.size(); ++i) w.row(static_cast<Eigen::Index>(i)) = warm->row(rows[i]);
      warm = std::move(w);
    }
    alive = std::move(keep);
  }
  rep.coloring = VertexColoring(std::move(color), next);
  rep.colors = next;
  if (!rep.coloring.is_proper(g)) throw VerificationError("color_od3_graph: coloring is not proper");
  return rep;
}

}  // namespace orthodim
