#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "orthodim/combinatorics/graph.hpp"

namespace orthodim {

enum class RefutationOutcome {
  refuted,      // no orthogonal representation in dimension 3 over any field
  inconclusive, // the rules closed without a contradiction
  budget,       // branch budget exhausted
};

namespace detail {

// Parallel classes of vectors in a hypothetical 3-dimensional representation.
// Adjacent vectors are orthogonal, hence not parallel (a vector orthogonal to
// a multiple of itself is isotropic). If x and y are both orthogonal to two
// non-parallel vectors v, w then x and y span the same line: the orthogonal
// complement of span{v,w} in F^3 is one-dimensional for the standard form.
class DimensionThreeRefuter {
 public:
  DimensionThreeRefuter(const Graph& g, std::uint64_t budget) : budget_(budget) {
    State s;
    const std::size_t n = g.num_vertices();
    s.n = n;
    s.parent.resize(n);
    std::iota(s.parent.begin(), s.parent.end(), Vertex{0});
    s.orth.assign(n * n, 0);
    s.apart.assign(n * n, 0);
    s.live.assign(n, 1);
    for (const auto& e : g.edges()) {
      s.set(s.orth, e.u, e.v);
      s.set(s.apart, e.u, e.v);
    }
    root_ = std::move(s);
  }

  RefutationOutcome run() {
    State s = root_;
    const bool consistent = s.propagate();
    if (!consistent) return RefutationOutcome::refuted;
    const auto r = search(std::move(s));
    return r;
  }

 private:
  struct State {
    std::size_t n = 0;
    std::vector<Vertex> parent;
    std::vector<char> orth, apart, live;

    bool get(const std::vector<char>& m, Vertex a, Vertex b) const { return m[a * n + b] != 0; }
    void set(std::vector<char>& m, Vertex a, Vertex b) { m[a * n + b] = m[b * n + a] = 1; }

    // Merges class b into class a. False on contradiction.
    bool merge(Vertex a, Vertex b) {
      if (a == b) return true;
      if (get(apart, a, b)) return false;
      for (Vertex c = 0; c < n; ++c) {
        if (!live[c] || c == b) continue;
        if (get(orth, b, c)) set(orth, a, c);
        if (get(apart, b, c)) set(apart, a, c);
      }
      if (get(orth, a, a)) return false;
      live[b] = 0;
      for (Vertex v = 0; v < n; ++v)
        if (parent[v] == b) parent[v] = a;
      for (Vertex c = 0; c < n; ++c) {
        orth[b * n + c] = orth[c * n + b] = 0;
        apart[b * n + c] = apart[c * n + b] = 0;
      }
      return true;
    }

    std::vector<Vertex> common(Vertex x, Vertex y) const {
      std::vector<Vertex> out;
      for (Vertex c = 0; c < n; ++c)
        if (live[c] && get(orth, x, c) && get(orth, y, c)) out.push_back(c);
      return out;
    }

    bool has_apart_pair(const std::vector<Vertex>& cs) const {
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
          if (get(apart, cs[i], cs[j])) return true;
      return false;
    }

    // Applies the merge rule to a fixpoint. False on contradiction.
    bool propagate() {
      bool changed = true;
      while (changed) {
        changed = false;
        for (Vertex x = 0; x < n && !changed; ++x) {
          if (!live[x]) continue;
          for (Vertex y = x + 1; y < n; ++y) {
            if (!live[y]) continue;
            const auto cs = common(x, y);
            if (cs.size() < 2 || !has_apart_pair(cs)) continue;
            if (!merge(x, y)) return false;
            changed = true;
            break;
          }
        }
      }
      return true;
    }
  };

  // Undecided pair (v, w) inside some common orthogonal set: deciding it
  // either way may trigger the merge rule.
  static bool branch_pair(const State& s, Vertex& v, Vertex& w) {
    for (Vertex x = 0; x < s.n; ++x) {
      if (!s.live[x]) continue;
      for (Vertex y = x + 1; y < s.n; ++y) {
        if (!s.live[y]) continue;
        const auto cs = s.common(x, y);
        for (std::size_t i = 0; i < cs.size(); ++i)
          for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (!s.get(s.apart, cs[i], cs[j])) {
              v = cs[i];
              w = cs[j];
              return true;
            }
      }
    }
    return false;
  }

  RefutationOutcome search(State s) {
    if (nodes_++ >= budget_) return RefutationOutcome::budget;
    Vertex v = 0, w = 0;
    if (!branch_pair(s, v, w)) return RefutationOutcome::inconclusive;
    {
      State t = s;
      if (t.merge(v, w) && t.propagate()) {
        const auto r = search(std::move(t));
        if (r != RefutationOutcome::refuted) return r;
      }
    }
    s.set(s.apart, v, w);
    if (!s.propagate()) return RefutationOutcome::refuted;
    return search(std::move(s));
  }

  State root_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Tries to prove that g has no orthogonal representation in dimension 3
/// over any field, i.e. od(g) >= 4. Sound; incomplete.
inline RefutationOutcome refute_dimension_three(const Graph& g, std::uint64_t branch_budget = 100000) {
  return detail::DimensionThreeRefuter(g, branch_budget).run();
}

}  // namespace orthodim
