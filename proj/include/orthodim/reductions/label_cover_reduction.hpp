#pragma once

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orthodim/combinatorics/families.hpp"
#include "orthodim/combinatorics/io.hpp"
#include "orthodim/reductions/label_cover.hpp"
#include "orthodim/reductions/provenance.hpp"
#include "orthodim/representations/types.hpp"

namespace orthodim {

struct LabelCoverLimits {
  std::size_t max_vertices = 200'000;
  std::size_t max_candidates = 200'000'000;  // (pair, pair) tests over all U-pairs and common neighbours
};

/// 4-uniform hypergraph with one Schrijver block C[x] per left vertex.
struct LabelCoverHypergraph {
  UniformHypergraph hypergraph;
  std::uint32_t R = 0, t = 0, s = 0;
  SetSystemGraph block;  // S(R,s); block vertex i is the stable set block.subsets[i]
  std::size_t left = 0;
  Provenance provenance;

  std::size_t block_size() const noexcept { return block.subsets.size(); }
  Vertex vertex(std::size_t x, std::size_t i) const { return static_cast<Vertex>(x * block_size() + i); }
  std::size_t owner(Vertex v) const { return v / block_size(); }
  std::uint64_t stable_set(Vertex v) const { return block.subsets[v % block_size()]; }
};

inline std::uint32_t label_cover_s(std::uint32_t R, std::uint32_t t) {
  detail::require(t >= 1, "label cover reduction: need t >= 1");
  return R > t ? (R - t + 1) / 2 : 0;
}

namespace detail {

inline bool bit(std::uint64_t set, std::uint32_t a) { return (set >> a) & 1U; }

}  // namespace detail

/// Hyperedge {(x,A),(x,B),(y,C),(y,D)} whenever x,y share a neighbour z and
/// every alpha, beta with phi_xz(alpha) = phi_yz(beta) sees both bit values
/// among A_alpha, B_alpha, C_beta, D_beta.
inline LabelCoverHypergraph label_cover_to_hypergraph(const LabelCoverInstance& lc, std::uint32_t t,
                                                      const LabelCoverLimits& limits = {}) {
  lc.validate();
  const std::uint32_t s = label_cover_s(lc.R, t);
  detail::require(s >= 1 && lc.R >= 2 * s,
                  "label cover reduction: need s = ceil((R-t)/2) >= 1 and R >= 2s (R=" + std::to_string(lc.R) +
                      ", t=" + std::to_string(t) + ")");
  detail::require(lc.R <= 63, "label cover reduction: R must be at most 63");
  LabelCoverHypergraph out;
  out.R = lc.R;
  out.t = t;
  out.s = s;
  out.left = lc.left;
  out.block = schrijver_graph(lc.R, s);
  const std::size_t b = out.block_size();
  if (b * lc.left > limits.max_vertices)
    throw CapacityError("label cover reduction: " + std::to_string(b * lc.left) + " vertices exceeds the ceiling of " +
                        std::to_string(limits.max_vertices));

  // Incident edge per (x, z), or none.
  std::vector<std::vector<long>> at(lc.left, std::vector<long>(lc.right, -1));
  for (std::size_t i = 0; i < lc.edges.size(); ++i) at[lc.edges[i].x][lc.edges[i].z] = static_cast<long>(i);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // A < B within a block
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i + 1; j < b; ++j) pairs.emplace_back(i, j);

  std::size_t tests = 0;
  for (std::size_t x = 0; x < lc.left; ++x)
    for (std::size_t y = x + 1; y < lc.left; ++y)
      for (std::size_t z = 0; z < lc.right; ++z)
        if (at[x][z] >= 0 && at[y][z] >= 0) tests += pairs.size() * pairs.size();
  if (tests > limits.max_candidates)
    throw CapacityError("label cover reduction: " + std::to_string(tests) + " candidate hyperedges exceeds the ceiling of " +
                        std::to_string(limits.max_candidates));

  const auto& sets = out.block.subsets;
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t x = 0; x < lc.left; ++x)
    for (std::size_t y = x + 1; y < lc.left; ++y)
      for (std::size_t z = 0; z < lc.right; ++z) {
        if (at[x][z] < 0 || at[y][z] < 0) continue;
        const auto& px = lc.edges[at[x][z]].phi;
        const auto& py = lc.edges[at[y][z]].phi;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> match;
        for (std::uint32_t a = 0; a < lc.R; ++a)
          for (std::uint32_t c = 0; c < lc.R; ++c)
            if (px[a] == py[c]) match.emplace_back(a, c);
        for (const auto& [ia, ib] : pairs)
          for (const auto& [ic, id] : pairs) {
            bool ok = true;
            for (const auto& [a, c] : match) {
              const int sum = detail::bit(sets[ia], a) + detail::bit(sets[ib], a) + detail::bit(sets[ic], c) +
                              detail::bit(sets[id], c);
              if (sum == 0 || sum == 4) {
                ok = false;
                break;
              }
            }
            if (ok) edges.push_back({out.vertex(x, ia), out.vertex(x, ib), out.vertex(y, ic), out.vertex(y, id)});
          }
      }
  out.hypergraph = UniformHypergraph::from_hyperedges_dedup(b * lc.left, 4, std::move(edges));
  out.provenance.reduction = "labelcover";
  out.provenance.add("t", t);
  out.provenance.add("s", s);
  out.provenance.add("R", lc.R);
  out.provenance.add("L", lc.L);
  std::ostringstream src;
  write_label_cover(src, lc);
  out.provenance.input_digests = {digest_hex(src.str())};
  return out;
}

/// Directory: one line `d <vertex> <x> <members of A>` per vertex, all 1-indexed.
inline void write_directory(std::ostream& out, const LabelCoverHypergraph& h) {
  out << "p directory " << h.hypergraph.num_vertices() << ' ' << h.R << ' ' << h.s << '\n';
  for (Vertex v = 0; v < h.hypergraph.num_vertices(); ++v) {
    out << "d " << v + 1 << ' ' << h.owner(v) + 1;
    for (std::uint32_t a = 0; a < h.R; ++a)
      if (detail::bit(h.stable_set(v), a)) out << ' ' << a + 1;
    out << '\n';
  }
}

/// Colors (x,A) by A_{rho(x)}.
inline VertexColoring completeness_coloring(const LabelCoverInstance& lc, const Assignment& rho,
                                            const LabelCoverHypergraph& h) {
  check_assignment(lc, rho);
  for (std::size_t i = 0; i < lc.edges.size(); ++i) {
    const auto& e = lc.edges[i];
    if (e.phi[rho.left[e.x]] != rho.right[e.z])
      throw InvalidArgument("completeness_coloring: assignment violates edge " + std::to_string(i + 1) + " (x=" +
                            std::to_string(e.x + 1) + ", z=" + std::to_string(e.z + 1) + ")");
  }
  detail::require(h.left == lc.left && h.R == lc.R, "completeness_coloring: hypergraph does not match the instance");
  std::vector<std::uint32_t> c(h.hypergraph.num_vertices());
  for (Vertex v = 0; v < c.size(); ++v) c[v] = detail::bit(h.stable_set(v), rho.left[h.owner(v)]);
  VertexColoring col(std::move(c), 2);
  if (!col.is_proper(h.hypergraph)) throw VerificationError("completeness_coloring: coloring is not proper");
  return col;
}

struct DecodeResult {
  Assignment assignment;
  std::vector<std::vector<std::uint32_t>> excluded;  // E(x), increasing
  std::vector<std::pair<Vertex, Vertex>> witness;    // (a_x, b_x), global indices
  std::vector<char> fallback;                        // no non-orthogonal disjoint pair in C[x]

  std::size_t fallbacks() const { return static_cast<std::size_t>(std::count(fallback.begin(), fallback.end(), 1)); }
};

namespace detail {

template <class NonOrth>
DecodeResult soundness_decode_impl(const LabelCoverInstance& lc, const LabelCoverHypergraph& h, std::uint64_t seed,
                                   NonOrth&& non_orth) {
  DecodeResult r;
  r.assignment.left.resize(lc.left);
  r.excluded.resize(lc.left);
  r.witness.resize(lc.left);
  r.fallback.assign(lc.left, 0);
  std::mt19937_64 rng(seed);
  const auto& block_edges = h.block.graph.edges();
  detail::require(!block_edges.empty(), "soundness_decode: Schrijver block has no edges");
  const std::uint64_t full = (std::uint64_t{1} << h.R) - 1;
  for (std::size_t x = 0; x < lc.left; ++x) {
    std::size_t pick = 0;
    bool found = false;
    for (; pick < block_edges.size(); ++pick)
      if (non_orth(h.vertex(x, block_edges[pick].u), h.vertex(x, block_edges[pick].v))) {
        found = true;
        break;
      }
    if (!found) {
      pick = 0;
      r.fallback[x] = 1;
    }
    const Vertex a = h.vertex(x, block_edges[pick].u), b = h.vertex(x, block_edges[pick].v);
    r.witness[x] = {a, b};
    const std::uint64_t rest = full & ~(h.stable_set(a) | h.stable_set(b));
    for (std::uint32_t al = 0; al < h.R; ++al)
      if (bit(rest, al)) r.excluded[x].push_back(al);
    if (r.excluded[x].size() != h.R - 2 * h.s)
      throw VerificationError("soundness_decode: |E(x)| differs from R - 2s");
    if (r.excluded[x].empty()) throw VerificationError("soundness_decode: E(x) is empty (t = 0)");
    if (found) {
      std::uniform_int_distribution<std::size_t> pickd(0, r.excluded[x].size() - 1);
      r.assignment.left[x] = r.excluded[x][pickd(rng)];
    } else {
      r.assignment.left[x] = r.excluded[x].front();
    }
  }
  std::vector<std::vector<std::size_t>> votes(lc.right, std::vector<std::size_t>(lc.L, 0));
  for (const auto& e : lc.edges) {
    std::vector<char> hit(lc.L, 0);
    for (auto al : r.excluded[e.x]) hit[e.phi[al]] = 1;
    for (std::uint32_t be = 0; be < lc.L; ++be) votes[e.z][be] += hit[be];
  }
  r.assignment.right.resize(lc.right);
  for (std::size_t z = 0; z < lc.right; ++z)
    r.assignment.right[z] =
        static_cast<std::uint32_t>(std::max_element(votes[z].begin(), votes[z].end()) - votes[z].begin());
  return r;
}

inline void check_decode_input(const LabelCoverInstance& lc, const LabelCoverHypergraph& h, std::size_t rows,
                               std::size_t dim, const VerificationReport& report) {
  lc.validate();
  detail::require(h.left == lc.left && h.R == lc.R, "soundness_decode: hypergraph does not match the instance");
  detail::require(rows == h.hypergraph.num_vertices(), "soundness_decode: representation has the wrong size");
  detail::require(dim <= h.t, "soundness_decode: representation dimension " + std::to_string(dim) + " exceeds t = " +
                                  std::to_string(h.t));
  if (!report.valid()) throw InvalidArgument("soundness_decode: not a representation of the hypergraph (" + report.summary() + ")");
}

}  // namespace detail

/// Randomized assignment from a representation of dimension at most t. Per
/// block, the first Schrijver edge with non-orthogonal vectors gives E(x);
/// rho(x) is uniform on E(x), drawn in increasing x, and rho(z) is the least
/// label hit by the most sets phi_xz(E(x)).
inline DecodeResult soundness_decode(const LabelCoverInstance& lc, const LabelCoverHypergraph& h,
                                     const ExactOrthogonalRepresentation& rep, std::uint64_t seed) {
  detail::check_decode_input(lc, h, rep.size(), rep.dim, verify_exact(h.hypergraph, rep));
  return detail::soundness_decode_impl(lc, h, seed, [&](Vertex a, Vertex b) {
    return !inner_product(rep.vectors[a], rep.vectors[b]).is_zero();
  });
}

inline DecodeResult soundness_decode(const LabelCoverInstance& lc, const LabelCoverHypergraph& h,
                                     const RealOrthogonalRepresentation& rep, std::uint64_t seed) {
  detail::check_decode_input(lc, h, rep.size(), rep.dim(), verify_real(h.hypergraph, rep));
  return detail::soundness_decode_impl(lc, h, seed, [&](Vertex a, Vertex b) {
    return std::abs(rep.vectors.row(a).dot(rep.vectors.row(b))) > rep.eps_orth;
  });
}

/// Unit vectors e_1 / e_2 for colors 0 / 1 of a proper 2-coloring.
inline RealOrthogonalRepresentation representation_from_two_coloring(const VertexColoring& c) {
  detail::require(c.palette <= 2, "representation_from_two_coloring: more than two colors");
  RealOrthogonalRepresentation rep;
  rep.vectors = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(c.colors.size()), 2);
  for (std::size_t v = 0; v < c.colors.size(); ++v) rep.vectors(static_cast<Eigen::Index>(v), c.colors[v]) = 1.0;
  return rep;
}

/// Least element lying in at least |family|/ell members, ell the common set size.
inline std::uint32_t pigeonhole_element(const std::vector<std::vector<std::uint32_t>>& family, std::size_t witness) {
  detail::require(!family.empty(), "pigeonhole_element: empty family");
  detail::require(witness < family.size(), "pigeonhole_element: witness index out of range");
  const std::size_t ell = family[witness].size();
  detail::require(ell >= 1, "pigeonhole_element: empty sets");
  std::vector<std::vector<std::uint32_t>> sets;
  for (auto f : family) {
    std::sort(f.begin(), f.end());
    detail::require(std::adjacent_find(f.begin(), f.end()) == f.end(), "pigeonhole_element: repeated element in a set");
    detail::require(f.size() == ell, "pigeonhole_element: sets must share one size");
    sets.push_back(std::move(f));
  }
  const auto& w = sets[witness];
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<std::uint32_t> common;
    std::set_intersection(w.begin(), w.end(), sets[i].begin(), sets[i].end(), std::back_inserter(common));
    if (common.empty())
      throw InvalidArgument("pigeonhole_element: witness misses member " + std::to_string(i + 1));
  }
  std::uint32_t top = 0;
  for (const auto& f : sets) top = std::max(top, f.back() + 1);
  std::vector<std::size_t> count(top, 0);
  for (const auto& f : sets)
    for (auto e : f) ++count[e];
  for (std::uint32_t e = 0; e < top; ++e)
    if (count[e] * ell >= sets.size()) return e;
  throw VerificationError("pigeonhole_element: no element reaches the 1/ell fraction");
}

}  // namespace orthodim
