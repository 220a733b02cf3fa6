#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "orthodim/error.hpp"
#include "orthodim/io_util.hpp"

namespace orthodim {

/// Constraint between left vertex x and right vertex z: phi maps [R] to [L].
struct LabelCoverEdge {
  std::uint32_t x = 0, z = 0;
  std::vector<std::uint32_t> phi;
};

/// Bipartite projection game (U, V, E, R, L, phi). Labels are 0-based.
struct LabelCoverInstance {
  std::size_t left = 0, right = 0;
  std::uint32_t R = 1, L = 1;
  std::vector<LabelCoverEdge> edges;

  void validate() const {
    detail::require(R >= L && L >= 1, "label cover: need R >= L >= 1");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      const std::string where = "label cover: edge " + std::to_string(i + 1);
      detail::require(e.x < left && e.z < right, where + " has an endpoint out of range");
      detail::require(e.phi.size() == R, where + " projection table must have R entries");
      for (auto b : e.phi) detail::require(b < L, where + " projects outside [L]");
      seen.emplace_back(e.x, e.z);
    }
    std::sort(seen.begin(), seen.end());
    detail::require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), "label cover: repeated edge");
  }

  /// Edge indices incident to right vertex z.
  std::vector<std::size_t> edges_at(std::uint32_t z) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].z == z) out.push_back(i);
    return out;
  }
};

struct Assignment {
  std::vector<std::uint32_t> left;   // values in [R]
  std::vector<std::uint32_t> right;  // values in [L]
};

inline void check_assignment(const LabelCoverInstance& lc, const Assignment& a) {
  detail::require(a.left.size() == lc.left && a.right.size() == lc.right, "assignment: wrong number of values");
  for (auto v : a.left) detail::require(v < lc.R, "assignment: left value out of range");
  for (auto v : a.right) detail::require(v < lc.L, "assignment: right value out of range");
}

inline std::size_t satisfied_edges(const LabelCoverInstance& lc, const Assignment& a) {
  check_assignment(lc, a);
  std::size_t c = 0;
  for (const auto& e : lc.edges) c += e.phi[a.left[e.x]] == a.right[e.z];
  return c;
}

/// Fraction of satisfied constraints; 1 on an instance without edges.
inline double label_cover_value(const LabelCoverInstance& lc, const Assignment& a) {
  const auto c = satisfied_edges(lc, a);
  return lc.edges.empty() ? 1.0 : static_cast<double>(c) / static_cast<double>(lc.edges.size());
}

struct LabelCoverOptimum {
  double value = 1.0;
  std::size_t satisfied = 0;
  Assignment assignment;
};

/// Best right labels for fixed left labels: per z, the most frequent image (least on ties).
inline std::vector<std::uint32_t> best_right_labels(const LabelCoverInstance& lc, const std::vector<std::uint32_t>& left) {
  std::vector<std::vector<std::size_t>> votes(lc.right, std::vector<std::size_t>(lc.L, 0));
  for (const auto& e : lc.edges) ++votes[e.z][e.phi[left[e.x]]];
  std::vector<std::uint32_t> out(lc.right);
  for (std::size_t z = 0; z < lc.right; ++z)
    out[z] = static_cast<std::uint32_t>(std::max_element(votes[z].begin(), votes[z].end()) - votes[z].begin());
  return out;
}

inline constexpr std::uint64_t kLabelCoverBruteforceLimit = 20'000'000;

/// Exact optimum. Enumerates left labels in lexicographic order and sets each
/// right label to its best response; the first optimum found is returned.
inline LabelCoverOptimum label_cover_bruteforce_opt(const LabelCoverInstance& lc,
                                                    std::uint64_t limit = kLabelCoverBruteforceLimit) {
  lc.validate();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < lc.left; ++i) {
    space *= lc.R;
    if (space > limit)
      throw CapacityError("label_cover_bruteforce_opt: R^|U| exceeds " + std::to_string(limit));
  }
  LabelCoverOptimum best;
  bool first = true;
  std::vector<std::uint32_t> left(lc.left, 0);
  while (true) {
    Assignment a{left, best_right_labels(lc, left)};
    const auto c = satisfied_edges(lc, a);
    if (first || c > best.satisfied) {
      best.satisfied = c;
      best.assignment = std::move(a);
      first = false;
    }
    std::size_t pos = 0;
    while (pos < lc.left && ++left[pos] == lc.R) left[pos++] = 0;
    if (pos == lc.left) break;
  }
  best.value = lc.edges.empty() ? 1.0 : static_cast<double>(best.satisfied) / static_cast<double>(lc.edges.size());
  return best;
}

struct ToyLabelCoverParams {
  std::size_t left = 2, right = 1;
  std::uint32_t R = 6, L = 3;
  std::size_t left_degree = 1;  // right neighbours per left vertex
  bool biregular = false;       // x is joined to z = (x*d + j) mod |V|
};

enum class ToyLabelCoverKind { satisfiable, random };

/// Planted (`satisfiable`) or uniformly random projection games. With a
/// planted assignment rho every table satisfies phi(rho(x)) = rho(z) and is
/// otherwise uniform. `planted`, when given, receives rho.
inline LabelCoverInstance toy_label_cover(ToyLabelCoverKind kind, const ToyLabelCoverParams& p, std::uint64_t seed,
                                          Assignment* planted = nullptr) {
  detail::require(p.R >= p.L && p.L >= 1, "toy_label_cover: need R >= L >= 1");
  detail::require(p.right >= 1 || p.left_degree == 0, "toy_label_cover: no right vertices");
  detail::require(p.left_degree <= p.right, "toy_label_cover: degree exceeds |V|");
  if (p.biregular)
    detail::require(p.right > 0 && (p.left * p.left_degree) % p.right == 0,
                    "toy_label_cover: bi-regular graphs need |V| to divide |U| * degree");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::uint32_t n) { return static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng)); };
  LabelCoverInstance lc;
  lc.left = p.left;
  lc.right = p.right;
  lc.R = p.R;
  lc.L = p.L;
  Assignment rho;
  if (kind == ToyLabelCoverKind::satisfiable) {
    for (std::size_t x = 0; x < p.left; ++x) rho.left.push_back(uniform(p.R));
    for (std::size_t z = 0; z < p.right; ++z) rho.right.push_back(uniform(p.L));
  }
  for (std::uint32_t x = 0; x < p.left; ++x) {
    std::vector<std::uint32_t> zs;
    if (p.biregular) {
      for (std::size_t j = 0; j < p.left_degree; ++j) zs.push_back(static_cast<std::uint32_t>((x * p.left_degree + j) % p.right));
    } else {
      std::vector<std::uint32_t> all(p.right);
      for (std::uint32_t z = 0; z < p.right; ++z) all[z] = z;
      for (std::size_t j = 0; j < p.left_degree; ++j) {
        std::swap(all[j], all[j + uniform(static_cast<std::uint32_t>(p.right - j))]);
        zs.push_back(all[j]);
      }
      std::sort(zs.begin(), zs.end());
    }
    for (auto z : zs) {
      LabelCoverEdge e{x, z, std::vector<std::uint32_t>(p.R)};
      for (auto& b : e.phi) b = uniform(p.L);
      if (kind == ToyLabelCoverKind::satisfiable) e.phi[rho.left[x]] = rho.right[z];
      lc.edges.push_back(std::move(e));
    }
  }
  lc.validate();
  if (planted) *planted = rho;
  return lc;
}

// Label cover: p labelcover <|U|> <|V|> <|E|> <R> <L>, then per edge
// `e <x> <z> <phi(1)> ... <phi(R)>`, all 1-indexed.
// Assignment:  p assignment <|U|> <|V|>, then `a <vertex> <value>` lines with
// left vertices 1..|U|, right vertices |U|+1..|U|+|V|, values 1-indexed.

inline void write_label_cover(std::ostream& out, const LabelCoverInstance& lc) {
  out << "p labelcover " << lc.left << ' ' << lc.right << ' ' << lc.edges.size() << ' ' << lc.R << ' ' << lc.L << '\n';
  for (const auto& e : lc.edges) {
    out << "e " << e.x + 1 << ' ' << e.z + 1;
    for (auto b : e.phi) out << ' ' << b + 1;
    out << '\n';
  }
}

inline LabelCoverInstance read_label_cover(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "labelcover", 5);
  LabelCoverInstance lc;
  lc.left = lines.to_int<std::size_t>(toks[2]);
  lc.right = lines.to_int<std::size_t>(toks[3]);
  const auto m = lines.to_int<std::size_t>(toks[4]);
  lc.R = lines.to_int<std::uint32_t>(toks[5]);
  lc.L = lines.to_int<std::uint32_t>(toks[6]);
  if (lc.L < 1 || lc.R < lc.L) lines.fail("need R >= L >= 1");
  while (lines.next(toks)) {
    if (toks.size() != 3 + lc.R || toks[0] != "e") lines.fail("expected 'e <x> <z>' and " + std::to_string(lc.R) + " labels");
    LabelCoverEdge e;
    const auto x = lines.to_int<std::size_t>(toks[1]);
    const auto z = lines.to_int<std::size_t>(toks[2]);
    if (x < 1 || x > lc.left || z < 1 || z > lc.right) lines.fail("edge endpoint out of range");
    e.x = static_cast<std::uint32_t>(x - 1);
    e.z = static_cast<std::uint32_t>(z - 1);
    for (std::size_t i = 0; i < lc.R; ++i) {
      const auto b = lines.to_int<std::uint32_t>(toks[3 + i]);
      if (b < 1 || b > lc.L) lines.fail("projection value out of range");
      e.phi.push_back(b - 1);
    }
    lc.edges.push_back(std::move(e));
  }
  if (lc.edges.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(lc.edges.size()));
  try {
    lc.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return lc;
}

inline void write_assignment(std::ostream& out, const Assignment& a) {
  out << "p assignment " << a.left.size() << ' ' << a.right.size() << '\n';
  for (std::size_t x = 0; x < a.left.size(); ++x) out << "a " << x + 1 << ' ' << a.left[x] + 1 << '\n';
  for (std::size_t z = 0; z < a.right.size(); ++z) out << "a " << a.left.size() + z + 1 << ' ' << a.right[z] + 1 << '\n';
}

inline Assignment read_assignment(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "assignment", 2);
  const auto nu = lines.to_int<std::size_t>(toks[2]);
  const auto nv = lines.to_int<std::size_t>(toks[3]);
  Assignment a{std::vector<std::uint32_t>(nu), std::vector<std::uint32_t>(nv)};
  std::vector<char> seen(nu + nv, 0);
  while (lines.next(toks)) {
    if (toks.size() != 3 || toks[0] != "a") lines.fail("expected 'a <vertex> <value>'");
    const auto v = lines.to_int<std::size_t>(toks[1]);
    const auto val = lines.to_int<std::uint32_t>(toks[2]);
    if (v < 1 || v > nu + nv) lines.fail("vertex out of range");
    if (val < 1) lines.fail("values are 1-indexed");
    if (seen[v - 1]) lines.fail("vertex assigned twice");
    seen[v - 1] = 1;
    (v <= nu ? a.left[v - 1] : a.right[v - 1 - nu]) = val - 1;
  }
  for (std::size_t v = 0; v < nu + nv; ++v)
    if (!seen[v]) throw ParseError("vertex " + std::to_string(v + 1) + " has no value");
  return a;
}

}  // namespace orthodim
