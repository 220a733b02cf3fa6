#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "orthodim/combinatorics/exact_search.hpp"
#include "orthodim/reductions/label_cover_reduction.hpp"
#include "orthodim/reductions/lexicographic.hpp"
#include "orthodim/reductions/uniformity.hpp"
#include "orthodim/representations/od_search.hpp"

using namespace orthodim;

namespace {

UniformHypergraph triangle() { return UniformHypergraph::from_graph(Graph::complete(3)); }

// k2-subsets of the copy set that split as s-1 whole hyperedges in distinct
// copies plus a tail-subset of a hyperedge in one more copy.
std::size_t naive_uniformity_count(const UniformHypergraph& h1, std::size_t k2, std::size_t ell) {
  const std::size_t n = h1.num_vertices(), k1 = h1.uniformity();
  const std::size_t s = (k2 + k1 - 1) / k1, tail = k2 - (s - 1) * k1;
  std::set<std::vector<Vertex>> e1;
  for (std::size_t i = 0; i < h1.num_hyperedges(); ++i) {
    auto e = h1.hyperedge(i);
    e1.insert(std::vector<Vertex>(e.begin(), e.end()));
  }
  auto in_edge = [&](const std::vector<Vertex>& part) {
    for (const auto& e : e1)
      if (std::includes(e.begin(), e.end(), part.begin(), part.end())) return true;
    return false;
  };
  std::size_t count = 0;
  detail::combinations(n * ell, k2, [&](const std::vector<std::size_t>& c) {
    std::map<std::size_t, std::vector<Vertex>> parts;
    for (auto v : c) parts[v / n].push_back(static_cast<Vertex>(v % n));
    if (parts.size() != s) return;
    for (const auto& [copy, last] : parts) {
      if (last.size() != tail || !in_edge(last)) continue;
      bool ok = true;
      for (const auto& [other, p] : parts)
        if (other != copy && !e1.count(p)) ok = false;
      if (ok) {
        ++count;
        return;
      }
    }
  });
  return count;
}

// Hyperedge rule restated through projected label sets.
bool lc_hyperedge_oracle(const LabelCoverInstance& lc, std::size_t x, std::size_t y, std::uint64_t A, std::uint64_t B,
                         std::uint64_t C, std::uint64_t D) {
  const std::uint64_t full = (std::uint64_t{1} << lc.R) - 1;
  for (const auto& ex : lc.edges) {
    if (ex.x != x) continue;
    for (const auto& ey : lc.edges) {
      if (ey.x != y || ey.z != ex.z) continue;
      auto image = [&](const std::vector<std::uint32_t>& phi, std::uint64_t set) {
        std::set<std::uint32_t> out;
        for (std::uint32_t a = 0; a < lc.R; ++a)
          if ((set >> a) & 1U) out.insert(phi[a]);
        return out;
      };
      auto meet = [](const std::set<std::uint32_t>& p, const std::set<std::uint32_t>& q) {
        for (auto v : p)
          if (q.count(v)) return true;
        return false;
      };
      const bool ones = meet(image(ex.phi, A & B), image(ey.phi, C & D));
      const bool zeros = meet(image(ex.phi, full & ~(A | B)), image(ey.phi, full & ~(C | D)));
      if (!ones && !zeros) return true;
    }
  }
  return false;
}

LabelCoverInstance toy_instance() {
  ToyLabelCoverParams p;
  p.left = 2;
  p.right = 1;
  p.R = 6;
  p.L = 3;
  return toy_label_cover(ToyLabelCoverKind::satisfiable, p, 0);
}

}  // namespace

TEST(Uniformity, Examples) {
  const auto r = uniformity_reduce(triangle(), 4, 2);
  EXPECT_EQ(r.s, 2U);
  EXPECT_EQ(r.copies, 17U);
  EXPECT_EQ(r.hypergraph.num_vertices(), 51U);
  EXPECT_EQ(r.hypergraph.uniformity(), 4U);

  const auto k2 = uniformity_reduce(UniformHypergraph::from_graph(Graph::complete(2)), 3, 1);
  EXPECT_EQ(k2.copies, 2U);
  EXPECT_EQ(k2.hypergraph.num_hyperedges(), 4U);

  const auto id = uniformity_reduce(triangle(), 2, 5);
  EXPECT_EQ(id.copies, 1U);
  EXPECT_EQ(id.hypergraph.num_vertices(), 3U);
  EXPECT_EQ(id.hypergraph.num_hyperedges(), 3U);
  EXPECT_EQ(uniformity_copies(2, 4, 2), BigInt(17));
  EXPECT_EQ(uniformity_copies(3, 7, 2), BigInt(131841));  // binom(514, 2)
}

TEST(Uniformity, MatchesDirectEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k1 = 2 + trial % 2;
    const std::size_t n = k1 + 1 + rng() % 2;
    const auto h1 = oracle::random_hypergraph(n, k1, 1 + rng() % 3, rng);
    const std::size_t k2 = k1 + rng() % (k1 + 2);
    const auto r = uniformity_reduce(h1, k2, 1);
    EXPECT_EQ(r.hypergraph.uniformity(), k2);
    EXPECT_EQ(r.hypergraph.num_hyperedges(), naive_uniformity_count(h1, k2, r.copies)) << trial;
  }
}

TEST(Uniformity, TransportVerifies) {
  const auto r = uniformity_reduce(triangle(), 4, 2);
  const auto od = od_exact_finite_field(triangle(), 3, 3);
  ASSERT_TRUE(od.has_value());
  EXPECT_EQ(od->dimension, 3U);
  const auto rep = transport_uniformity_representation(triangle(), od->witness, r);
  EXPECT_TRUE(verify_exact(r.hypergraph, rep).valid());

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h1 = oracle::random_hypergraph(5, 2 + trial % 2, rng() % 5, rng);
    const auto w = od_exact_finite_field(h1, 2, 4);
    if (!w) continue;
    const auto red = uniformity_reduce(h1, h1.uniformity() + 1 + trial % 3, 1);
    EXPECT_TRUE(verify_exact(red.hypergraph, transport_uniformity_representation(h1, w->witness, red)).valid());
  }
  // Non-representations are rejected.
  ExactOrthogonalRepresentation bad(Field::gf(3), 1, std::vector<ExactVector>(3, ExactVector(Field::gf(3), {1})));
  EXPECT_THROW(transport_uniformity_representation(triangle(), bad, r), InvalidArgument);
}

TEST(Uniformity, ExactOdSpotCheck) {
  const std::vector<UniformHypergraph> corpus = {UniformHypergraph::from_graph(Graph::complete(2)),
                                                 UniformHypergraph::from_graph(Graph::path(3)), triangle()};
  for (const auto& h1 : corpus)
    for (std::size_t m : {1U, 2U})
      for (std::uint32_t p : {2U, 3U}) {
        const auto r = uniformity_reduce(h1, 3, m);
        const auto a = od_exact_finite_field(h1, p, 4);
        const auto b = od_exact_finite_field(r.hypergraph, p, 4);
        ASSERT_TRUE(a && b);
        EXPECT_LE(b->dimension, a->dimension);
        if (b->dimension <= m) {
          EXPECT_LE(a->dimension, b->dimension);
        }
      }
  // At m = 2 the triangle keeps its dimension.
  const auto r = uniformity_reduce(triangle(), 3, 2);
  EXPECT_EQ(od_exact_finite_field(r.hypergraph, 3, 4)->dimension, 3U);
}

TEST(Uniformity, CapacityAndParameters) {
  UniformityLimits lim;
  lim.max_vertices = 100;
  try {
    uniformity_reduce(triangle(), 6, 2, lim);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("ell = 153"), std::string::npos) << e.what();
  }
  EXPECT_THROW(uniformity_reduce(triangle(), 1, 1), InvalidArgument);
  EXPECT_THROW(uniformity_reduce(triangle(), 3, 0), InvalidArgument);
  const auto empty = uniformity_reduce(UniformHypergraph(4, 2, {}), 3, 2);
  EXPECT_EQ(empty.hypergraph.num_hyperedges(), 0U);
}

TEST(Lexicographic, Examples) {
  const auto c5k2 = lexicographic_reduce(Graph::cycle(5), Graph::complete(2));
  EXPECT_EQ(c5k2.graph.num_vertices(), 10U);
  EXPECT_EQ(c5k2.graph.num_edges(), 25U);
  EXPECT_EQ(c5k2.provenance.reduction, "lexicographic");
  EXPECT_EQ(lexicographic_reduce(Graph::complete(3), Graph::complete(2)).graph.num_edges(), 15U);
  const auto c5 = Graph::cycle(5);
  EXPECT_EQ(lexicographic_reduce(c5, Graph(1)).graph.edges(), c5.edges());
}

TEST(LabelCover, ValueAndBruteForce) {
  Assignment rho;
  const auto lc = toy_label_cover(ToyLabelCoverKind::satisfiable, {4, 2, 6, 3, 2, false}, 9, &rho);
  EXPECT_EQ(label_cover_value(lc, rho), 1.0);
  EXPECT_EQ(label_cover_bruteforce_opt(lc).value, 1.0);

  LabelCoverInstance one;
  one.left = one.right = 1;
  one.R = 2;
  one.L = 2;
  one.edges = {{0, 0, {0, 0}}};
  EXPECT_EQ(label_cover_value(one, Assignment{{1}, {1}}), 0.0);
  EXPECT_THROW(label_cover_value(one, Assignment{{2}, {0}}), InvalidArgument);

  // Exhaustive over R^|U| * L^|V|.
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = toy_label_cover(ToyLabelCoverKind::random, {3, 2, 4, 2, 1 + static_cast<std::size_t>(trial % 2), false}, rng());
    std::size_t best = 0;
    for (std::uint32_t code = 0; code < 64 * 4; ++code) {
      Assignment a{{code % 4, code / 4 % 4, code / 16 % 4}, {code / 64 % 2, code / 128 % 2}};
      best = std::max(best, satisfied_edges(r, a));
    }
    const auto opt = label_cover_bruteforce_opt(r);
    EXPECT_EQ(opt.satisfied, best);
    EXPECT_EQ(satisfied_edges(r, opt.assignment), best);
  }
  EXPECT_THROW(label_cover_bruteforce_opt(lc, 100), CapacityError);
}

TEST(LabelCover, GeneratorAndIO) {
  ToyLabelCoverParams p{4, 2, 6, 3, 1, true};
  const auto a = toy_label_cover(ToyLabelCoverKind::random, p, 3);
  const auto b = toy_label_cover(ToyLabelCoverKind::random, p, 3);
  std::stringstream sa, sb;
  write_label_cover(sa, a);
  write_label_cover(sb, b);
  EXPECT_EQ(sa.str(), sb.str());
  std::vector<std::size_t> deg(2, 0);
  for (const auto& e : a.edges) ++deg[e.z];
  EXPECT_EQ(deg[0], deg[1]);
  const auto back = read_label_cover(sa);
  std::stringstream sc;
  write_label_cover(sc, back);
  EXPECT_EQ(sc.str(), sb.str());

  Assignment rho{{0, 5, 2, 1}, {2, 0}};
  std::stringstream as;
  write_assignment(as, rho);
  const auto rb = read_assignment(as);
  EXPECT_EQ(rb.left, rho.left);
  EXPECT_EQ(rb.right, rho.right);

  std::istringstream bad("p labelcover 1 1 1 2 3\n");
  EXPECT_THROW(read_label_cover(bad), ParseError);
  std::istringstream out_of_range("p labelcover 1 1 1 2 2\ne 1 1 1 3\n");
  EXPECT_THROW(read_label_cover(out_of_range), ParseError);
  EXPECT_THROW(toy_label_cover(ToyLabelCoverKind::random, {3, 2, 6, 3, 1, true}, 1), InvalidArgument);
}

TEST(LabelCoverReduction, ToyShapeAndOracle) {
  const auto lc = toy_instance();
  const auto h = label_cover_to_hypergraph(lc, 2);
  EXPECT_EQ(h.s, 2U);
  EXPECT_EQ(h.block_size(), 9U);
  EXPECT_EQ(h.hypergraph.num_vertices(), 18U);
  EXPECT_EQ(h.hypergraph.uniformity(), 4U);
  EXPECT_GT(h.hypergraph.num_hyperedges(), 0U);

  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 6; ++trial) {
    const auto r = toy_label_cover(trial % 2 ? ToyLabelCoverKind::random : ToyLabelCoverKind::satisfiable,
                                   {3, 2, 5, static_cast<std::uint32_t>(2 + trial % 2), static_cast<std::size_t>(1 + trial % 2), false}, rng());
    const auto hr = label_cover_to_hypergraph(r, 2);
    std::set<std::vector<Vertex>> got;
    for (std::size_t i = 0; i < hr.hypergraph.num_hyperedges(); ++i) {
      auto e = hr.hypergraph.hyperedge(i);
      got.insert(std::vector<Vertex>(e.begin(), e.end()));
    }
    std::set<std::vector<Vertex>> want;
    const std::size_t b = hr.block_size();
    for (std::size_t x = 0; x < r.left; ++x)
      for (std::size_t y = x + 1; y < r.left; ++y)
        for (std::size_t i = 0; i < b; ++i)
          for (std::size_t j = i + 1; j < b; ++j)
            for (std::size_t k = 0; k < b; ++k)
              for (std::size_t l = k + 1; l < b; ++l)
                if (lc_hyperedge_oracle(r, x, y, hr.block.subsets[i], hr.block.subsets[j], hr.block.subsets[k],
                                        hr.block.subsets[l]))
                  want.insert({hr.vertex(x, i), hr.vertex(x, j), hr.vertex(y, k), hr.vertex(y, l)});
    EXPECT_EQ(got, want) << trial;
  }

  // A left vertex without a partner contributes nothing.
  LabelCoverInstance lone;
  lone.left = 2;
  lone.right = 2;
  lone.R = 4;
  lone.L = 2;
  lone.edges = {{0, 0, {0, 1, 0, 1}}, {1, 1, {1, 1, 0, 0}}};
  EXPECT_EQ(label_cover_to_hypergraph(lone, 2).hypergraph.num_hyperedges(), 0U);
  EXPECT_THROW(label_cover_to_hypergraph(lc, 6), InvalidArgument);
  EXPECT_THROW(label_cover_to_hypergraph(lc, 0), InvalidArgument);
}

TEST(LabelCoverReduction, CompletenessColoringIsProper) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    Assignment rho;
    ToyLabelCoverParams p{2 + rng() % 3, 1 + rng() % 2, static_cast<std::uint32_t>(5 + rng() % 4), 2, 1, false};
    p.L = 2 + static_cast<std::uint32_t>(rng() % 2);
    p.left_degree = 1 + rng() % p.right;
    const auto lc = toy_label_cover(ToyLabelCoverKind::satisfiable, p, rng(), &rho);
    for (std::uint32_t t : {2U, 3U}) {
      const auto h = label_cover_to_hypergraph(lc, t);
      const auto col = completeness_coloring(lc, rho, h);
      EXPECT_TRUE(col.is_proper(h.hypergraph));
    }
  }
  const auto lc = toy_instance();
  const auto h = label_cover_to_hypergraph(lc, 2);
  Assignment wrong{{0, 0}, {0}};
  if (satisfied_edges(lc, wrong) < lc.edges.size()) {
    EXPECT_THROW(completeness_coloring(lc, wrong, h), InvalidArgument);
  }
  LabelCoverInstance single;
  single.left = single.right = 1;
  single.R = 6;
  single.L = 3;
  single.edges = {{0, 0, {0, 1, 2, 0, 1, 2}}};
  const auto hs = label_cover_to_hypergraph(single, 2);
  EXPECT_EQ(hs.hypergraph.num_hyperedges(), 0U);
  EXPECT_TRUE(completeness_coloring(single, Assignment{{4}, {1}}, hs).is_proper(hs.hypergraph));
}

TEST(LabelCoverReduction, DecoderInvariants) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    Assignment rho;
    const auto lc = toy_label_cover(ToyLabelCoverKind::satisfiable, {4, 2, 6, 3, 2, false}, rng(), &rho);
    const auto h = label_cover_to_hypergraph(lc, 2);
    const auto rep = representation_from_two_coloring(completeness_coloring(lc, rho, h));
    double total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto d = soundness_decode(lc, h, rep, seed);
      EXPECT_EQ(d.fallbacks(), 0U);
      for (std::size_t x = 0; x < lc.left; ++x) {
        ASSERT_EQ(d.excluded[x].size(), lc.R - 2 * h.s);
        EXPECT_NE(std::find(d.excluded[x].begin(), d.excluded[x].end(), d.assignment.left[x]), d.excluded[x].end());
        const auto [a, b] = d.witness[x];
        EXPECT_EQ(h.stable_set(a) & h.stable_set(b), 0U);
        EXPECT_NE(rep.vectors.row(a).dot(rep.vectors.row(b)), 0.0);
      }
      for (std::size_t z = 0; z < lc.right; ++z) {
        std::vector<std::size_t> votes(lc.L, 0);
        for (const auto& e : lc.edges) {
          if (e.z != z) continue;
          std::set<std::uint32_t> img;
          for (auto al : d.excluded[e.x]) img.insert(e.phi[al]);
          for (auto be : img) ++votes[be];
        }
        EXPECT_EQ(votes[d.assignment.right[z]], *std::max_element(votes.begin(), votes.end()));
      }
      total += label_cover_value(lc, d.assignment);
    }
    EXPECT_GE(total / 200, 1.0 / 256);
  }
  const auto lc = toy_instance();
  const auto h = label_cover_to_hypergraph(lc, 2);
  Assignment rho = label_cover_bruteforce_opt(lc).assignment;
  const auto rep = representation_from_two_coloring(completeness_coloring(lc, rho, h));
  const auto a = soundness_decode(lc, h, rep, 7);
  const auto b = soundness_decode(lc, h, rep, 7);
  EXPECT_EQ(a.assignment.left, b.assignment.left);
  EXPECT_EQ(a.assignment.right, b.assignment.right);

  // Dimension above t and invalid representations are rejected.
  RealOrthogonalRepresentation wide;
  wide.vectors = Eigen::MatrixXd::Identity(18, 18);
  EXPECT_THROW(soundness_decode(lc, h, wide, 1), InvalidArgument);
  RealOrthogonalRepresentation flat;
  flat.vectors = Eigen::MatrixXd::Ones(18, 2);
  EXPECT_THROW(soundness_decode(lc, h, flat, 1), InvalidArgument);

  // Blocks without a non-orthogonal disjoint pair take the least label of the first edge.
  const auto fb = detail::soundness_decode_impl(lc, h, 1, [](Vertex, Vertex) { return false; });
  EXPECT_EQ(fb.fallbacks(), lc.left);
  for (std::size_t x = 0; x < lc.left; ++x) EXPECT_EQ(fb.assignment.left[x], fb.excluded[x].front());
}

TEST(Pigeonhole, ExamplesAndProperty) {
  EXPECT_EQ(pigeonhole_element({{1, 2}, {2, 3}, {2, 4}}, 0), 2U);
  EXPECT_EQ(pigeonhole_element({{5, 3}}, 0), 3U);
  EXPECT_EQ(pigeonhole_element({{4, 6}, {6, 4}, {4, 6}}, 1), 4U);
  EXPECT_THROW(pigeonhole_element({{1, 2}, {3, 4}}, 0), InvalidArgument);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t R = 4 + rng() % 8;
    const std::size_t ell = 1 + rng() % 3;
    auto draw = [&] {
      std::vector<std::uint32_t> all(R);
      for (std::uint32_t i = 0; i < R; ++i) all[i] = i;
      std::shuffle(all.begin(), all.end(), rng);
      return std::vector<std::uint32_t>(all.begin(), all.begin() + ell);
    };
    const auto w = draw();
    std::vector<std::vector<std::uint32_t>> fam{w};
    const std::size_t size = 1 + rng() % 12;
    while (fam.size() < size) {
      auto f = draw();
      if (std::find_first_of(f.begin(), f.end(), w.begin(), w.end()) != f.end()) fam.push_back(f);
    }
    std::shuffle(fam.begin(), fam.end(), rng);
    const std::size_t wi = std::find(fam.begin(), fam.end(), w) - fam.begin();
    const auto e = pigeonhole_element(fam, wi);
    std::size_t count = 0;
    for (const auto& f : fam) count += std::count(f.begin(), f.end(), e);
    EXPECT_GE(count * ell, fam.size());
    for (std::uint32_t smaller = 0; smaller < e; ++smaller) {
      std::size_t c = 0;
      for (const auto& f : fam) c += std::count(f.begin(), f.end(), smaller);
      EXPECT_LT(c * ell, fam.size());
    }
  }
}
