#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "orthodim/coloring/pipeline.hpp"
#include "orthodim/coloring/planted.hpp"
#include "orthodim/representations/subspace.hpp"

using namespace orthodim;

namespace {

bool independent(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

Graph star(std::size_t leaves) {
  std::vector<Edge> es;
  for (Vertex v = 1; v <= leaves; ++v) es.push_back({0, v});
  return Graph(leaves + 1, es);
}

}  // namespace

TEST(Planted, TripartiteIsThreeColorableAndReproducible) {
  const auto a = planted_od3_instance(90, PlantedKind::tripartite, 5, 0.3);
  const auto b = planted_od3_instance(90, PlantedKind::tripartite, 5, 0.3);
  EXPECT_EQ(a.graph.edges(), b.graph.edges());
  EXPECT_TRUE(a.coloring.is_proper(a.graph));
  // 30 vertices per part, 3 * 900 cross pairs.
  const double pairs = 2700, p = 0.3;
  const double sigma = std::sqrt(pairs * p * (1 - p));
  EXPECT_NEAR(static_cast<double>(a.graph.num_edges()), pairs * p, 3 * sigma);
}

TEST(Planted, KneserSubgraph) {
  const auto k = planted_od3_instance(10, PlantedKind::kneser_sub, 1);
  EXPECT_EQ(k.graph.num_edges(), 15U);  // all of the Petersen graph
  for (std::size_t n : {7U, 30U, 100U}) {
    const auto g = planted_od3_instance(n, PlantedKind::kneser_sub, n);
    EXPECT_EQ(g.graph.num_vertices(), n);
    EXPECT_TRUE(g.coloring.is_proper(g.graph));
  }
  EXPECT_THROW(planted_od3_instance(0, PlantedKind::tripartite, 1), InvalidArgument);
  EXPECT_THROW(planted_od3_instance(5, PlantedKind::tripartite, 1, 1.5), InvalidArgument);
}

TEST(IndependentSet, StarTakesTheLeaves) {
  const auto s = find_independent_set_od3(star(12), {});
  EXPECT_EQ(s.branch, Branch::degree);
  EXPECT_EQ(s.trigger_degree, 12U);
  EXPECT_EQ(s.set.size(), 12U);
  EXPECT_TRUE(s.violations.empty());
}

TEST(IndependentSet, PlantedUsesSdpBranch) {
  const auto g = planted_od3_instance(120, PlantedKind::tripartite, 3, 0.1).graph;
  ASSERT_LT(static_cast<double>(g.max_degree()), std::pow(120.0, 0.75));
  const auto s = find_independent_set_od3(g, {});
  EXPECT_EQ(s.branch, Branch::sdp);
  EXPECT_TRUE(s.violations.empty());
  EXPECT_TRUE(independent(g, s.set));
  EXPECT_FALSE(s.set.empty());
}

TEST(IndependentSet, CliqueViolatesThePromise) {
  const auto k5 = Graph::complete(5);
  const auto s = find_independent_set_od3(k5, {});
  EXPECT_EQ(s.violations.size(), 1U);
  EXPECT_EQ(s.branch, Branch::greedy);
  EXPECT_EQ(s.set.size(), 1U);
  ColoringRunConfig strict;
  strict.policy = ViolationPolicy::strict;
  EXPECT_THROW(find_independent_set_od3(k5, strict), VerificationError);
  EXPECT_THROW(find_independent_set_od3(Graph(0), {}), InvalidArgument);
  ColoringRunConfig bad;
  bad.exponent = 1.0;
  EXPECT_THROW(find_independent_set_od3(k5, bad), InvalidArgument);
}

TEST(ColorOd3, EdgelessAndPetersen) {
  const auto e = color_od3_graph(Graph(6), {});
  EXPECT_EQ(e.colors, 1U);
  EXPECT_EQ(e.log.size(), 1U);

  ColoringRunConfig cfg;
  cfg.seed = 11;
  const auto pet = kneser_graph(5, 2).graph;
  const auto a = color_od3_graph(pet, cfg);
  const auto b = color_od3_graph(pet, cfg);
  EXPECT_TRUE(a.coloring.is_proper(pet));
  EXPECT_EQ(a.violation_count(), 0U);
  std::ostringstream sa, sb;
  a.write(sa);
  b.write(sb);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_NE(sa.str().find("colors " + std::to_string(a.colors) + "\n"), std::string::npos);
}

TEST(ColorOd3, PlantedInstancesAreProper) {
  for (std::size_t n : {64U, 256U}) {
    const auto inst = planted_od3_instance(n, PlantedKind::tripartite, n, 0.2);
    ColoringRunConfig cfg;
    cfg.seed = 3;
    const auto rep = color_od3_graph(inst.graph, cfg);
    EXPECT_TRUE(rep.coloring.is_proper(inst.graph));
    EXPECT_EQ(rep.violation_count(), 0U);
    EXPECT_LE(static_cast<double>(rep.colors), std::sqrt(static_cast<double>(n)) + 3) << n;
    for (const auto& it : rep.log)
      if (it.branch == Branch::degree) {
        EXPECT_GE(2 * it.set_size, it.trigger_degree);
      }
  }
}

TEST(ColorOd3, KneserSubgraphs) {
  const auto inst = planted_od3_instance(60, PlantedKind::kneser_sub, 2);
  const auto rep = color_od3_graph(inst.graph, {});
  EXPECT_TRUE(rep.coloring.is_proper(inst.graph));
  EXPECT_EQ(rep.violation_count(), 0U);
}

TEST(ColorOd3, SubspacePromisePassesSdpStep) {
  // K(7,3) with k = 3: the 3-subspace representation in R^9 from its 3-tuple coloring.
  const auto k = kneser_graph(5, 2);
  TupleColoring f;
  f.k = 2;
  f.palette = 5;
  f.sets = k.subsets;  // A -> A itself is a 2-tuple coloring with 5 colors
  ASSERT_TRUE(f.is_proper(k.graph));
  const auto sub = subspace_from_tuple_coloring(f);
  ASSERT_TRUE(verify_subspace(k.graph, sub).valid());
  // od_2 <= 5 <= 6 = 3k, so vchrom <= 3.
  EXPECT_TRUE(vector_coloring_at(k.graph, 3.0, false).has_value());
}
