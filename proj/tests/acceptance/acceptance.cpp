// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// `acceptance --write-golden` regenerates the golden coloring reports instead.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../unit/oracles.hpp"
#include "orthodim/orthodim.hpp"

using namespace orthodim;

namespace {

// Tolerances and budgets, pinned.
constexpr double kSdpTol = 1e-3;
constexpr double kOdSeconds = 60;
constexpr double kSolveSeconds = 10;
constexpr double kUniformitySeconds = 120;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string fmt(double x, int prec = 3) {
  std::ostringstream o;
  o.precision(prec);
  o << std::fixed << x;
  return o.str();
}

// 1. od(K(d,s)) = od(S(d,s)) = d - 2s + 2
Outcome kneser_od() {
  Outcome r;
  const auto t0 = Clock::now();
  SandwichOptions opt;
  opt.eps_sdp = kSdpTol;
  int closed = 0;
  for (auto [d, s] : {std::pair{4U, 2U}, {5U, 2U}, {6U, 2U}, {6U, 3U}}) {
    const std::uint32_t want = d - 2 * s + 2;
    for (bool schrijver : {false, true}) {
      const auto g = schrijver ? schrijver_graph(d, s).graph : kneser_graph(d, s).graph;
      const auto b = od_sandwich(g, opt);
      const std::string name = std::string(schrijver ? "S(" : "K(") + std::to_string(d) + "," + std::to_string(s) + ")";
      r.expect(b.lower == want && b.upper == want,
               name + ": bounds " + std::to_string(b.lower) + ".." + std::to_string(b.upper) + ", want " +
                   std::to_string(want));
      closed += b.closed() && b.lower == want;
    }
  }
  const double secs = since(t0);
  r.expect(secs < kOdSeconds, "took " + fmt(secs, 1) + " s");
  r.detail = std::to_string(closed) + "/8 closed at d-2s+2, " + fmt(secs, 1) + " s";
  return r;
}

// 2. svchrom(K(d,s)) = d/s and svchrom(K_n) = n
Outcome strict_vector_chromatic_values() {
  Outcome r;
  double worst = 0, slowest = 0;
  auto check = [&](const Graph& g, double want, const std::string& name) {
    const auto t0 = Clock::now();
    const auto res = strict_vector_chromatic(g);
    const double secs = since(t0);
    const double err = std::abs(res.kappa - want);
    worst = std::max(worst, err);
    slowest = std::max(slowest, secs);
    r.expect(err <= kSdpTol, name + ": kappa " + fmt(res.kappa, 6) + ", want " + fmt(want, 6));
    r.expect(secs < kSolveSeconds, name + ": " + fmt(secs, 1) + " s");
  };
  for (auto [d, s] : {std::pair{5U, 2U}, {6U, 2U}, {6U, 3U}})
    check(kneser_graph(d, s).graph, static_cast<double>(d) / s, "K(" + std::to_string(d) + "," + std::to_string(s) + ")");
  for (std::size_t n : {3U, 5U, 8U}) check(Graph::complete(n), static_cast<double>(n), "K_" + std::to_string(n));
  r.detail = "max error " + fmt(worst, 6) + ", slowest solve " + fmt(slowest, 2) + " s";
  return r;
}

// 3. log_3 chi <= od <= chi on random hypergraphs
Outcome sandwich_property() {
  Outcome r;
  std::mt19937_64 rng(3);
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + trial % 3;
    const std::size_t n = k + 1 + rng() % (10 - k);
    const auto h = oracle::random_hypergraph(n, k, 1 + rng() % 14, rng);
    const std::string name = "trial " + std::to_string(trial) + " " + to_string(h);
    const auto chi = hypergraph_chromatic_number_exact(h);
    const auto rep = representation_from_coloring(h, chi.witness);
    r.expect(verify_real(h, rep).valid(), name + ": coloring representation rejected");
    const auto back = coloring_from_representation(h, rep);
    r.expect(back.coloring.is_proper(h), name + ": sign-pattern coloring not proper");
    r.expect(back.coloring.palette <= std::pow(3.0, static_cast<double>(rep.dim())), name + ": more than 3^t colors");
    const auto gf2 = od_exact_finite_field(h, 2, chi.value);
    if (!gf2) {
      r.fail(name + ": no GF(2) representation in dimension chi");
      continue;
    }
    r.expect(ceil_log3(chi.value) <= gf2->dimension && gf2->dimension <= chi.value,
             name + ": od over GF(2) " + std::to_string(gf2->dimension) + " outside [ceil log3 chi, chi]");
    const auto b = od_sandwich(h);
    r.expect(b.lower <= b.upper, name + ": lower bound above upper bound");
    r.expect(b.upper == chi.value, name + ": upper bound is not chi");
    r.expect(b.lower >= ceil_log3(chi.value), name + ": lower bound below ceil log3 chi");
    ++done;
  }
  r.detail = std::to_string(done) + "/200 hypergraphs consistent";
  return r;
}

// 4. pruned od search against nested enumeration
Outcome finite_field_oracle() {
  Outcome r;
  std::mt19937_64 rng(4);
  int mismatches = 0, compared = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t k = 2 + rng() % std::min<std::size_t>(3, n - 1);
    const auto h = oracle::random_hypergraph(n, k, 1 + rng() % 8, rng);
    for (std::uint32_t p : {2U, 3U}) {
      const auto fast = od_exact_finite_field(h, p, 3);
      const auto slow = oracle::naive_od(h, p, 3);
      ++compared;
      const bool same = fast.has_value() == slow.has_value() && (!fast || fast->dimension == *slow);
      if (!same || (fast && !verify_exact(h, fast->witness).valid())) {
        ++mismatches;
        r.fail("instance " + std::to_string(i) + " over GF(" + std::to_string(p) + "): " + to_string(h));
      }
    }
  }
  r.detail = std::to_string(mismatches) + " mismatches in " + std::to_string(compared) + " comparisons";
  return r;
}

// Disjoint k-tuples of pairwise non-orthogonal vertices, greedily in random order.
TupleCollection random_tuples(const ExactOrthogonalRepresentation& rep, std::size_t k, std::mt19937_64& rng) {
  std::vector<Vertex> order(rep.size());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<Vertex>> tuples;
  std::vector<Vertex> cur;
  for (Vertex v : order) {
    bool ok = !inner_product(rep.vectors[v], rep.vectors[v]).is_zero();
    for (Vertex u : cur) ok = ok && !inner_product(rep.vectors[u], rep.vectors[v]).is_zero();
    if (!ok) continue;
    cur.push_back(v);
    if (cur.size() == k) {
      tuples.push_back(cur);
      cur.clear();
    }
  }
  return TupleCollection(k, tuples);
}

// 5. symmetrization over GF(7)
Outcome symmetrization() {
  Outcome r;
  std::mt19937_64 rng(5);
  int runs = 0, attempts = 0;
  while (runs < 300) {
    if (++attempts > 20000) {
      r.fail("could not draw 300 instances");
      break;
    }
    const std::size_t k = 2 + runs % 2;
    const std::uint32_t t = k == 2 ? 2 + static_cast<std::uint32_t>(rng() % 2) : 2;
    const auto h = oracle::random_hypergraph(7, 3, 1 + rng() % 6, rng);
    const auto rep = finite_field_representation(h, 7, t);
    if (!rep) continue;
    const auto a = random_tuples(*rep, k, rng);
    if (a.tuples.empty()) continue;
    const auto w = symmetrize(h, *rep, a);
    const std::string name = "run " + std::to_string(runs);
    r.expect(w.dim == static_cast<std::size_t>(std::pow(t, k * k)), name + ": dimension " + std::to_string(w.dim));
    r.expect(verify_exact(h, w).valid(), name + ": output does not verify");
    for (const auto& ta : a.tuples) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          r.expect(!inner_product(w.vectors[ta[i]], w.vectors[ta[j]]).is_zero(), name + ": property 1");
      for (const auto& tb : a.tuples) {
        if (inner_product(w.vectors[ta[0]], w.vectors[tb[1]]).is_zero()) continue;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            r.expect(!inner_product(w.vectors[ta[i]], w.vectors[tb[j]]).is_zero(), name + ": property 2");
      }
    }
    ++runs;
  }
  r.detail = std::to_string(runs) + " runs, k in {2,3}, t in {2,3}";
  return r;
}

// 6. uniformity reduction
Outcome uniformity() {
  Outcome r;
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, UniformHypergraph>> corpus = {
      {"K2", UniformHypergraph::from_graph(Graph::complete(2))},
      {"P3", UniformHypergraph::from_graph(Graph::path(3))},
      {"triangle", UniformHypergraph::from_graph(Graph::complete(3))}};
  int transported = 0, equal = 0, cases = 0;
  std::string unequal;
  for (const auto& [name, h1] : corpus)
    for (std::size_t m : {1U, 2U}) {
      const auto red = uniformity_reduce(h1, 3, m);
      for (std::uint32_t p : {2U, 3U}) {
        const std::string tag = name + " m=" + std::to_string(m) + " GF(" + std::to_string(p) + ")";
        const auto a = od_exact_finite_field(h1, p, 4);
        const auto b = od_exact_finite_field(red.hypergraph, p, 4);
        if (!a || !b) {
          r.fail(tag + ": exact search did not close");
          continue;
        }
        // Item 1: od(H2) <= od(H1) through the transported representation.
        const auto rep = transport_uniformity_representation(h1, a->witness, red);
        r.expect(rep.dim == a->dimension && verify_exact(red.hypergraph, rep).valid(), tag + ": transport rejected");
        transported += verify_exact(red.hypergraph, rep).valid();
        r.expect(b->dimension <= a->dimension, tag + ": od went up after reduction");
        // Item 2 applies when od(H2) <= m.
        if (b->dimension <= m) r.expect(a->dimension <= b->dimension, tag + ": item 2 fails");
        ++cases;
        if (a->dimension == b->dimension) ++equal;
        else unequal += " " + tag + " (" + std::to_string(a->dimension) + "->" + std::to_string(b->dimension) + ")";
      }
    }
  const double secs = since(t0);
  r.expect(secs < kUniformitySeconds, "took " + fmt(secs, 1) + " s");
  r.detail = std::to_string(transported) + "/" + std::to_string(cases) + " transports verify; od equal in " +
             std::to_string(equal) + "/" + std::to_string(cases) + (unequal.empty() ? "" : ", differs (item 2 n/a):" + unequal) +
             "; " + fmt(secs, 1) + " s";
  return r;
}

ExactMatrix random_unit_diagonal(const Field& f, std::size_t n, std::mt19937_64& rng) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j) m.set(i, j, FieldScalar::one(f));
      else if (rng() % 3 == 0) m.set(i, j, FieldScalar(f, static_cast<long long>(rng() % 5)));
  return m;
}

// 7. GRW and Ramsey lemmas
Outcome grw_and_ramsey() {
  Outcome r;
  std::mt19937_64 rng(7);
  const std::vector<Field> fields = {Field::gf(2), Field::gf(5), Field::gf(7), Field::rationals()};
  int grw = 0;
  for (int i = 0; i < 500; ++i) {
    const Field& f = fields[i % fields.size()];
    const auto m = random_unit_diagonal(f, 1 + rng() % 10, rng);
    const auto rep = grw_check(m);
    r.expect(rep.holds && static_cast<double>(rep.sparsity) >= rep.bound, "GRW fails on matrix " + std::to_string(i));
    grw += rep.holds;
  }
  int cliques = 0, attempts = 0;
  const Field f7 = Field::gf(7);
  while (cliques < 500 && ++attempts < 100000) {
    const std::size_t n = 8 + rng() % 8, rk = 1 + rng() % 3;
    ExactMatrix a(f7, n, rk), b(f7, rk, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < rk; ++j) {
        a.set(i, j, FieldScalar(f7, static_cast<long long>(rng() % 7)));
        b.set(j, i, FieldScalar(f7, static_cast<long long>(rng() % 7)));
      }
    const ExactMatrix m = a * b;
    bool diag = true;
    for (std::size_t i = 0; i < n; ++i) diag = diag && !m.at(i, i).is_zero();
    const std::uint32_t s = 2 + static_cast<std::uint32_t>(rng() % 2);
    if (!diag || n < erdos_szekeres_bound(s, rank(m) + 1)) continue;
    const auto c = ramsey_clique(m, s);
    bool ok = c.size() == s;
    for (std::size_t i = 0; i < c.size() && ok; ++i)
      for (std::size_t j = i + 1; j < c.size() && ok; ++j)
        ok = c[i] != c[j] && c[i] < n && c[j] < n && (!m.at(c[i], c[j]).is_zero() || !m.at(c[j], c[i]).is_zero());
    r.expect(ok, "ramsey_clique postcondition fails on matrix " + std::to_string(cliques));
    cliques += ok;
  }
  r.expect(cliques == 500, "only " + std::to_string(cliques) + " qualifying Ramsey matrices");
  r.detail = "GRW " + std::to_string(grw) + "/500, Ramsey " + std::to_string(cliques) + "/500";
  return r;
}

ToyLabelCoverParams random_toy(std::mt19937_64& rng) {
  ToyLabelCoverParams p;
  p.left = 1 + rng() % 4;
  p.right = 1 + rng() % 2;
  p.R = 5 + static_cast<std::uint32_t>(rng() % 4);
  p.L = 2 + static_cast<std::uint32_t>(rng() % 2);
  p.left_degree = 1 + rng() % p.right;
  return p;
}

// 8. Label Cover completeness
Outcome label_cover_completeness() {
  Outcome r;
  std::mt19937_64 rng(8);
  int proper = 0;
  std::size_t hyperedges = 0;
  for (int i = 0; i < 50; ++i) {
    Assignment rho;
    const auto lc = toy_label_cover(ToyLabelCoverKind::satisfiable, random_toy(rng), rng(), &rho);
    const std::uint32_t t = 2 + i % 2;
    const auto h = label_cover_to_hypergraph(lc, t);
    const bool ok = completeness_coloring(lc, rho, h).is_proper(h.hypergraph);
    r.expect(ok, "instance " + std::to_string(i) + " (t=" + std::to_string(t) + "): coloring not proper");
    proper += ok;
    hyperedges += h.hypergraph.num_hyperedges();
  }
  r.detail = std::to_string(proper) + "/50 proper, " + std::to_string(hyperedges) + " hyperedges in total";
  return r;
}

// 9. soundness decoder
Outcome soundness_decoder() {
  Outcome r;
  std::mt19937_64 rng(9);
  double worst = 1;
  for (int i = 0; i < 10; ++i) {
    Assignment rho;
    ToyLabelCoverParams p;
    p.left = 2 + rng() % 3;
    p.right = 1 + rng() % 2;
    p.R = 6 + static_cast<std::uint32_t>(rng() % 3);
    p.L = 3;
    p.left_degree = p.right;
    const auto lc = toy_label_cover(ToyLabelCoverKind::satisfiable, p, rng(), &rho);
    const auto h = label_cover_to_hypergraph(lc, 2);
    const auto rep = representation_from_two_coloring(completeness_coloring(lc, rho, h));
    double total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto d = soundness_decode(lc, h, rep, seed);
      for (std::size_t x = 0; x < lc.left; ++x)
        r.expect(d.excluded[x].size() == lc.R - 2 * h.s, "instance " + std::to_string(i) + ": |E(x)| != R-2s");
      total += label_cover_value(lc, d.assignment);
    }
    const double mean = total / 200;
    worst = std::min(worst, mean);
    r.expect(mean >= 1.0 / 256, "instance " + std::to_string(i) + ": mean satisfied fraction " + fmt(mean, 5));
  }
  int families = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t R = 4 + rng() % 8;
    const std::size_t ell = 1 + rng() % 3;
    auto draw = [&] {
      std::vector<std::uint32_t> all(R);
      for (std::uint32_t a = 0; a < R; ++a) all[a] = a;
      std::shuffle(all.begin(), all.end(), rng);
      return std::vector<std::uint32_t>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(ell));
    };
    const auto w = draw();
    std::vector<std::vector<std::uint32_t>> fam{w};
    const std::size_t size = 1 + rng() % 12;
    while (fam.size() < size) {
      auto f = draw();
      if (std::find_first_of(f.begin(), f.end(), w.begin(), w.end()) != f.end()) fam.push_back(f);
    }
    std::shuffle(fam.begin(), fam.end(), rng);
    const auto e = pigeonhole_element(fam, static_cast<std::size_t>(std::find(fam.begin(), fam.end(), w) - fam.begin()));
    std::size_t count = 0;
    for (const auto& f : fam) count += static_cast<std::size_t>(std::count(f.begin(), f.end(), e));
    bool ok = count * ell >= fam.size();
    for (std::uint32_t smaller = 0; smaller < e && ok; ++smaller) {
      std::size_t c = 0;
      for (const auto& f : fam) c += static_cast<std::size_t>(std::count(f.begin(), f.end(), smaller));
      ok = c * ell < fam.size();
    }
    r.expect(ok, "pigeonhole family " + std::to_string(trial));
    families += ok;
  }
  r.detail = "worst mean satisfied fraction " + fmt(worst, 4) + " (need " + fmt(1.0 / 256, 4) + "), pigeonhole " +
             std::to_string(families) + "/1000";
  return r;
}

// 10. od(G1 . G2) = od_k(G1) on K3.K2 and K2.K2
Outcome lexicographic() {
  Outcome r;
  std::string detail;
  for (std::size_t outer : {3U, 2U}) {
    const std::size_t want = 2 * outer;
    const auto g1 = Graph::complete(outer), k2 = Graph::complete(2);
    const auto product = lexicographic_product(g1, k2);
    const std::string name = "K" + std::to_string(outer) + ".K2";
    r.expect(product == Graph::complete(want), name + " is not K" + std::to_string(want));
    const auto tuples = multichromatic_number_exact(g1, 2);
    const auto inner = representation_from_coloring(k2, VertexColoring({0, 1}, 2));
    const auto rep = compose_lexicographic(subspace_from_tuple_coloring(tuples.witness), inner);
    r.expect(rep.dim() == want && verify_real(product, rep).valid(), name + ": composed representation rejected");
    const auto sdp = strict_vector_chromatic(product);
    const auto lower = static_cast<std::size_t>(std::ceil(sdp.kappa - kSdpTol));
    r.expect(lower >= want, name + ": SDP lower bound " + std::to_string(lower));
    detail += (detail.empty() ? "" : ", ") + name + " rep dim " + std::to_string(rep.dim()) + " / SDP kappa " +
              fmt(sdp.kappa, 5);
  }
  r.detail = detail;
  return r;
}

std::string golden_path(std::size_t n) { return std::string(ORTHODIM_GOLDEN_DIR) + "/planted-" + std::to_string(n) + ".report"; }

std::string golden_report(std::size_t n) {
  const auto inst = planted_od3_instance(n, PlantedKind::tripartite, 1000 + n, 0.2);
  ColoringRunConfig cfg;
  cfg.seed = n;
  std::ostringstream out;
  color_od3_graph(inst.graph, cfg).write(out);
  return out.str();
}

// 11. coloring pipeline on planted instances
Outcome coloring_pipeline() {
  Outcome r;
  std::size_t most = 0;
  int degree_steps = 0;
  for (std::size_t n : {128U, 256U, 512U})
    for (std::uint64_t i = 0; i < 10; ++i) {
      const auto inst = planted_od3_instance(n, PlantedKind::tripartite, 17 * n + i, 0.1 + 0.05 * static_cast<double>(i % 4));
      ColoringRunConfig cfg;
      cfg.seed = i;
      const std::string name = "n=" + std::to_string(n) + " #" + std::to_string(i);
      ColoringReport rep;
      try {
        rep = color_od3_graph(inst.graph, cfg);
      } catch (const std::exception& e) {
        r.fail(name + ": " + e.what());
        continue;
      }
      r.expect(rep.coloring.is_proper(inst.graph), name + ": coloring not proper");
      for (std::uint32_t c = 0; c < rep.colors; ++c) {
        std::vector<Vertex> cls;
        for (Vertex v = 0; v < n; ++v)
          if (rep.coloring.colors[v] == c) cls.push_back(v);
        for (std::size_t a = 0; a < cls.size(); ++a)
          for (std::size_t b = a + 1; b < cls.size(); ++b)
            if (inst.graph.adjacent(cls[a], cls[b])) r.fail(name + ": color class " + std::to_string(c) + " not independent");
      }
      for (const auto& it : rep.log)
        if (it.branch == Branch::degree) {
          ++degree_steps;
          r.expect(it.set_size >= (it.trigger_degree + 1) / 2, name + ": degree step below ceil(deg/2)");
        }
      r.expect(rep.violation_count() == 0, name + ": promise violation flagged");
      most = std::max(most, rep.colors);
    }
  int golden = 0;
  for (std::size_t n : {128U, 256U}) {
    const auto a = golden_report(n);
    const auto b = golden_report(n);
    std::ifstream in(golden_path(n), std::ios::binary);
    std::stringstream stored;
    stored << in.rdbuf();
    const bool ok = in && a == b && a == stored.str();
    r.expect(ok, "golden report for n=" + std::to_string(n) + " differs");
    golden += ok;
  }
  r.detail = "30 instances proper, at most " + std::to_string(most) + " colors, " + std::to_string(degree_steps) +
             " degree steps, golden " + std::to_string(golden) + "/2 identical";
  return r;
}

// 12. Frankl-Rodl graphs
Outcome frankl_rodl() {
  Outcome r;
  const auto g8 = frankl_rodl_graph(8);
  const auto rep = frankl_rodl_representation(8);
  r.expect(rep.eps_orth == 0.0 && verify_real(g8.graph, rep).valid(), "G_8 representation rejected");
  r.expect(g8.graph.num_vertices() == 70, "G_8 has " + std::to_string(g8.graph.num_vertices()) + " vertices");
  SearchLimits lim;
  lim.independence_max_vertices = 128;
  const auto alpha = independence_number_exact(g8.graph, lim);
  const std::size_t chi_lower = (70 + alpha.value - 1) / alpha.value;
  std::string chi8 = "not computed";
  lim.chromatic_max_vertices = 70;
  lim.max_nodes = 20'000'000;
  try {
    const auto chi = chromatic_number_exact(g8.graph, lim);
    r.expect(chi.value >= chi_lower, "chi(G_8) below 70/alpha");
    chi8 = std::to_string(chi.value);
  } catch (const CapacityError&) {
    chi8 = "over budget";
  }
  const auto g4 = frankl_rodl_graph(4);
  const auto alpha4 = independence_number_exact(g4.graph);
  const auto chi4 = chromatic_number_exact(g4.graph);
  const std::size_t n4 = g4.graph.num_vertices();
  r.expect(alpha4.value == oracle::independence(g4.graph), "alpha(G_4) disagrees with enumeration");
  r.expect(chi4.value == oracle::chromatic(g4.graph), "chi(G_4) disagrees with enumeration");
  r.expect(chi4.value * alpha4.value >= n4, "chi(G_4) below |V|/alpha");
  r.expect(verify_real(g4.graph, frankl_rodl_representation(4)).valid(), "G_4 representation rejected");
  r.detail = "alpha(G_8) = " + std::to_string(alpha.value) + ", chi(G_8) >= " + std::to_string(chi_lower) +
             " (exact: " + chi8 + "); G_4: alpha " + std::to_string(alpha4.value) + ", chi " + std::to_string(chi4.value);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::strcmp(argv[1], "--write-golden") == 0) {
    for (std::size_t n : {128U, 256U}) {
      std::ofstream(golden_path(n), std::ios::binary) << golden_report(n);
      std::printf("wrote %s\n", golden_path(n).c_str());
    }
    return 0;
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Kneser/Schrijver od closes at d-2s+2", kneser_od},
      {"strict vector chromatic of Kneser and complete graphs", strict_vector_chromatic_values},
      {"coloring/representation sandwich", sandwich_property},
      {"finite-field od search matches enumeration", finite_field_oracle},
      {"tensor symmetrization over GF(7)", symmetrization},
      {"uniformity reduction", uniformity},
      {"GRW sparsity and Ramsey clique", grw_and_ramsey},
      {"Label Cover completeness", label_cover_completeness},
      {"soundness decoder and pigeonhole", soundness_decoder},
      {"lexicographic composition", lexicographic},
      {"od-3 coloring pipeline", coloring_pipeline},
      {"Frankl-Rodl representation and bounds", frankl_rodl},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %2zu  %s: %s [%.1f s]%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                since(t0), o.pass ? "" : "\n         first failure: ", o.failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed ? 1 : 0;
}
