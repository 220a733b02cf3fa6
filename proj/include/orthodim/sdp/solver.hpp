#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <random>
#include <string>

#include "orthodim/combinatorics/exact_search.hpp"
#include "orthodim/combinatorics/graph.hpp"
#include "orthodim/error.hpp"

namespace orthodim {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SdpConfig {
  double eps_psd = 1e-7;
  double eps_con = 1e-6;
  double eps_diag = 1e-8;
  double eps_obj = 1e-4;
  int max_iterations = 20000;  // per feasibility solve
  int bisection_steps = 40;
  std::uint64_t seed = 0;
  std::size_t rank = 0;  // factorization width; 0 picks it from n and |E|

  void validate() const {
    detail::require(eps_psd > 0 && eps_con > 0 && eps_diag > 0 && eps_obj > 0, "sdp: tolerances must be positive");
    detail::require(max_iterations > 0 && bisection_steps > 0, "sdp: iteration budgets must be positive");
  }
};

/// Unit vectors (rows) with edge inner products at most (or, strict, exactly)
/// -1/(kappa-1) up to `residual`.
struct VectorColoring {
  RowMatrix vectors;  // n x r
  double kappa = 1.0;
  double residual = 0.0;  // max edge constraint violation
  bool strict = false;
};

/// Symmetric PSD matrix with unit diagonal.
struct GramMatrix {
  Eigen::MatrixXd m;

  static GramMatrix from_vectors(const RowMatrix& v) { return {v * v.transpose()}; }

  double min_eigenvalue() const {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
  double diagonal_error() const {
    return m.rows() == 0 ? 0.0 : (m.diagonal().array() - 1.0).abs().maxCoeff();
  }
  bool valid(const SdpConfig& cfg) const {
    return m.rows() == m.cols() && m.isApprox(m.transpose(), 0.0) && min_eigenvalue() >= -cfg.eps_psd &&
           diagonal_error() <= cfg.eps_diag;
  }
};

namespace detail {

inline double kappa_of_t(double t) { return 1.0 - 1.0 / t; }
inline double t_of_kappa(double kappa) { return -1.0 / (kappa - 1.0); }

inline std::size_t default_rank(const Graph& g, const SdpConfig& cfg) {
  if (cfg.rank) return cfg.rank;
  const double pataki = std::ceil(std::sqrt(2.0 * static_cast<double>(g.num_vertices() + g.num_edges()))) + 1;
  return std::max<std::size_t>(2, std::min<std::size_t>(g.num_vertices(), static_cast<std::size_t>(pataki)));
}

// Max edge violation of unit rows V at level t.
inline double edge_residual(const Graph& g, const RowMatrix& v, double t, bool strict) {
  double worst = 0.0;
  for (const auto& e : g.edges()) {
    const double ip = v.row(e.u).dot(v.row(e.v));
    worst = std::max(worst, strict ? std::abs(ip - t) : ip - t);
  }
  return worst;
}

inline RowMatrix normalize_rows(const RowMatrix& x) {
  RowMatrix v = x;
  for (Eigen::Index i = 0; i < v.rows(); ++i) v.row(i) /= v.row(i).norm();
  return v;
}

// Vertex i gets vertex c(i) of a regular simplex with c vertices
// (pairwise inner product -1/(c-1)), embedded in the first c coordinates.
inline RowMatrix simplex_embedding(const VertexColoring& c, std::size_t r) {
  const auto k = static_cast<Eigen::Index>(std::max<std::uint32_t>(c.palette, 2));
  detail::require(static_cast<Eigen::Index>(r) >= k, "simplex_embedding: rank below palette size");
  RowMatrix v = RowMatrix::Zero(static_cast<Eigen::Index>(c.colors.size()), static_cast<Eigen::Index>(r));
  const double centre = 1.0 / static_cast<double>(k);
  const double scale = 1.0 / std::sqrt(1.0 - centre);
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    for (Eigen::Index j = 0; j < k; ++j) v(static_cast<Eigen::Index>(i), j) = -centre * scale;
    v(static_cast<Eigen::Index>(i), c.colors[i]) += scale;
  }
  return v;
}

struct FeasibilityOutcome {
  bool feasible = false;
  RowMatrix vectors;  // unit rows
  double residual = 0;
  int iterations = 0;
};

// Minimizes 1/2 sum_e r_e^2 over row-normalized X by L-BFGS, where
// r_e = <v_i,v_j> - t (strict) or max(0, <v_i,v_j> - t).
class LowRankFeasibility {
 public:
  LowRankFeasibility(const Graph& g, double t, bool strict, const SdpConfig& cfg)
      : g_(g), t_(t), strict_(strict), cfg_(cfg) {}

  FeasibilityOutcome run(RowMatrix x) {
    const Eigen::Index n = x.rows(), r = x.cols();
    const Eigen::Index dim = n * r;
    constexpr int kMemory = 10;
    std::deque<Eigen::VectorXd> ss, ys;
    std::deque<double> rhos;
    RowMatrix grad(n, r);
    double maxres = 0;
    double f = evaluate(x, grad, maxres);
    std::deque<double> history;
    FeasibilityOutcome out;
    for (int it = 0; it < cfg_.max_iterations; ++it) {
      out.iterations = it;
      if (maxres <= 0.5 * cfg_.eps_con) break;
      Eigen::Map<const Eigen::VectorXd> gvec(grad.data(), dim);
      if (gvec.lpNorm<Eigen::Infinity>() < 1e-14) break;
      // Two-loop recursion.
      Eigen::VectorXd q = gvec;
      std::vector<double> alpha(ss.size());
      for (int i = static_cast<int>(ss.size()) - 1; i >= 0; --i) {
        alpha[i] = rhos[i] * ss[i].dot(q);
        q -= alpha[i] * ys[i];
      }
      if (!ss.empty()) q *= ss.back().dot(ys.back()) / ys.back().squaredNorm();
      else q /= std::max(1.0, gvec.norm());
      for (std::size_t i = 0; i < ss.size(); ++i) {
        const double beta = rhos[i] * ys[i].dot(q);
        q += (alpha[i] - beta) * ss[i];
      }
      Eigen::VectorXd d = -q;
      double slope = gvec.dot(d);
      if (!(slope < 0)) {
        ss.clear();
        ys.clear();
        rhos.clear();
        d = -gvec / std::max(1.0, gvec.norm());
        slope = gvec.dot(d);
      }
      // Backtracking Armijo line search.
      double step = 1.0;
      RowMatrix xn(n, r), gn(n, r);
      double fn = 0, resn = 0;
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls) {
        Eigen::Map<Eigen::VectorXd>(xn.data(), dim) = Eigen::Map<const Eigen::VectorXd>(x.data(), dim) + step * d;
        fn = evaluate(xn, gn, resn);
        if (fn <= f + 1e-4 * step * slope) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
      Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(xn.data(), dim) - Eigen::Map<const Eigen::VectorXd>(x.data(), dim);
      Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(gn.data(), dim) - gvec;
      const double sy = s.dot(y);
      if (sy > 1e-12 * s.norm() * y.norm()) {
        ss.push_back(std::move(s));
        ys.push_back(std::move(y));
        rhos.push_back(1.0 / sy);
        if (ss.size() > kMemory) {
          ss.pop_front();
          ys.pop_front();
          rhos.pop_front();
        }
      }
      x.swap(xn);
      grad.swap(gn);
      f = fn;
      maxres = resn;
      // Keep row norms near 1; the objective only sees directions.
      const double lo = x.rowwise().norm().minCoeff(), hi = x.rowwise().norm().maxCoeff();
      if (lo < 0.5 || hi > 2.0) {
        x = normalize_rows(x);
        f = evaluate(x, grad, maxres);
        ss.clear();
        ys.clear();
        rhos.clear();
      }
      // Stagnation at a positive value indicates infeasibility.
      history.push_back(f);
      if (history.size() > 500) {
        const double old = history.front();
        history.pop_front();
        if (old - f <= 1e-8 * old) break;
      }
    }
    out.vectors = normalize_rows(x);
    out.residual = edge_residual(g_, out.vectors, t_, strict_);
    out.feasible = out.residual <= cfg_.eps_con;
    return out;
  }

 private:
  double evaluate(const RowMatrix& x, RowMatrix& grad, double& maxres) const {
    const Eigen::VectorXd norms = x.rowwise().norm();
    RowMatrix v = x;
    for (Eigen::Index i = 0; i < v.rows(); ++i) v.row(i) /= norms(i);
    RowMatrix gv = RowMatrix::Zero(x.rows(), x.cols());
    double f = 0;
    maxres = 0;
    for (const auto& e : g_.edges()) {
      double res = v.row(e.u).dot(v.row(e.v)) - t_;
      if (!strict_) res = std::max(res, 0.0);
      maxres = std::max(maxres, std::abs(res));
      if (res == 0.0) continue;
      f += 0.5 * res * res;
      gv.row(e.u) += res * v.row(e.v);
      gv.row(e.v) += res * v.row(e.u);
    }
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const double radial = gv.row(i).dot(v.row(i));
      grad.row(i) = (gv.row(i) - radial * v.row(i)) / norms(i);
    }
    return f;
  }

  const Graph& g_;
  double t_;
  bool strict_;
  const SdpConfig& cfg_;
};

inline RowMatrix random_start(std::size_t n, std::size_t r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RowMatrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(r));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = gauss(rng);
  return normalize_rows(x);
}

// Resizes a warm start to width r (zero padding or truncation) and perturbs
// it slightly so that no row is degenerate.
inline RowMatrix fit_warm_start(const RowMatrix& warm, std::size_t r, std::uint64_t seed) {
  RowMatrix x = RowMatrix::Zero(warm.rows(), static_cast<Eigen::Index>(r));
  const Eigen::Index c = std::min<Eigen::Index>(warm.cols(), static_cast<Eigen::Index>(r));
  x.leftCols(c) = warm.leftCols(c);
  x += 1e-3 * random_start(static_cast<std::size_t>(warm.rows()), r, seed);
  return normalize_rows(x);
}

}  // namespace detail

struct SdpResult {
  double kappa = 1.0;
  VectorColoring coloring;
  bool converged = true;
  int bisection_steps = 0;
  long iterations = 0;
};

/// A vector coloring of g at level kappa, if the solver finds one. The warm
/// start, when given, must have one row per vertex.
inline std::optional<VectorColoring> vector_coloring_at(const Graph& g, double kappa, bool strict,
                                                        const SdpConfig& cfg = {},
                                                        const RowMatrix* warm = nullptr) {
  cfg.validate();
  detail::require(kappa > 1.0, "vector_coloring_at: kappa must exceed 1");
  const std::size_t n = g.num_vertices();
  const double t = detail::t_of_kappa(kappa);
  if (g.num_edges() == 0 || n == 0) {
    VectorColoring vc;
    vc.vectors = RowMatrix::Zero(static_cast<Eigen::Index>(n), 1);
    if (n) vc.vectors.col(0).setOnes();
    vc.kappa = kappa;
    vc.strict = strict;
    return vc;
  }
  const std::size_t r = detail::default_rank(g, cfg);
  RowMatrix x;
  if (warm) {
    detail::require(static_cast<std::size_t>(warm->rows()) == n, "vector_coloring_at: warm start has the wrong size");
    const RowMatrix v = detail::normalize_rows(*warm);
    if (detail::edge_residual(g, v, t, strict) <= cfg.eps_con) {
      VectorColoring vc{v, kappa, detail::edge_residual(g, v, t, strict), strict};
      return vc;
    }
    x = detail::fit_warm_start(*warm, std::max<std::size_t>(r, static_cast<std::size_t>(warm->cols())), cfg.seed);
  } else {
    x = detail::random_start(n, r, cfg.seed);
  }
  auto out = detail::LowRankFeasibility(g, t, strict, cfg).run(std::move(x));
  if (!out.feasible) return std::nullopt;
  return VectorColoring{std::move(out.vectors), kappa, out.residual, strict};
}

namespace detail {

inline SdpResult solve_vector_chromatic(const Graph& g, const SdpConfig& cfg, bool strict) {
  cfg.validate();
  SdpResult res;
  const std::size_t n = g.num_vertices();
  if (g.num_edges() == 0) {
    // Convention: no edge constraints, kappa = 1.
    res.kappa = 1.0;
    res.coloring.vectors = RowMatrix::Zero(static_cast<Eigen::Index>(n), 1);
    if (n) res.coloring.vectors.col(0).setOnes();
    res.coloring.kappa = 1.0;
    res.coloring.strict = strict;
    return res;
  }
  const VertexColoring greedy = greedy_coloring(g);
  const std::size_t r = std::max<std::size_t>(default_rank(g, cfg), greedy.palette);
  // The simplex on the greedy classes is feasible at t = -1/(c-1).
  RowMatrix best = simplex_embedding(greedy, r);
  double hi = -1.0 / (std::max<double>(greedy.palette, 2.0) - 1.0);
  double best_res = edge_residual(g, best, hi, strict);
  double lo = -1.0;
  if (greedy.palette <= 2) lo = hi = -1.0;  // antipodal pairs are optimal: kappa = 2
  std::uint64_t salt = 0;
  for (int step = 0; step < cfg.bisection_steps && kappa_of_t(hi) - kappa_of_t(lo) > 0.1 * cfg.eps_obj; ++step) {
    const double mid = 0.5 * (lo + hi);
    SdpConfig local = cfg;
    local.seed = cfg.seed + (++salt);
    RowMatrix x = fit_warm_start(best, r, local.seed);
    auto out = LowRankFeasibility(g, mid, strict, local).run(std::move(x));
    res.iterations += out.iterations;
    res.bisection_steps = step + 1;
    if (out.feasible) {
      hi = mid;
      best = std::move(out.vectors);
      best_res = out.residual;
    } else {
      lo = mid;
    }
  }
  res.converged = kappa_of_t(hi) - kappa_of_t(lo) <= cfg.eps_obj;
  res.kappa = kappa_of_t(hi);
  res.coloring = VectorColoring{std::move(best), res.kappa, best_res, strict};
  return res;
}

}  // namespace detail

/// Vector chromatic number: min t with unit vectors and <u_i,u_j> <= t on
/// edges, reported as kappa = 1 - 1/t. An edgeless graph has kappa = 1.
inline SdpResult vector_chromatic(const Graph& g, const SdpConfig& cfg = {}) {
  return detail::solve_vector_chromatic(g, cfg, false);
}

/// Strict variant with <u_i,u_j> = t on edges; equals the Lovász theta of the complement.
inline SdpResult strict_vector_chromatic(const Graph& g, const SdpConfig& cfg = {}) {
  return detail::solve_vector_chromatic(g, cfg, true);
}

/// Throws VerificationError unless vc satisfies its constraints on g within cfg tolerances.
inline void check_vector_coloring(const Graph& g, const VectorColoring& vc, const SdpConfig& cfg = {}) {
  if (static_cast<std::size_t>(vc.vectors.rows()) != g.num_vertices())
    throw VerificationError("vector coloring has the wrong number of vectors");
  for (Eigen::Index i = 0; i < vc.vectors.rows(); ++i)
    if (std::abs(vc.vectors.row(i).norm() - 1.0) > cfg.eps_diag)
      throw VerificationError("vector coloring: vector " + std::to_string(i + 1) + " is not unit length");
  if (g.num_edges() == 0) return;
  const double r = detail::edge_residual(g, vc.vectors, detail::t_of_kappa(vc.kappa), vc.strict);
  if (r > cfg.eps_con)
    throw VerificationError("vector coloring: edge residual " + std::to_string(r) + " exceeds " + std::to_string(cfg.eps_con));
}

}  // namespace orthodim
