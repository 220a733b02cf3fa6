#pragma once

#include <iomanip>
#include <istream>
#include <ostream>

#include "orthodim/io_util.hpp"
#include "orthodim/sdp/solver.hpp"

namespace orthodim {

// Gram matrix: p gram <n>, then n rows of n floats.
// Vectors:     p vectors <n> <r>, then n rows of r floats.

namespace detail {

template <class M>
void write_rows(std::ostream& out, const M& m) {
  const auto old = out.precision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  out.precision(old);
}

template <class M>
void read_rows(TokenLines& lines, std::vector<std::string>& toks, M& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!lines.next(toks)) throw ParseError("expected " + std::to_string(m.rows()) + " rows", lines.line());
    if (static_cast<Eigen::Index>(toks.size()) != m.cols())
      lines.fail("expected " + std::to_string(m.cols()) + " entries");
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = lines.to_double(toks[static_cast<std::size_t>(j)]);
  }
  if (lines.next(toks)) lines.fail("trailing data");
}

}  // namespace detail

inline void write_gram(std::ostream& out, const GramMatrix& g) {
  out << "p gram " << g.m.rows() << '\n';
  detail::write_rows(out, g.m);
}

/// Parses a Gram matrix; symmetry is checked exactly, PSD-ness is left to GramMatrix::valid.
inline GramMatrix read_gram(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "gram", 1);
  const auto n = lines.to_int<Eigen::Index>(toks[2]);
  if (n < 0) lines.fail("negative size");
  GramMatrix g{Eigen::MatrixXd(n, n)};
  detail::read_rows(lines, toks, g.m);
  if (g.m != g.m.transpose()) throw ParseError("gram matrix is not symmetric");
  return g;
}

inline void write_vectors(std::ostream& out, const RowMatrix& v) {
  out << "p vectors " << v.rows() << ' ' << v.cols() << '\n';
  detail::write_rows(out, v);
}

inline RowMatrix read_vectors(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "vectors", 2);
  const auto n = lines.to_int<Eigen::Index>(toks[2]);
  const auto r = lines.to_int<Eigen::Index>(toks[3]);
  if (n < 0 || r < 0) lines.fail("negative size");
  RowMatrix v(n, r);
  detail::read_rows(lines, toks, v);
  return v;
}

}  // namespace orthodim
