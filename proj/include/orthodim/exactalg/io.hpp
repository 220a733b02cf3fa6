#pragma once

#include <istream>
#include <ostream>

#include "orthodim/exactalg/linalg.hpp"
#include "orthodim/io_util.hpp"

namespace orthodim {

// Matrix: p matrix <rows> <cols> <field>, then one row of scalars per line.

namespace detail {

inline Field parse_field_token(TokenLines& lines, const std::string& tok) {
  try {
    return Field::parse(tok);
  } catch (const InvalidArgument& e) {
    lines.fail(e.what());
  }
}

inline std::vector<FieldScalar> parse_scalar_row(TokenLines& lines, const std::vector<std::string>& toks, Field f,
                                                 std::size_t width) {
  if (toks.size() != width) lines.fail("expected " + std::to_string(width) + " scalars, got " + std::to_string(toks.size()));
  std::vector<FieldScalar> row;
  row.reserve(width);
  for (const auto& t : toks) {
    try {
      row.push_back(FieldScalar::parse(f, t));
    } catch (const InvalidArgument& e) {
      lines.fail(e.what());
    }
  }
  return row;
}

}  // namespace detail

inline void write_matrix(std::ostream& out, const ExactMatrix& m) {
  out << "p matrix " << m.rows() << ' ' << m.cols() << ' ' << m.field().name() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j).to_string();
    out << '\n';
  }
}

inline ExactMatrix read_matrix(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "matrix", 3);
  const auto r = lines.to_int<std::size_t>(toks[2]);
  const auto c = lines.to_int<std::size_t>(toks[3]);
  const Field f = detail::parse_field_token(lines, toks[4]);
  ExactMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!lines.next(toks)) throw ParseError("expected " + std::to_string(r) + " matrix rows", lines.line());
    auto row = detail::parse_scalar_row(lines, toks, f, c);
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, row[j]);
  }
  if (lines.next(toks)) lines.fail("trailing data after matrix");
  return m;
}

}  // namespace orthodim
