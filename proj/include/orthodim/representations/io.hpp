#pragma once

#include <istream>
#include <ostream>
#include <variant>

#include "orthodim/exactalg/io.hpp"
#include "orthodim/representations/types.hpp"
#include "orthodim/sdp/io.hpp"

namespace orthodim {

// Representation: p rep <n> <t> <field>, field one of gf:<p>, rat, real;
// then one line of t scalars per vertex.
// Subspaces:      p subspace <n> <t> <k>, then per vertex k lines of t floats
// (the basis vectors of U_v).

using AnyRepresentation = std::variant<ExactOrthogonalRepresentation, RealOrthogonalRepresentation>;

inline void write_representation(std::ostream& out, const ExactOrthogonalRepresentation& rep) {
  out << "p rep " << rep.size() << ' ' << rep.dim << ' ' << rep.field.name() << '\n';
  for (const auto& v : rep.vectors) {
    for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? " " : "") << v[i].to_string();
    out << '\n';
  }
}

inline void write_representation(std::ostream& out, const RealOrthogonalRepresentation& rep) {
  out << "p rep " << rep.size() << ' ' << rep.dim() << " real\n";
  detail::write_rows(out, rep.vectors);
}

inline AnyRepresentation read_representation(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "rep", 3);
  const auto n = lines.to_int<std::size_t>(toks[2]);
  const auto t = lines.to_int<std::size_t>(toks[3]);
  if (toks[4] == "real") {
    RealOrthogonalRepresentation rep;
    rep.vectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(t));
    detail::read_rows(lines, toks, rep.vectors);
    return rep;
  }
  const Field f = detail::parse_field_token(lines, toks[4]);
  std::vector<ExactVector> vs;
  vs.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!lines.next(toks)) throw ParseError("expected " + std::to_string(n) + " vectors", lines.line());
    vs.emplace_back(f, detail::parse_scalar_row(lines, toks, f, t));
  }
  if (lines.next(toks)) lines.fail("trailing data after representation");
  return ExactOrthogonalRepresentation(f, t, std::move(vs));
}

inline void write_subspace(std::ostream& out, const SubspaceRepresentation& rep) {
  out << "p subspace " << rep.size() << ' ' << rep.ambient << ' ' << rep.k << '\n';
  for (const auto& b : rep.bases) detail::write_rows(out, Eigen::MatrixXd(b.transpose()));
}

inline SubspaceRepresentation read_subspace(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "subspace", 3);
  SubspaceRepresentation rep;
  const auto n = lines.to_int<std::size_t>(toks[2]);
  rep.ambient = lines.to_int<std::size_t>(toks[3]);
  rep.k = lines.to_int<std::size_t>(toks[4]);
  const auto t = static_cast<Eigen::Index>(rep.ambient);
  for (std::size_t v = 0; v < n; ++v) {
    Eigen::MatrixXd b(t, static_cast<Eigen::Index>(rep.k));
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (!lines.next(toks)) throw ParseError("expected " + std::to_string(rep.k) + " basis vectors per vertex", lines.line());
      if (static_cast<Eigen::Index>(toks.size()) != t) lines.fail("expected " + std::to_string(t) + " entries");
      for (Eigen::Index i = 0; i < t; ++i) b(i, j) = lines.to_double(toks[static_cast<std::size_t>(i)]);
    }
    rep.bases.push_back(std::move(b));
  }
  if (lines.next(toks)) lines.fail("trailing data after subspaces");
  return rep;
}

}  // namespace orthodim
