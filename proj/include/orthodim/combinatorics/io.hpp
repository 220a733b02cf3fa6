#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orthodim/combinatorics/graph.hpp"
#include "orthodim/io_util.hpp"

namespace orthodim {

// Graph:      p graph <n> <m>, then m lines `e <u> <v>` (1-indexed).
// Hypergraph: p hypergraph <n> <m> <k>, then m lines of k vertex indices (1-indexed).
// Coloring:   p coloring <n> <palette>, then n lines `v <vertex> <color>` (both 1-indexed).

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline Graph read_graph(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "graph", 2);
  const auto n = lines.to_int<std::size_t>(toks[2]);
  const auto m = lines.to_int<std::size_t>(toks[3]);
  std::vector<Edge> es;
  es.reserve(m);
  while (lines.next(toks)) {
    if (toks.size() != 3 || toks[0] != "e") lines.fail("expected 'e <u> <v>'");
    const auto u = lines.to_int<std::size_t>(toks[1]);
    const auto v = lines.to_int<std::size_t>(toks[2]);
    if (u < 1 || u > n || v < 1 || v > n) lines.fail("edge endpoint out of range");
    if (u == v) lines.fail("self-loop");
    es.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  }
  if (es.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(es.size()));
  try {
    return Graph(n, std::move(es));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline void write_hypergraph(std::ostream& out, const UniformHypergraph& h) {
  out << "p hypergraph " << h.num_vertices() << ' ' << h.num_hyperedges() << ' ' << h.uniformity() << '\n';
  for (std::size_t i = 0; i < h.num_hyperedges(); ++i) {
    auto e = h.hyperedge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j] + 1;
    out << '\n';
  }
}

inline UniformHypergraph read_hypergraph(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "hypergraph", 3);
  const auto n = lines.to_int<std::size_t>(toks[2]);
  const auto m = lines.to_int<std::size_t>(toks[3]);
  const auto k = lines.to_int<std::size_t>(toks[4]);
  if (k < 2) lines.fail("uniformity must be at least 2");
  std::vector<std::vector<Vertex>> es;
  es.reserve(m);
  while (lines.next(toks)) {
    if (toks.size() != k) lines.fail("hyperedge must list exactly " + std::to_string(k) + " vertices");
    std::vector<Vertex> e;
    for (const auto& t : toks) {
      const auto v = lines.to_int<std::size_t>(t);
      if (v < 1 || v > n) lines.fail("vertex out of range");
      e.push_back(static_cast<Vertex>(v - 1));
    }
    es.push_back(std::move(e));
  }
  if (es.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " hyperedges, found " + std::to_string(es.size()));
  try {
    return UniformHypergraph(n, k, std::move(es));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

/// Reads either format, viewing graphs as 2-uniform hypergraphs.
inline UniformHypergraph read_any_hypergraph(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream probe(text);
  detail::TokenLines lines(probe);
  std::vector<std::string> toks;
  if (!lines.next(toks)) throw ParseError("empty input");
  std::istringstream again(text);
  if (toks.size() >= 2 && toks[0] == "p" && toks[1] == "graph") return UniformHypergraph::from_graph(read_graph(again));
  return read_hypergraph(again);
}

inline void write_coloring(std::ostream& out, const VertexColoring& c) {
  out << "p coloring " << c.colors.size() << ' ' << c.palette << '\n';
  for (std::size_t v = 0; v < c.colors.size(); ++v) out << "v " << v + 1 << ' ' << c.colors[v] + 1 << '\n';
}

inline VertexColoring read_coloring(std::istream& in) {
  detail::TokenLines lines(in);
  std::vector<std::string> toks;
  detail::expect_header(lines, toks, "coloring", 2);
  const auto n = lines.to_int<std::size_t>(toks[2]);
  const auto palette = lines.to_int<std::uint32_t>(toks[3]);
  std::vector<std::uint32_t> colors(n, 0);
  std::vector<char> seen(n, 0);
  while (lines.next(toks)) {
    if (toks.size() != 3 || toks[0] != "v") lines.fail("expected 'v <vertex> <color>'");
    const auto v = lines.to_int<std::size_t>(toks[1]);
    const auto c = lines.to_int<std::uint32_t>(toks[2]);
    if (v < 1 || v > n) lines.fail("vertex out of range");
    if (c < 1 || c > palette) lines.fail("color out of range");
    if (seen[v - 1]) lines.fail("vertex colored twice");
    seen[v - 1] = 1;
    colors[v - 1] = c - 1;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw ParseError("vertex " + std::to_string(v + 1) + " has no color");
  return VertexColoring(std::move(colors), palette);
}

inline std::string to_string(const Graph& g) {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

inline std::string to_string(const UniformHypergraph& h) {
  std::ostringstream s;
  write_hypergraph(s, h);
  return s.str();
}

}  // namespace orthodim
