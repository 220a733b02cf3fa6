#pragma once

#include "orthodim/combinatorics/families.hpp"
#include "orthodim/combinatorics/io.hpp"
#include "orthodim/reductions/provenance.hpp"

namespace orthodim {

struct ReducedGraph {
  Graph graph;
  Provenance provenance;
};

/// G ↦ F • G. Vertex (x,y) of the product has index x*|V(G)| + y.
inline ReducedGraph lexicographic_reduce(const Graph& f, const Graph& g) {
  ReducedGraph out{lexicographic_product(f, g), {}};
  out.provenance.reduction = "lexicographic";
  out.provenance.add("outer_vertices", f.num_vertices());
  out.provenance.add("inner_vertices", g.num_vertices());
  out.provenance.input_digests = {digest_hex(to_string(f)), digest_hex(to_string(g))};
  return out;
}

}  // namespace orthodim
