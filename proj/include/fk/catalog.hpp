#pragma once

#include <string>
#include <vector>

#include "fk/graph.hpp"
#include "fk/series.hpp"

namespace fk {

// One row of the fixed catalog of connected graphs on at most five
// vertices: a representative labeled graph together with the known Hilbert
// series of its subalgebra E_G, expanded to an integer polynomial.
struct CatalogEntry {
  std::string id;
  Graph graph;
  std::string brackets;  // human-readable factorization
  GradedSeries series;
  int top_degree = 0;
  Int dimension;
};

// All 30 entries: 1 graph on two vertices, 2 on three, 6 on four, 21 on
// five. Labelings are fixed here (one representative per isomorphism
// class); construction validates series(1) == dimension and
// degree == top_degree for every row.
const std::vector<CatalogEntry>& appendix_catalog();

}  // namespace fk
