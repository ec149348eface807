#pragma once

#include <string>
#include <vector>

#include "fk/series.hpp"

namespace fk {

// Data for a simply-laced Weyl group: degrees d_i, Cartan matrix of the
// diagram, and the Coxeter element as the product of simple reflections in
// diagram-label order. |W| = prod d_i is validated on construction against
// the Coxeter number h = max d_i and the rank.
struct WeylData {
  std::string type;  // "A", "D", "E6", "E7", "E8"
  int rank = 0;
  std::vector<int> degrees;
  std::vector<std::vector<int>> cartan;

  static WeylData make(const std::string& type, int rank);

  Int group_order() const;
  // Poincare series W(t) = prod [d_i].
  GradedSeries poincare() const;
  // Characteristic polynomial of the Coxeter element on the root space,
  // computed by exact integer matrix products and Faddeev-LeVerrier.
  GradedSeries coxeter_charpoly() const;
};

// W(t) / C(t); the division must be exact.
GradedSeries weyl_ratio(const WeylData& data);

// Parses "A3", "D4", "E6", ...
WeylData parse_weyl_type(const std::string& text);

}  // namespace fk
