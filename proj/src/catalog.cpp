#include "fk/catalog.hpp"

#include <stdexcept>

namespace fk {

namespace {

CatalogEntry make_entry(const std::string& id, const std::string& edges,
                        const std::string& brackets, int top, const char* dim) {
  CatalogEntry e;
  e.id = id;
  e.graph = parse_edge_list(edges);
  e.brackets = brackets;
  e.series = parse_brackets(brackets);
  e.top_degree = top;
  e.dimension = Int(dim);
  if (e.series.degree() != top)
    throw std::logic_error("catalog " + id + ": degree mismatch");
  if (e.series.eval_one() != Rat(e.dimension))
    throw std::logic_error("catalog " + id + ": dimension mismatch");
  if (!e.series.integer_coeffs())
    throw std::logic_error("catalog " + id + ": non-integer series");
  if (Rat(e.graph.num_edges()) != e.series.coeff(1))
    throw std::logic_error("catalog " + id + ": edge count mismatch");
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> rows;
  // two vertices
  rows.push_back(make_entry("k2", "1-2", "[2]", 1, "2"));
  // three vertices
  rows.push_back(make_entry("path3", "1-2,2-3", "[2][3]", 3, "6"));
  rows.push_back(make_entry("triangle", "1-2,1-3,2-3", "[2]^2[3]", 4, "12"));
  // four vertices
  rows.push_back(make_entry("path4", "1-2,2-3,3-4", "[2][3][4]", 6, "24"));
  rows.push_back(make_entry("star4", "1-2,1-3,1-4", "[3][4]^2", 8, "48"));
  rows.push_back(make_entry("paw", "1-2,1-3,2-3,3-4", "[2][3][4]^2", 9, "96"));
  rows.push_back(make_entry("cycle4", "1-2,2-3,3-4,1-4", "[3]^2[4]^2", 10, "144"));
  rows.push_back(make_entry("diamond", "1-2,1-3,1-4,2-3,2-4", "[2][3]^2[4]^2", 11, "288"));
  rows.push_back(make_entry("k4", "1-2,1-3,1-4,2-3,2-4,3-4", "[2]^2[3]^2[4]^2", 12, "576"));
  // five vertices
  rows.push_back(make_entry("path5", "1-2,2-3,3-4,4-5", "[2][3][4][5]", 10, "120"));
  rows.push_back(make_entry("fork5", "1-3,2-3,3-4,4-5", "[4]^2[5][6]", 15, "480"));
  rows.push_back(make_entry("star5", "1-2,1-3,1-4,1-5",
                            "[2]^{-2}[3]^{-2}[4]^2[5]^2[6]^4", 28, "14400"));
  rows.push_back(make_entry("tadpole5", "1-2,1-3,2-3,3-4,4-5", "[2][4]^2[5][6]", 16, "960"));
  rows.push_back(make_entry("bull", "1-2,1-3,2-3,1-4,2-5", "[4]^2[5][6]^2", 20, "2880"));
  rows.push_back(make_entry("cycle5", "1-2,2-3,3-4,4-5,1-5", "[4]^2[5][6]^2", 20, "2880"));
  rows.push_back(make_entry("cycle4_tail", "1-2,2-3,3-4,1-4,1-5",
                            "[2]^{-1}[4]^2[5][6]^3", 24, "8640"));
  rows.push_back(make_entry("cricket", "1-2,1-3,2-3,1-4,1-5",
                            "[2]^{-1}[3]^{-2}[4]^2[5]^2[6]^4", 29, "28800"));
  rows.push_back(make_entry("diamond_tail2", "1-2,1-3,1-4,2-3,2-4,3-5",
                            "[4]^2[5][6]^3", 25, "17280"));
  rows.push_back(make_entry("bowtie", "1-2,1-3,2-3,1-4,1-5,4-5",
                            "[3]^{-2}[4]^2[5]^2[6]^4", 30, "57600"));
  rows.push_back(make_entry("house", "1-2,2-3,3-4,4-5,1-5,1-4",
                            "[2]^{-1}[3]^{-1}[4]^3[5][6]^4", 30, "69120"));
  rows.push_back(make_entry("diamond_tail3", "1-2,1-3,1-4,2-3,2-4,1-5",
                            "[2]^{-1}[3]^{-1}[4]^2[5]^2[6]^4", 31, "86400"));
  rows.push_back(make_entry("k23", "1-3,1-4,1-5,2-3,2-4,2-5",
                            "[2]^{-3}[3]^{-1}[4]^4[5]^2[6]^4", 35, "345600"));
  rows.push_back(make_entry("k4_tail", "1-2,1-3,1-4,2-3,2-4,3-4,1-5",
                            "[3]^{-1}[4]^2[5]^2[6]^4", 32, "172800"));
  rows.push_back(make_entry("bowtie_chord", "1-2,1-3,2-3,1-4,1-5,4-5,2-4",
                            "[2]^{-1}[3]^{-1}[4]^3[5]^2[6]^4", 34, "345600"));
  rows.push_back(make_entry("k23_chord", "1-3,1-4,1-5,2-3,2-4,2-5,3-4",
                            "[2]^{-2}[3]^{-1}[4]^4[5]^2[6]^4", 36, "691200"));
  rows.push_back(make_entry("k113", "1-2,1-3,1-4,1-5,2-3,2-4,2-5",
                            "[2]^{-2}[3]^{-1}[4]^4[5]^2[6]^4", 36, "691200"));
  rows.push_back(make_entry("k5_minus_path3", "1-3,1-4,1-5,2-4,2-5,3-4,3-5,4-5",
                            "[2]^{-1}[3]^{-1}[4]^4[5]^2[6]^4", 37, "1382400"));
  rows.push_back(make_entry("wheel5", "1-2,1-3,1-4,1-5,2-3,3-4,4-5,2-5",
                            "[2]^{-2}[4]^4[5]^2[6]^4", 38, "2073600"));
  rows.push_back(make_entry("k5_minus_edge", "1-2,1-3,1-4,1-5,2-3,2-4,2-5,3-4,3-5",
                            "[2]^{-1}[4]^4[5]^2[6]^4", 39, "4147200"));
  rows.push_back(make_entry("k5", "1-2,1-3,1-4,1-5,2-3,2-4,2-5,3-4,3-5,4-5",
                            "[4]^4[5]^2[6]^4", 40, "8294400"));
  if (rows.size() != 30) throw std::logic_error("catalog must have 30 rows");
  return rows;
}

}  // namespace

const std::vector<CatalogEntry>& appendix_catalog() {
  static const std::vector<CatalogEntry> rows = build_catalog();
  return rows;
}

}  // namespace fk
