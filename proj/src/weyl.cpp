#include "fk/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "fk/graph.hpp"

namespace fk {

namespace {

std::vector<std::vector<int>> cartan_from_graph(const Graph& g) {
  int r = g.n();
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  for (const auto& e : g.edges()) {
    c[e.first - 1][e.second - 1] = -1;
    c[e.second - 1][e.first - 1] = -1;
  }
  return c;
}

}  // namespace

WeylData WeylData::make(const std::string& type, int rank) {
  WeylData d;
  d.type = type;
  d.rank = rank;
  Graph diagram;
  if (type == "A") {
    if (rank < 1) throw std::invalid_argument("A rank >= 1");
    for (int k = 2; k <= rank + 1; ++k) d.degrees.push_back(k);
    diagram = named_graph("A", {rank});
  } else if (type == "D") {
    if (rank < 3) throw std::invalid_argument("D rank >= 3");
    d.degrees.push_back(rank);
    for (int k = 2; k <= 2 * rank - 2; k += 2) d.degrees.push_back(k);
    diagram = named_graph("D", {rank});
  } else if (type == "E6") {
    d.rank = rank = 6;
    d.degrees = {2, 5, 6, 8, 9, 12};
    diagram = named_graph("E6", {});
  } else if (type == "E7") {
    d.rank = rank = 7;
    d.degrees = {2, 6, 8, 10, 12, 14, 18};
    diagram = named_graph("E7", {});
  } else if (type == "E8") {
    d.rank = rank = 8;
    d.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
    diagram = named_graph("E8", {});
  } else {
    throw std::invalid_argument("unknown Weyl type " + type);
  }
  std::sort(d.degrees.begin(), d.degrees.end());
  d.cartan = cartan_from_graph(diagram);
  // Internal consistency: rank many degrees, Coxeter number = max degree,
  // sum of (d_i - 1) = number of positive roots = rank * h / 2.
  if (static_cast<int>(d.degrees.size()) != d.rank)
    throw std::logic_error("degree list does not match rank");
  long long pos_roots = 0;
  for (int k : d.degrees) pos_roots += k - 1;
  if (2 * pos_roots != static_cast<long long>(d.rank) * d.degrees.back())
    throw std::logic_error("Weyl degree data inconsistent");
  return d;
}

Int WeylData::group_order() const {
  Int w(1);
  for (int k : degrees) w *= k;
  return w;
}

GradedSeries WeylData::poincare() const {
  GradedSeries out = GradedSeries::one();
  for (int k : degrees) out = out * GradedSeries::qint(k);
  return out;
}

GradedSeries WeylData::coxeter_charpoly() const {
  int r = rank;
  // Simple reflection on the root-space basis of simple roots:
  // s_i(alpha_j) = alpha_j - C_ij alpha_i, so M(s_i) = I - e_i * (row i of C).
  auto matmul = [&](const std::vector<std::vector<Rat>>& a,
                    const std::vector<std::vector<Rat>>& b) {
    std::vector<std::vector<Rat>> c(r, std::vector<Rat>(r, Rat(0)));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };
  std::vector<std::vector<Rat>> cox(r, std::vector<Rat>(r, Rat(0)));
  for (int i = 0; i < r; ++i) cox[i][i] = 1;
  for (int i = 0; i < r; ++i) {
    std::vector<std::vector<Rat>> refl(r, std::vector<Rat>(r, Rat(0)));
    for (int a = 0; a < r; ++a) refl[a][a] = 1;
    for (int j = 0; j < r; ++j) refl[i][j] -= cartan[i][j];
    cox = matmul(cox, refl);
  }
  // Faddeev-LeVerrier: char poly of cox with exact rationals.
  std::vector<Rat> coeffs(r + 1, Rat(0));
  coeffs[r] = 1;
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r, Rat(0)));
  for (int k = 1; k <= r; ++k) {
    // m = cox * (m + c_{r-k+1} I)
    std::vector<std::vector<Rat>> shifted = m;
    for (int i = 0; i < r; ++i) shifted[i][i] += coeffs[r - k + 1];
    m = matmul(cox, shifted);
    Rat tr(0);
    for (int i = 0; i < r; ++i) tr += m[i][i];
    coeffs[r - k] = -tr / k;
  }
  GradedSeries out{std::vector<Rat>(coeffs.begin(), coeffs.end())};
  return out;
}

GradedSeries weyl_ratio(const WeylData& data) {
  GradedSeries w = data.poincare();
  GradedSeries c = data.coxeter_charpoly();
  auto [q, rem] = w.exact_divide(c);
  if (!rem.is_zero())
    throw std::logic_error("Poincare series not divisible by Coxeter characteristic polynomial");
  return q;
}

WeylData parse_weyl_type(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad Weyl type " + text);
  if (text[0] == 'A' || text[0] == 'D') {
    int rank = std::stoi(text.substr(1));
    return WeylData::make(std::string(1, text[0]), rank);
  }
  if (text == "E6" || text == "E7" || text == "E8") return WeylData::make(text, 0);
  throw std::invalid_argument("bad Weyl type " + text);
}

}  // namespace fk
