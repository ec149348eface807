#include "fk/mcr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fk/threads.hpp"

namespace fk {

namespace {

// Greedy row-echelon over exact integers: feed rows in order, keep the
// independent ones. Returns indices of the kept rows.
class IntEchelon {
 public:
  // Returns true when the row is independent of those kept so far.
  bool offer(std::vector<Rat> row) {
    for (const auto& [pivot, prow] : rows_) {
      if (row[pivot] == 0) continue;
      Rat f = row[pivot];
      for (size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
    }
    size_t pivot = row.size();
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == row.size()) return false;
    Rat inv = Rat(1) / row[pivot];
    for (auto& v : row) v *= inv;
    rows_.emplace_back(pivot, std::move(row));
    return true;
  }

 private:
  std::vector<std::pair<size_t, std::vector<Rat>>> rows_;
};

}  // namespace

McrResult algorithm_mcr(const FreeAlgebra& ctx, const Graph& g, const Graph& h,
                        std::pair<int, int> e, int max_deg, int threads) {
  int n = ctx.n();
  if (g.n() != n || h.n() != n) throw std::invalid_argument("ambient mismatch");
  // G, H, {e} must partition the edges of K_n.
  {
    Graph ge(n, {e});
    if (g.has_edge(e.first, e.second) || h.has_edge(e.first, e.second))
      throw std::invalid_argument("e must not lie in G or H");
    Graph all = g.edge_union(h).edge_union(ge);
    if (all.num_edges() != n * (n - 1) / 2)
      throw std::invalid_argument("G, H, {e} must partition the complete graph");
  }
  Graph gp = g.edge_union(Graph(n, {e}));  // G'
  Graph hp = h.edge_union(Graph(n, {e}));  // H'
  std::vector<int> g_edges = ctx.edge_gens(gp);
  std::vector<int> h_edges = ctx.edge_gens(hp);

  McrResult res;
  res.max_degree = max_deg;
  res.exact = n <= 5;
  res.m_words.push_back({Word()});
  res.n_words.push_back({Word()});
  for (int d = 0; d < max_deg; ++d) {
    const auto& m_prev = res.m_words[d];
    const auto& n_prev = res.n_words[d];
    std::vector<Word> row_words, col_words;
    for (int eg : g_edges)
      for (const auto& p : m_prev) row_words.push_back(Word(1, static_cast<char>(eg)) + p);
    for (int eh : h_edges)
      for (const auto& q : n_prev) col_words.push_back(Word(1, static_cast<char>(eh)) + q);
    std::sort(row_words.begin(), row_words.end(), DeglexLess());
    std::sort(col_words.begin(), col_words.end(), DeglexLess());
    // Pairing matrix, entries computed in parallel.
    std::vector<std::vector<Rat>> mat(row_words.size(),
                                      std::vector<Rat>(col_words.size()));
    parallel_for(row_words.size(), threads, [&](size_t i) {
      PairCache& cache = thread_pair_cache(ctx.n());
      for (size_t j = 0; j < col_words.size(); ++j)
        mat[i][j] = Rat(pair_words(ctx, row_words[i], col_words[j], cache));
    });
    std::vector<Word> m_next, n_next;
    {
      IntEchelon ech;
      for (size_t i = 0; i < row_words.size(); ++i)
        if (ech.offer(mat[i])) m_next.push_back(row_words[i]);
    }
    {
      IntEchelon ech;
      for (size_t j = 0; j < col_words.size(); ++j) {
        std::vector<Rat> col(row_words.size());
        for (size_t i = 0; i < row_words.size(); ++i) col[i] = mat[i][j];
        if (ech.offer(std::move(col))) n_next.push_back(col_words[j]);
      }
    }
    if (m_next.size() != n_next.size())
      throw std::logic_error("row rank != column rank in mcr step");
    res.ranks.push_back(m_next.size());
    res.m_words.push_back(std::move(m_next));
    res.n_words.push_back(std::move(n_next));
    if (res.m_words.back().empty()) {
      res.stabilized = true;
      break;
    }
  }
  return res;
}

GradedSeries quotient_series(const Graph& h_sub, const Graph& g_sup,
                             const RewriteSystem& rs, int max_deg) {
  if (!h_sub.is_subgraph_of(g_sup))
    throw std::invalid_argument("quotient_series needs H a subgraph of G");
  GradedSeries hg = sub_series(g_sup, max_deg, rs);
  GradedSeries hh = sub_series(h_sub, max_deg, rs);
  // When both profiles vanish within range the series are complete
  // polynomials and the quotient must divide exactly.
  bool g_closed = hg.degree() < max_deg;
  bool h_closed = hh.degree() < max_deg;
  if (g_closed && h_closed) {
    auto [q, r] = hg.exact_divide(hh);
    if (!r.is_zero())
      throw std::logic_error("Hilbert series quotient is not exact");
    return q;
  }
  GradedSeries q = hg.series_divide(hh, max_deg);
  for (int d = 0; d <= q.degree(); ++d) {
    if (!is_integer(q.coeff(d)) || q.coeff(d) < 0)
      throw std::logic_error("truncated Hilbert quotient has a bad coefficient");
  }
  return q;
}

TensorReport tensor_check(const Graph& g1, const Graph& g2, const RewriteSystem& rs,
                          int max_deg) {
  if (g1.n() != g2.n()) throw std::invalid_argument("ambient mismatch");
  if (!(g1.complement() == g2))
    throw std::invalid_argument("tensor_check needs complementary graphs");
  TensorReport rep;
  rep.max_degree = max_deg;
  GradedSeries s1 = sub_series(g1, max_deg, rs);
  GradedSeries s2 = sub_series(g2, max_deg, rs);
  GradedSeries prod = s1 * s2;
  rep.ok = true;
  for (int d = 0; d <= max_deg; ++d) {
    Int lhs = prod.coeff(d).get_num();
    Int rhs = rs.graded_dim_full(d);
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    if (lhs != rhs && rep.first_mismatch < 0) {
      rep.ok = false;
      rep.first_mismatch = d;
    }
  }
  return rep;
}

}  // namespace fk
