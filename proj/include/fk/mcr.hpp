#pragma once

#include <string>
#include <vector>

#include "fk/freealg.hpp"
#include "fk/graph.hpp"
#include "fk/pairing.hpp"
#include "fk/rewrite.hpp"
#include "fk/series.hpp"

namespace fk {

// Output of the pairing-matrix algorithm for minimal coset representatives.
// M collects row words (candidates for E_G inside E_{G'}), N column words
// (E_H inside E_{H'}); |M^d| = |N^d| = the rank of the degree-d matrix.
struct McrResult {
  std::vector<std::vector<Word>> m_words;  // per degree, starting at {empty}
  std::vector<std::vector<Word>> n_words;
  std::vector<size_t> ranks;  // rank at each degree step (|M^{d+1}|)
  int max_degree = 0;
  bool exact = false;      // ambient n <= 5
  bool stabilized = false; // rank reached 0 within the bound
};

// Requires the edge sets of G, H and {e} to partition K_n. Iterates the
// pairing matrix with rows x_ij p (x_ij in G' = G+e, p in M^d) and columns
// x_kl q (x_kl in H' = H+e, q in N^d); row/column selection is greedy in
// the global word order.
McrResult algorithm_mcr(const FreeAlgebra& ctx, const Graph& g, const Graph& h,
                        std::pair<int, int> e, int max_deg, int threads = 1);

// H_G / H_H through max_deg for H a subgraph of G; exact polynomial
// division when both close out within the bound, truncated power-series
// division otherwise. Throws if the division is not exact.
GradedSeries quotient_series(const Graph& h_sub, const Graph& g_sup,
                             const RewriteSystem& rs, int max_deg);

struct TensorReport {
  bool ok = false;
  int max_degree = 0;
  std::vector<Int> lhs;  // coefficients of H_{G1} * H_{G2}
  std::vector<Int> rhs;  // coefficients of H_n
  int first_mismatch = -1;
};

// Checks H_{G1} * H_{G2} = H_n coefficientwise through max_deg for
// complementary G1, G2 in K_n.
TensorReport tensor_check(const Graph& g1, const Graph& g2,
                          const RewriteSystem& rs, int max_deg);

}  // namespace fk
