#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fk/freealg.hpp"
#include "fk/graph.hpp"
#include "fk/rational.hpp"
#include "fk/series.hpp"

namespace fk {

// Element of the extended affine symmetric group in window notation: a
// bijection f of the integers with f(i+n) = f(i)+n, stored by its window
// (f(1),...,f(n)) and normalized so the level sum(f(i)-i)/n lies in
// [0, n). Shifting the whole window by n is the identity translation, so
// the normalized window is a canonical representative.
class AffinePerm {
 public:
  explicit AffinePerm(int n);  // identity
  AffinePerm(int n, std::vector<long long> window);

  int n() const { return n_; }
  const std::vector<long long>& window() const { return win_; }
  long long eval(long long x) const;  // f(x) for any integer
  int level() const;                  // pi-power component, in [0, n)

  static AffinePerm identity(int n);
  static AffinePerm s(int n, int i);   // simple reflection, i in 0..n-1
  static AffinePerm pi(int n);         // rotation, length 0
  static AffinePerm y(int n, int i);   // translation by epsilon_i, i in 1..n
  static AffinePerm from_perm(const Perm& p);

  AffinePerm compose(const AffinePerm& other) const;  // this(other(x))
  AffinePerm inverse() const;
  AffinePerm pi_power(int k) const;  // pi^k * this

  // Coxeter length of the non-extended part (pi contributes 0):
  // sum_{1<=i<j<=n} |floor((w(j)-w(i))/n)|.
  long long length() const;

  bool operator==(const AffinePerm& o) const { return n_ == o.n_ && win_ == o.win_; }
  bool operator<(const AffinePerm& o) const { return win_ < o.win_; }

  // Is i (0..n-1) a left descent: l(s_i w) < l(w)?
  bool left_descent(int i) const;

 private:
  void normalize();
  int n_;
  std::vector<long long> win_;
};

// Nil-Coxeter product: uv when lengths add, nullopt otherwise.
std::optional<AffinePerm> nilcox_mult(const AffinePerm& u, const AffinePerm& v);

struct ReducedWord {
  int pi_power = 0;
  std::vector<int> letters;  // simple-reflection indices, 0..n-1
};

// Canonical reduced word: peel the smallest left-descent index repeatedly
// from the non-extended part.
ReducedWord reduced_word(const AffinePerm& w);
AffinePerm evaluate_word(int n, const ReducedWord& rw);
std::string render_reduced_word(const ReducedWord& rw);

// ------- Grassmannian permutations via the delta rule -------

using Partition = std::vector<int>;  // weakly decreasing, no trailing zeros needed

struct DeltaTableau {
  Partition outer;
  Partition inner;  // empty for straight shapes
  int k = 0;
  // entry at row i (1-based), column j (1-based) is k + j - i
  int entry(int i, int j) const { return k + j - i; }
};

// Validates the shape against the k x (n-k) box and fixes the entries.
DeltaTableau delta_tableau(const Partition& outer, const Partition& inner, int k, int n);

// Letters read by removing boxes column-by-column from the rightmost
// column, bottom-to-top within a column (every removed box is an outer
// corner of the remaining shape). Evaluates to gamma(outer/inner).
std::vector<int> gamma_word(const Partition& outer, const Partition& inner, int k, int n);
// gamma(lambda) as a group element (finite: letters 1..n-1).
AffinePerm gamma_perm(const Partition& lambda, int k, int n);

struct EkTerm {
  Partition lambda;
  std::vector<int> letters;  // affine letters of sigma_pi^{-k}(gamma(lambda)) gamma(Omega/lambda)
};

// The C(n,k) reduced factorizations of pi^{-k} y_{i1}...y_{ik}, one per
// partition in the k x (n-k) box; each has length k(n-k).
std::vector<EkTerm> ek_terms(int n, int k);

// ------- the cycle subalgebra -------

// Cyclic orientation of the n-cycle used by theta: edge i runs from vertex
// i+1 to vertex (i+1 mod n)+1.
OrientedGraph cycle_oriented(int n);

// Maps nil-Coxeter letters to signed generators along og's directed edges.
Element theta(const FreeAlgebra& ctx, const std::vector<int>& letters,
              const OrientedGraph& og);

// R_k = pi^{-k} e_k(y_1,...,y_n) as an element over the n-cycle's edges:
// C(n,k) monomials of degree k(n-k).
Element rk_element(const FreeAlgebra& ctx, int n, int k);

// ------- primitive elements -------

// The n! primitive elements: window criterion 0 < w(i+1)-w(i) < n for
// i = 1..n-1 (equivalent to w^{-1}(fundamental alcove) inside the
// fundamental box). Sorted by (level, window).
std::vector<AffinePerm> primitive_elements(int n);

// Length generating function sum t^{l(v)} over primitive elements computed
// from the closed form n * prod_{i=1}^{n-1} (1-t^{i(n-i)})/(1-t^i).
GradedSeries primitive_length_series(int n);

// Longest element of the finite S_n inside the affine group, with its
// standard reduced word s_1 (s_2 s_1) (s_3 s_2 s_1) ...
std::vector<int> longest_element_word(int n);

// ------- the D_n family -------

// Fixed labeling for the D_n diagram: prongs 1,2 at hub 3, chain 3-4-...-n.
// Edge symbols: a = {1,3}, b = {2,3}, i = {i+2, i+3} for i = 1..n-3.
Graph dn_graph(int n);
// The 2n minimal coset representatives of E_{D_{n-1}} in E_{D_n}, as words
// over the edges of dn_graph(n), ordered by (degree, word).
std::vector<Word> dn_mcr(int n);
// Degree generating function of dn_mcr(n); equals [n](1 + t^{n-2}).
GradedSeries dn_mcr_series(int n);
// Renders a dn_mcr word with the edge symbols a, b, 1..n-3 ("id" for the
// empty word).
std::string render_dn_word(int n, const Word& w);

// <X, X'> for X = (n-3)...1 aba 1...(n-3) in D_n edges and X' the star
// word with edges from the chain-end vertex n; equals (-1)^(n-1).
Rat dn_pairing_check(int n);

}  // namespace fk
