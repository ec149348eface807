#pragma once

#include <unordered_map>
#include <vector>

#include "fk/freealg.hpp"
#include "fk/rational.hpp"

namespace fk {

// Left Leibniz operator Delta_ab: Delta_ab(x_ij) is +1/-1/0 and
// Delta_ab(PQ) = Delta_ab(P) Q + sigma_ab(P) Delta_ab(Q).
Element delta_op(const FreeAlgebra& ctx, int a, int b, const Element& e);

// Right operator: (PQ)nabla_ab = P (Q)nabla_ab + (P)(sigma_Q nabla_ab) Q
// with sigma_Q nabla_ab = nabla_{sigma_Q(a) sigma_Q(b)}.
Element nabla_op(const FreeAlgebra& ctx, const Element& e, int a, int b);

// Memo cache for word-word pairings. Word pairings are integers.
class PairCache {
 public:
  struct KeyHash {
    size_t operator()(const std::pair<Word, Word>& k) const {
      size_t h = std::hash<Word>()(k.first);
      return h ^ (std::hash<Word>()(k.second) + 0x9e3779b97f4a7c15ull + (h << 6));
    }
  };
  std::unordered_map<std::pair<Word, Word>, Int, KeyHash> map;
  void clear() { map.clear(); }
  size_t size() const { return map.size(); }
};

// Per-thread cache used when none is supplied. Word keys are ambient
// dependent, so there is one cache per ambient n.
PairCache& thread_pair_cache(int n);

// <P,Q> for words of equal degree, by peeling the last letter of P onto Q.
Int pair_words(const FreeAlgebra& ctx, const Word& p, const Word& q, PairCache& cache);

// Bilinear form <P,Q>. Inhomogeneous inputs are decomposed by degree;
// cross-degree components pair to zero.
Rat pair(const FreeAlgebra& ctx, const Element& p, const Element& q);
Rat pair(const FreeAlgebra& ctx, const Element& p, const Element& q, PairCache& cache);

// Element of E_n (x) E_n with the braided product
// (P1 (x) Q1)(P2 (x) Q2) = P1 sigma_{Q1}(P2) (x) Q1 Q2.
class TensorElement {
 public:
  explicit TensorElement(int n) : n_(n) {}
  int n() const { return n_; }
  const std::vector<std::pair<std::pair<Word, Word>, Rat>>& terms() const& { return terms_; }
  std::vector<std::pair<std::pair<Word, Word>, Rat>> terms() && { return std::move(terms_); }
  void add_term(const Word& p, const Word& q, const Rat& c);
  bool operator==(const TensorElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_;
  // sorted by (deglex p, deglex q), no zeros
  std::vector<std::pair<std::pair<Word, Word>, Rat>> terms_;
};

TensorElement tensor_multiply(const FreeAlgebra& ctx, const TensorElement& a,
                              const TensorElement& b);

// Braided coproduct: Delta(x_ij) = x_ij (x) 1 + 1 (x) x_ij, extended as a
// braided homomorphism.
TensorElement coproduct(const FreeAlgebra& ctx, const Element& e);

// Dual-basis word functional acting via the coproduct:
// w^vee * Q = sum w^vee(Q_(1)) Q_(2).
Element dual_act(const FreeAlgebra& ctx, const Word& functional, const Element& q);

// Rank over Q of the matrix <row_i, col_j>. All words must share one
// degree. The matrix is block diagonal under S_n-degree (rows of degree
// sigma only pair with columns of degree sigma^{-1}), so the rank is
// computed blockwise with fraction-free elimination over integers.
// threads > 1 parallelizes entry computation.
size_t gram_rank(const FreeAlgebra& ctx, const std::vector<Word>& rows,
                 const std::vector<Word>& cols, int threads = 1);

// Fraction-free (Bareiss) rank of an integer matrix.
size_t bareiss_rank(std::vector<std::vector<Int>> m);

}  // namespace fk
