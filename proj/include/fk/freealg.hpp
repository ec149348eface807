#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fk/graph.hpp"
#include "fk/rational.hpp"

namespace fk {

// A word in the free algebra: a byte string of generator ids for a fixed
// ambient n. Generator ids enumerate the pairs (i,j), 1<=i<j<=n, in
// lexicographic order, so the byte-wise lexicographic order on equal-length
// words matches the generator order. The global monomial order everywhere
// is degree-lexicographic.
using Word = std::string;

inline bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};
struct DeglexGreater {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(b, a); }
};

// Permutation of {1..n}. Stored 0-based internally; the interface is
// 1-based to match vertex labels.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images_zero_based) : img_(std::move(images_zero_based)) {}
  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);  // a,b 1-based

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int v) const { return img_[v - 1] + 1; }  // 1-based
  // (this o other)(i) = this(other(i))
  Perm compose(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm& other) const { return img_ == other.img_; }
  bool operator<(const Perm& other) const { return img_ < other.img_; }
  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.images()) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
    return h;
  }
};

// Set partition of {1..n}, stored as the smallest block label per vertex.
class SetPartition {
 public:
  explicit SetPartition(int n);  // all singletons
  int n() const { return static_cast<int>(rep_.size()); }
  int rep(int v) const { return rep_[v - 1]; }  // 1-based
  void join(int a, int b);
  bool same_block(int a, int b) const { return rep(a) == rep(b); }
  SetPartition coarsen(const SetPartition& other) const;
  std::vector<std::vector<int>> blocks() const;
  bool operator==(const SetPartition& other) const { return rep_ == other.rep_; }

 private:
  std::vector<int> rep_;
};

// Ambient context for words over the generators x_ij of E_n. Precomputes
// the generator tables and the signed action of transpositions on letters.
class FreeAlgebra {
 public:
  explicit FreeAlgebra(int n);

  int n() const { return n_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  int gen_id(int i, int j) const;           // requires 1<=i<j<=n
  std::pair<int, int> gen_pair(int id) const { return gens_[id]; }

  // x_ab with a!=b: returns (sign, id) with x_ab = sign * x_(min,max).
  std::pair<int, int> normalize_pair(int a, int b) const;

  // Image of letter g under the relabeling by transposition (a b):
  // returns (sign, id).
  std::pair<int, int> transpose_letter(int a, int b, int g) const;
  // Image of letter g under an arbitrary permutation.
  std::pair<int, int> permute_letter(const Perm& sigma, int g) const;

  // S_n-degree of a word: sigma_{g1} o sigma_{g2} o ... o sigma_{gd},
  // with (sigma o tau)(i) = sigma(tau(i)).
  Perm sn_degree(const Word& w) const;
  SetPartition support_partition(const Word& w) const;

  // Generator ids of a graph's edges (ambient must match), ascending.
  std::vector<int> edge_gens(const Graph& g) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> gens_;
  std::vector<std::vector<int>> id_;  // id_[i][j], 1-based, i<j
};

struct Term {
  Word w;
  Rat c;
};

// An element of the free algebra over exact rationals: sorted term list
// (deglex ascending), no zero coefficients, fixed ambient n.
class Element {
 public:
  Element() = default;
  explicit Element(int n) : n_(n) {}
  static Element zero(int n) { return Element(n); }
  static Element one(int n);
  static Element from_word(int n, Word w, Rat c = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  // Ref-qualified so iterating the terms of a temporary stays valid.
  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  const Term& leading() const { return terms_.back(); }  // deglex-max

  // True when every word has the same length d (reported via *degree).
  bool homogeneous_degree(int* degree = nullptr) const;

  void add_term(const Word& w, const Rat& c);  // merge one term
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element scaled(const Rat& c) const;
  void scale(const Rat& c);

  bool operator==(const Element& other) const {
    if (n_ != other.n_ || terms_.size() != other.terms_.size()) return false;
    for (size_t k = 0; k < terms_.size(); ++k)
      if (terms_[k].w != other.terms_[k].w || terms_[k].c != other.terms_[k].c) return false;
    return true;
  }

  // Rebuilds the canonical sorted representation from an arbitrary list.
  static Element from_terms(int n, std::vector<Term> terms);

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

Element multiply(const Element& a, const Element& b);
Element reverse(const Element& e);
Element relabel(const FreeAlgebra& ctx, const Perm& sigma, const Element& e);

// x_ab as an element (normalized sign).
Element gen_element(const FreeAlgebra& ctx, int a, int b);

// Streams all |E(g)|^d words over the edge generators of g in deglex order.
// The callback may return false to stop early.
void for_each_word(const FreeAlgebra& ctx, const Graph& g, int d,
                   const std::function<bool(const Word&)>& fn);
std::vector<Word> words_of_degree(const FreeAlgebra& ctx, const Graph& g, int d);

// Text format: terms sorted by (degree, word), e.g. "+1*x12.x23 -1*x13.x12".
// Parsing accepts the same grammar, with optional whitespace between terms;
// "0" denotes the zero element.
std::string render_element(const FreeAlgebra& ctx, const Element& e);
std::string render_word(const FreeAlgebra& ctx, const Word& w);
Element parse_element(const FreeAlgebra& ctx, const std::string& text);

}  // namespace fk
