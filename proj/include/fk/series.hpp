#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fk/rational.hpp"

namespace fk {

// Polynomial in t with exact rational coefficients, trailing zeros trimmed.
// Integer coefficients throughout except where division diagnostics need
// rationals.
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(std::vector<Rat> coeffs);
  static GradedSeries zero() { return GradedSeries(); }
  static GradedSeries one();
  static GradedSeries monomial(int d, Rat c = 1);
  // q-integer [k] = 1 + t + ... + t^{k-1}
  static GradedSeries qint(int k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  const Rat& coeff(int d) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat eval_one() const;  // value at t=1

  GradedSeries operator+(const GradedSeries& o) const;
  GradedSeries operator-(const GradedSeries& o) const;
  GradedSeries operator*(const GradedSeries& o) const;
  bool operator==(const GradedSeries& o) const { return coeffs_ == o.coeffs_; }

  // Polynomial long division; remainder zero iff divisible.
  std::pair<GradedSeries, GradedSeries> exact_divide(const GradedSeries& b) const;

  bool is_symmetric() const;   // palindromic coefficients
  bool is_positive() const;    // all coefficients > 0 up to degree
  bool integer_coeffs() const;

  // Trial division by cyclotomic polynomials Phi_d. Returns the factor
  // multiset {d: multiplicity} if the polynomial is c * prod Phi_d with
  // c = 1, otherwise nullopt.
  std::optional<std::map<int, int>> cyclotomic_factor() const;

  // (dimension, top degree) = (value at 1, degree).
  std::pair<Rat, int> dim_topdeg() const;

  // Truncated power-series division (this / b through degree max_deg);
  // requires b(0) != 0.
  GradedSeries series_divide(const GradedSeries& b, int max_deg) const;
  // Truncated power-series square root; requires constant term 1.
  GradedSeries series_sqrt(int max_deg) const;

  std::string to_string() const;        // coefficient list "1,2,2,1"
  std::string to_bracket_string() const;  // "[2][3]" when cyclotomic_factor succeeds

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

GradedSeries cyclotomic(int d);

// Parses bracket expressions like "[2]^2[3]^2[4]^2" or
// "[2]^{-2}[3]^{-2}[4]^2[5]^2[6]^4". Negative exponents must divide out
// exactly; throws otherwise.
GradedSeries parse_brackets(const std::string& text);

// Closed-form Hilbert series. Families:
//   A:n      [2][3]...[n]
//   D:n      [n][n-1] * [4][6]...[2n-4]          (n>=3)
//   E6,E7,E8 quotient forms; division must be exact
//   cycle:n  [n] * prod_{k=1..n-1} [k(n-k)]
//   complete:n  full algebra E_n, n<=5
//   star:n   K_{1,n-1} series = complete:n / complete:n-1, n<=5
//   Dtilde:n, E6tilde, E7tilde   conjectural affine forms
GradedSeries formula(const std::string& name, const std::vector<int>& params = {});

// The known prefix of the Hilbert series of E_6 (degrees 0..10).
GradedSeries h6_prefix();

// The t^7 coefficient of sqrt(h6/[2]): the obstruction showing E_6 has no
// tensor decomposition across the twin-vertex complement pair. Returns the
// full truncated sqrt series (degree 7).
GradedSeries h6_split_sqrt();

}  // namespace fk
