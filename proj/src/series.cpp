#include "fk/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fk {

GradedSeries::GradedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GradedSeries GradedSeries::one() { return GradedSeries({Rat(1)}); }

GradedSeries GradedSeries::monomial(int d, Rat c) {
  std::vector<Rat> v(d + 1, Rat(0));
  v[d] = std::move(c);
  return GradedSeries(std::move(v));
}

GradedSeries GradedSeries::qint(int k) {
  if (k < 0) throw std::invalid_argument("[k] needs k >= 0");
  return GradedSeries(std::vector<Rat>(k, Rat(1)));
}

void GradedSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& GradedSeries::coeff(int d) const {
  static const Rat zero(0);
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[d];
}

Rat GradedSeries::eval_one() const {
  Rat s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return GradedSeries(std::move(v));
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return GradedSeries(std::move(v));
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return GradedSeries(std::move(v));
}

std::pair<GradedSeries, GradedSeries> GradedSeries::exact_divide(const GradedSeries& b) const {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rat> rem = coeffs_;
  int db = b.degree();
  const Rat& lead = b.coeffs_.back();
  std::vector<Rat> quot;
  int dq = static_cast<int>(rem.size()) - 1 - db;
  if (dq < 0) return {zero(), GradedSeries(std::move(rem))};
  quot.assign(dq + 1, Rat(0));
  for (int d = dq; d >= 0; --d) {
    Rat c = rem[d + db] / lead;
    quot[d] = c;
    if (c == 0) continue;
    for (int k = 0; k <= db; ++k) rem[d + k] -= c * b.coeffs_[k];
  }
  return {GradedSeries(std::move(quot)), GradedSeries(std::move(rem))};
}

bool GradedSeries::is_symmetric() const {
  int d = degree();
  for (int i = 0; i * 2 <= d; ++i)
    if (coeff(i) != coeff(d - i)) return false;
  return true;
}

bool GradedSeries::is_positive() const {
  if (is_zero()) return false;
  for (const auto& c : coeffs_)
    if (c <= 0) return false;
  return true;
}

bool GradedSeries::integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

GradedSeries cyclotomic(int d) {
  // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e
  std::vector<Rat> p(d + 1, Rat(0));
  p[0] = -1;
  p[d] = 1;
  GradedSeries num{std::move(p)};
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto [q, r] = num.exact_divide(cyclotomic(e));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division failed");
    num = q;
  }
  return num;
}

std::optional<std::map<int, int>> GradedSeries::cyclotomic_factor() const {
  if (is_zero() || coeff(0) != 1) return std::nullopt;
  std::map<int, int> factors;
  GradedSeries cur = *this;
  // Phi_d has degree phi(d) >= sqrt(d/2), so indices up to 2*deg^2 suffice.
  int dmax = 2 * degree() * degree() + 6;
  for (int d = 1; d <= dmax && cur.degree() > 0; ++d) {
    GradedSeries phi = cyclotomic(d);
    if (phi.degree() > cur.degree()) continue;
    for (;;) {
      auto [q, r] = cur.exact_divide(phi);
      if (!r.is_zero()) break;
      ++factors[d];
      cur = q;
      if (cur.degree() == 0) break;
    }
  }
  if (cur == GradedSeries::one()) return factors;
  return std::nullopt;
}

std::pair<Rat, int> GradedSeries::dim_topdeg() const { return {eval_one(), degree()}; }

GradedSeries GradedSeries::series_divide(const GradedSeries& b, int max_deg) const {
  if (b.coeff(0) == 0) throw std::invalid_argument("series division needs b(0) != 0");
  std::vector<Rat> q(max_deg + 1, Rat(0));
  for (int d = 0; d <= max_deg; ++d) {
    Rat acc = coeff(d);
    for (int k = 1; k <= d; ++k) acc -= b.coeff(k) * q[d - k];
    q[d] = acc / b.coeff(0);
  }
  return GradedSeries(std::move(q));
}

GradedSeries GradedSeries::series_sqrt(int max_deg) const {
  if (coeff(0) != 1) throw std::invalid_argument("series sqrt needs constant term 1");
  std::vector<Rat> s(max_deg + 1, Rat(0));
  s[0] = 1;
  for (int d = 1; d <= max_deg; ++d) {
    Rat acc = coeff(d);
    for (int k = 1; k < d; ++k) acc -= s[k] * s[d - k];
    s[d] = acc / 2;
  }
  return GradedSeries(std::move(s));
}

std::string GradedSeries::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= degree(); ++d) {
    if (d) out.push_back(',');
    out += coeff(d).get_str();
  }
  return out;
}

std::string GradedSeries::to_bracket_string() const {
  auto factors = cyclotomic_factor();
  if (!factors) return to_string();
  // Recombine cyclotomic factors into q-integers greedily from large k:
  // [k] = prod_{d | k, d > 1} Phi_d.
  std::map<int, int> rem = *factors;
  std::map<int, int> qints;
  int maxd = rem.empty() ? 0 : rem.rbegin()->first;
  for (int k = maxd; k >= 2; --k) {
    for (;;) {
      bool ok = true;
      for (int d = 2; d <= k && ok; ++d)
        if (k % d == 0 && rem[d] < 1) ok = false;
      if (!ok) break;
      for (int d = 2; d <= k; ++d)
        if (k % d == 0) --rem[d];
      ++qints[k];
    }
  }
  for (const auto& [d, m] : rem)
    if (m != 0) return to_string();
  std::string out;
  for (const auto& [k, m] : qints) {
    out += "[" + std::to_string(k) + "]";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "1" : out;
}

GradedSeries parse_brackets(const std::string& text) {
  GradedSeries num = GradedSeries::one();
  GradedSeries den = GradedSeries::one();
  size_t pos = 0;
  auto skip = [&]() {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '*'))
      ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == '1' && pos + 1 == text.size()) return num;
  while (pos < text.size()) {
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '[') throw std::invalid_argument("expected '[' in bracket expression");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos >= text.size() || text[pos] != ']')
      throw std::invalid_argument("malformed bracket");
    int k = std::stoi(text.substr(start, pos - start));
    ++pos;
    int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool brace = pos < text.size() && text[pos] == '{';
      if (brace) ++pos;
      int sign = 1;
      if (pos < text.size() && text[pos] == '-') {
        sign = -1;
        ++pos;
      }
      size_t estart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (estart == pos) throw std::invalid_argument("malformed exponent");
      exp = sign * std::stoi(text.substr(estart, pos - estart));
      if (brace) {
        if (pos >= text.size() || text[pos] != '}')
          throw std::invalid_argument("expected '}'");
        ++pos;
      }
    }
    GradedSeries q = GradedSeries::qint(k);
    for (int m = 0; m < std::abs(exp); ++m) {
      if (exp > 0)
        num = num * q;
      else
        den = den * q;
    }
    skip();
  }
  auto [quot, rem] = num.exact_divide(den);
  if (!rem.is_zero())
    throw std::invalid_argument("bracket expression does not divide exactly: " + text);
  return quot;
}

namespace {

GradedSeries qint_double_factorial(int k) {
  // [k]!! = [k][k-2][k-4]...
  GradedSeries out = GradedSeries::one();
  for (int m = k; m >= 2; m -= 2) out = out * GradedSeries::qint(m);
  return out;
}

GradedSeries must_divide(const GradedSeries& num, const GradedSeries& den,
                         const std::string& what) {
  auto [q, r] = num.exact_divide(den);
  if (!r.is_zero()) throw std::invalid_argument("non-exact division in formula " + what);
  return q;
}

}  // namespace

GradedSeries formula(const std::string& name, const std::vector<int>& params) {
  auto arg = [&](size_t k) {
    if (params.size() <= k) throw std::invalid_argument("missing parameter for " + name);
    return params[k];
  };
  if (name == "A") {
    int n = arg(0);
    if (n < 1) throw std::invalid_argument("A:n needs n >= 1");
    GradedSeries out = GradedSeries::one();
    for (int k = 2; k <= n; ++k) out = out * GradedSeries::qint(k);
    return out;
  }
  if (name == "D") {
    int n = arg(0);
    if (n < 3) throw std::invalid_argument("D:n needs n >= 3");
    GradedSeries out = GradedSeries::qint(n) * GradedSeries::qint(n - 1);
    for (int k = 4; k <= 2 * n - 4; k += 2) out = out * GradedSeries::qint(k);
    return out;
  }
  if (name == "E6")
    return must_divide(parse_brackets("[4][5][6]^2[8][9]"), parse_brackets("[3]"), name);
  if (name == "E7")
    return must_divide(parse_brackets("[6]^2[8][9][10][12][14]"), parse_brackets("[3]"), name);
  if (name == "E8")
    return must_divide(parse_brackets("[6][8][10][12][14][15][18][20][24]"),
                       parse_brackets("[3][5]"), name);
  if (name == "cycle") {
    int n = arg(0);
    if (n < 3) throw std::invalid_argument("cycle:n needs n >= 3");
    GradedSeries out = GradedSeries::qint(n);
    for (int k = 1; k <= n - 1; ++k) out = out * GradedSeries::qint(k * (n - k));
    return out;
  }
  if (name == "complete") {
    int n = arg(0);
    switch (n) {
      case 1: return GradedSeries::one();
      case 2: return parse_brackets("[2]");
      case 3: return parse_brackets("[2]^2[3]");
      case 4: return parse_brackets("[2]^2[3]^2[4]^2");
      case 5: return parse_brackets("[4]^4[5]^2[6]^4");
      default:
        throw std::invalid_argument("complete:n has no closed form for n >= 6");
    }
  }
  if (name == "star") {
    int n = arg(0);
    if (n < 2 || n > 5)
      throw std::invalid_argument("star:n series known for 2 <= n <= 5");
    return must_divide(formula("complete", {n}), formula("complete", {n - 1}), name);
  }
  if (name == "Dtilde") {
    int n = arg(0);
    if (n < 3) throw std::invalid_argument("Dtilde:n needs n >= 3");
    GradedSeries num = qint_double_factorial(2 * n - 2) * GradedSeries::qint(n) *
                       GradedSeries::qint(n + 1) *
                       parse_brackets("[" + std::to_string(n * (n - 1) / 2) + "]^2") *
                       parse_brackets("[" + std::to_string((n * n - n - 2) / 2) + "]^2");
    for (int i = 1; i <= n - 3; ++i) num = num * GradedSeries::qint(i * (2 * n - i - 1));
    GradedSeries den = qint_double_factorial(2 * n - 3) * GradedSeries::qint(2) *
                       GradedSeries::qint(2) * GradedSeries::qint(n - 1) *
                       GradedSeries::qint(n - 2);
    return must_divide(num, den, name);
  }
  if (name == "E6tilde")
    return must_divide(parse_brackets("[6][9][12][14]^2[16]^2[21][22][30]^2"),
                       parse_brackets("[3]^2[4][7][11]"), name);
  if (name == "E7tilde")
    return must_divide(
        parse_brackets("[6][8][10][12][14][18][24][27][32][34][48][49][52][66][75]"),
        parse_brackets("[3][4][5][7][9][11][13][17]"), name);
  throw std::invalid_argument("unknown series family '" + name + "'");
}

GradedSeries h6_prefix() {
  static const long coeffs[] = {1,      15,      125,     765,     3831,   16605,
                                64432,  228855,  755777,  2347365, 6916867};
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(Rat(c));
  return GradedSeries(std::move(v));
}

GradedSeries h6_split_sqrt() {
  GradedSeries inner = h6_prefix().series_divide(GradedSeries::qint(2), 10);
  return inner.series_sqrt(7);
}

}  // namespace fk
