#include "fk/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fk/pairing.hpp"

namespace fk {

AffinePerm::AffinePerm(int n) : n_(n), win_(n) {
  if (n < 2) throw std::invalid_argument("affine group needs n >= 2");
  std::iota(win_.begin(), win_.end(), 1ll);
}

AffinePerm::AffinePerm(int n, std::vector<long long> window) : n_(n), win_(std::move(window)) {
  if (static_cast<int>(win_.size()) != n) throw std::invalid_argument("bad window size");
  long long sum = 0;
  std::set<long long> residues;
  for (int i = 0; i < n_; ++i) {
    sum += win_[i] - (i + 1);
    residues.insert(((win_[i] % n_) + n_) % n_);
  }
  if (static_cast<int>(residues.size()) != n_)
    throw std::invalid_argument("window values collide mod n");
  if (sum % n_ != 0) throw std::invalid_argument("window level is not integral");
  normalize();
}

void AffinePerm::normalize() {
  long long sum = 0;
  for (int i = 0; i < n_; ++i) sum += win_[i] - (i + 1);
  long long level = sum / n_;
  long long shift = level >= 0 ? level / n_ : -((-level + n_ - 1) / n_);
  if (shift != 0)
    for (auto& v : win_) v -= shift * n_;
}

long long AffinePerm::eval(long long x) const {
  long long r = ((x - 1) % n_ + n_) % n_;  // 0-based residue
  long long q = (x - 1 - r) / n_;
  return win_[r] + q * n_;
}

int AffinePerm::level() const {
  long long sum = 0;
  for (int i = 0; i < n_; ++i) sum += win_[i] - (i + 1);
  return static_cast<int>(sum / n_);
}

AffinePerm AffinePerm::identity(int n) { return AffinePerm(n); }

AffinePerm AffinePerm::s(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("simple reflection index out of range");
  AffinePerm p(n);
  if (i >= 1) {
    std::swap(p.win_[i - 1], p.win_[i]);
  } else {
    p.win_[0] = 0;
    p.win_[n - 1] = n + 1;
  }
  return p;
}

AffinePerm AffinePerm::pi(int n) {
  AffinePerm p(n);
  for (int i = 0; i < n; ++i) p.win_[i] = i + 2;
  p.normalize();
  return p;
}

AffinePerm AffinePerm::y(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("translation index out of range");
  AffinePerm p(n);
  p.win_[i - 1] += n;
  p.normalize();
  return p;
}

AffinePerm AffinePerm::from_perm(const Perm& p) {
  AffinePerm out(p.size());
  for (int i = 1; i <= p.size(); ++i) out.win_[i - 1] = p.apply(i);
  return out;
}

AffinePerm AffinePerm::compose(const AffinePerm& other) const {
  if (n_ != other.n_) throw std::invalid_argument("rank mismatch");
  std::vector<long long> win(n_);
  for (int i = 0; i < n_; ++i) win[i] = eval(other.win_[i]);
  AffinePerm out(n_);
  out.win_ = std::move(win);
  out.normalize();
  return out;
}

AffinePerm AffinePerm::inverse() const {
  // f^{-1}(j) for j in 1..n: find i with f(i) = j modulo periodicity.
  std::vector<long long> win(n_);
  for (int j = 1; j <= n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      long long diff = j - win_[i];
      if (diff % n_ == 0) {
        win[j - 1] = (i + 1) + diff;
        break;
      }
    }
  }
  AffinePerm out(n_);
  out.win_ = std::move(win);
  out.normalize();
  return out;
}

AffinePerm AffinePerm::pi_power(int k) const {
  AffinePerm out = *this;
  for (auto& v : out.win_) v += k;
  out.normalize();
  return out;
}

long long AffinePerm::length() const {
  long long len = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      long long d = win_[j] - win_[i];
      long long f = d >= 0 ? d / n_ : -((-d + n_ - 1) / n_);
      len += f >= 0 ? f : -f;
    }
  return len;
}

bool AffinePerm::left_descent(int i) const {
  // l(s_i w) < l(w) iff w^{-1}(i) > w^{-1}(i+1).
  AffinePerm inv = inverse();
  return inv.eval(i) > inv.eval(i + 1);
}

std::optional<AffinePerm> nilcox_mult(const AffinePerm& u, const AffinePerm& v) {
  AffinePerm uv = u.compose(v);
  if (uv.length() == u.length() + v.length()) return uv;
  return std::nullopt;
}

ReducedWord reduced_word(const AffinePerm& w) {
  ReducedWord out;
  out.pi_power = w.level() % w.n();
  AffinePerm v = w.pi_power(-out.pi_power);
  // v now has level 0; peel smallest left descents.
  long long len = v.length();
  while (len > 0) {
    int chosen = -1;
    for (int i = 0; i < v.n(); ++i) {
      AffinePerm sv = AffinePerm::s(v.n(), i).compose(v);
      if (sv.length() < len) {
        chosen = i;
        v = sv;
        len = sv.length();
        break;
      }
    }
    if (chosen < 0) throw std::logic_error("no descent found for positive length");
    out.letters.push_back(chosen);
  }
  return out;
}

AffinePerm evaluate_word(int n, const ReducedWord& rw) {
  AffinePerm prod = AffinePerm::identity(n);
  for (int i : rw.letters) prod = prod.compose(AffinePerm::s(n, i));
  return prod.pi_power(rw.pi_power);
}

std::string render_reduced_word(const ReducedWord& rw) {
  std::ostringstream os;
  if (rw.pi_power != 0) os << "pi^" << rw.pi_power;
  if (rw.letters.empty()) {
    if (rw.pi_power == 0) os << "id";
    return os.str();
  }
  if (rw.pi_power != 0) os << ".";
  for (size_t k = 0; k < rw.letters.size(); ++k) {
    if (k) os << ".";
    os << rw.letters[k];
  }
  return os.str();
}

DeltaTableau delta_tableau(const Partition& outer, const Partition& inner, int k, int n) {
  Partition lam = outer, mu = inner;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  if (static_cast<int>(lam.size()) > k) throw std::invalid_argument("partition has too many rows");
  for (size_t r = 0; r + 1 < lam.size(); ++r)
    if (lam[r] < lam[r + 1]) throw std::invalid_argument("not weakly decreasing");
  for (size_t r = 0; r < lam.size(); ++r)
    if (lam[r] > n - k) throw std::invalid_argument("partition exceeds box width");
  for (size_t r = 0; r < mu.size(); ++r) {
    if (r >= lam.size() || mu[r] > lam[r]) throw std::invalid_argument("inner shape not contained");
  }
  DeltaTableau t;
  t.outer = std::move(lam);
  t.inner = std::move(mu);
  t.k = k;
  return t;
}

std::vector<int> gamma_word(const Partition& outer, const Partition& inner, int k, int n) {
  DeltaTableau tab = delta_tableau(outer, inner, k, n);
  const Partition& lam = tab.outer;
  const Partition& mu = tab.inner;
  std::vector<int> letters;
  int maxcol = lam.empty() ? 0 : lam[0];
  for (int c = maxcol; c >= 1; --c) {
    // rows with a box in column c, bottom to top
    for (int r = static_cast<int>(lam.size()); r >= 1; --r) {
      if (lam[r - 1] < c) continue;
      int inner_c = (r - 1 < static_cast<int>(mu.size())) ? mu[r - 1] : 0;
      if (inner_c >= c) continue;
      letters.push_back(k + c - r);
    }
  }
  return letters;
}

AffinePerm gamma_perm(const Partition& lambda, int k, int n) {
  auto letters = gamma_word(lambda, {}, k, n);
  AffinePerm prod = AffinePerm::identity(n);
  for (int i : letters) prod = prod.compose(AffinePerm::s(n, i));
  return prod;
}

std::vector<EkTerm> ek_terms(int n, int k) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("ek_terms needs 1 <= k <= n-1");
  // Enumerate subsets 1 <= i_1 < ... < i_k <= n via their partitions
  // lambda = (i_k - k, ..., i_1 - 1) inside the k x (n-k) box.
  std::vector<EkTerm> out;
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 1);
  Partition omega(k, n - k);
  for (;;) {
    Partition lambda(k);
    for (int r = 0; r < k; ++r) lambda[r] = subset[k - 1 - r] - (k - r);
    EkTerm term;
    term.lambda = lambda;
    std::vector<int> left = gamma_word(lambda, {}, k, n);
    for (int& l : left) l = ((l - k) % n + n) % n;  // sigma_pi^{-k}
    std::vector<int> right = gamma_word(omega, lambda, k, n);
    term.letters = left;
    term.letters.insert(term.letters.end(), right.begin(), right.end());
    out.push_back(std::move(term));
    // next subset
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int q = pos + 1; q < k; ++q) subset[q] = subset[q - 1] + 1;
  }
  return out;
}

OrientedGraph cycle_oriented(int n) {
  // Letter i of theta is directions[i]: the edge from vertex i+1 to vertex
  // (i+1 mod n)+1, so the cycle carries the 0..n-1 edge labeling.
  OrientedGraph og;
  og.underlying = named_graph("cycle", {n});
  og.directions.reserve(n);
  for (int i = 0; i < n; ++i) og.directions.emplace_back(i + 1, (i + 1) % n + 1);
  return og;
}

Element theta(const FreeAlgebra& ctx, const std::vector<int>& letters,
              const OrientedGraph& og) {
  const auto& table = og.directions;
  int sign = 1;
  Word w;
  w.reserve(letters.size());
  for (int l : letters) {
    if (l < 0 || l >= static_cast<int>(table.size()))
      throw std::invalid_argument("letter is not an edge of the oriented graph");
    auto [tail, head] = table[l];
    auto [s, g] = ctx.normalize_pair(tail, head);
    sign *= s;
    w.push_back(static_cast<char>(g));
  }
  return Element::from_word(ctx.n(), std::move(w), sign);
}

Element rk_element(const FreeAlgebra& ctx, int n, int k) {
  if (n < 3) throw std::invalid_argument("rk_element needs n >= 3");
  if (ctx.n() != n) throw std::invalid_argument("ambient mismatch");
  OrientedGraph og = cycle_oriented(n);
  Element out(n);
  for (const auto& term : ek_terms(n, k)) out += theta(ctx, term.letters, og);
  return out;
}

std::vector<AffinePerm> primitive_elements(int n) {
  // Windows with 0 < w(i+1) - w(i) < n for i = 1..n-1. Enumerate the step
  // vectors whose partial sums are distinct mod n, then the n normalized
  // levels per step vector.
  std::vector<AffinePerm> out;
  auto emit = [&](const std::vector<int>& st) {
    std::vector<long long> base(n);
    base[0] = 0;
    for (int i = 1; i < n; ++i) base[i] = base[i - 1] + st[i - 1];
    // The partial sums cover all residues mod n, so the level of the
    // window (base + b) is integral for every b and increases by one with
    // b; the n consecutive offsets below realize levels 0..n-1.
    long long sum0 = 0;
    for (int i = 0; i < n; ++i) sum0 += base[i] - (i + 1);
    long long level0 = sum0 / n;
    for (int lev = 0; lev < n; ++lev) {
      long long b = lev - level0;
      std::vector<long long> win(n);
      for (int i = 0; i < n; ++i) win[i] = base[i] + b;
      out.emplace_back(n, std::move(win));
    }
  };
  // enumerate step vectors in {1..n-1}^{n-1} with distinct partial sums mod n
  std::vector<int> st(n - 1);
  std::function<void(int, int, unsigned)> rec = [&](int pos, int sum_mod, unsigned used) {
    if (pos == n - 1) {
      emit(st);
      return;
    }
    for (int s = 1; s < n; ++s) {
      int m = (sum_mod + s) % n;
      if (used & (1u << m)) continue;
      st[pos] = s;
      rec(pos + 1, m, used | (1u << m));
    }
  };
  rec(0, 0, 1u);
  std::sort(out.begin(), out.end(), [](const AffinePerm& a, const AffinePerm& b) {
    if (a.level() != b.level()) return a.level() < b.level();
    return a.window() < b.window();
  });
  return out;
}

GradedSeries primitive_length_series(int n) {
  GradedSeries out{std::vector<Rat>{Rat(n)}};
  for (int i = 1; i <= n - 1; ++i) {
    // (1 - t^{i(n-i)}) / (1 - t^i) = 1 + t^i + ... + t^{i(n-i-1)}
    std::vector<Rat> f(i * (n - i - 1) + 1, Rat(0));
    for (int m = 0; m * i <= i * (n - i - 1); ++m) f[m * i] = 1;
    out = out * GradedSeries(std::move(f));
  }
  return out;
}

std::vector<int> longest_element_word(int n) {
  std::vector<int> out;
  for (int k = 1; k <= n - 1; ++k)
    for (int i = k; i >= 1; --i) out.push_back(i);
  return out;
}

Graph dn_graph(int n) { return named_graph("D", {n}); }

namespace {

int dn_edge_gen(const FreeAlgebra& ctx, int n, char symbol) {
  // a = {1,3}, b = {2,3}, digit i = {i+2, i+3}
  if (symbol == 'a') return ctx.gen_id(1, 3);
  if (symbol == 'b') return ctx.gen_id(2, 3);
  int i = symbol - '0';
  if (i < 1 || i > n - 3) throw std::invalid_argument("bad D_n edge symbol");
  return ctx.gen_id(i + 2, i + 3);
}

Word dn_word(const FreeAlgebra& ctx, int n, const std::string& symbols) {
  Word w;
  for (char c : symbols) w.push_back(static_cast<char>(dn_edge_gen(ctx, n, c)));
  return w;
}

std::string dn_desc(int hi) {  // hi (hi-1) ... 1
  std::string s;
  for (int i = hi; i >= 1; --i) s.push_back(static_cast<char>('0' + i));
  return s;
}

std::string dn_asc(int hi) {  // 1 2 ... hi
  std::string s;
  for (int i = 1; i <= hi; ++i) s.push_back(static_cast<char>('0' + i));
  return s;
}

}  // namespace

std::vector<Word> dn_mcr(int n) {
  if (n < 3) throw std::invalid_argument("dn_mcr needs n >= 3");
  if (n - 3 > 9) throw std::invalid_argument("dn_mcr rendering supports n <= 12");
  FreeAlgebra ctx(n);
  int m = n - 3;
  std::vector<std::string> symbols;
  for (int i = 0; i <= m; ++i) symbols.push_back(dn_asc(m).substr(m - i));  // suffixes
  // symbols now: "", m, (m-1)m, ..., 12...m  -- ascending tails
  std::vector<std::string> words;
  for (const auto& s : symbols) words.push_back(s);
  std::string full = dn_asc(m);
  for (const std::string& p : {std::string("a"), std::string("b"), std::string("ab"),
                               std::string("ba"), std::string("aba")})
    words.push_back(p + full);
  for (int i = 1; i <= m; ++i) words.push_back(dn_desc(i) + "aba" + full);
  std::vector<Word> out;
  for (const auto& s : words) out.push_back(dn_word(ctx, n, s));
  std::sort(out.begin(), out.end(), DeglexLess());
  return out;
}

GradedSeries dn_mcr_series(int n) {
  auto words = dn_mcr(n);
  int maxd = 0;
  for (const auto& w : words) maxd = std::max<int>(maxd, static_cast<int>(w.size()));
  std::vector<Rat> coeffs(maxd + 1, Rat(0));
  for (const auto& w : words) coeffs[w.size()] += 1;
  return GradedSeries(std::move(coeffs));
}

std::string render_dn_word(int n, const Word& w) {
  if (w.empty()) return "id";
  FreeAlgebra ctx(n);
  std::string out;
  for (unsigned char g : w) {
    auto [i, j] = ctx.gen_pair(g);
    if (i == 1 && j == 3) out.push_back('a');
    else if (i == 2 && j == 3) out.push_back('b');
    else if (j == i + 1 && i >= 3) out.push_back(static_cast<char>('0' + (i - 2)));
    else throw std::invalid_argument("word is not over D_n edges");
  }
  return out;
}

Rat dn_pairing_check(int n) {
  if (n < 3) throw std::invalid_argument("dn_pairing_check needs n >= 3");
  FreeAlgebra ctx(n);
  int m = n - 3;
  // X = m (m-1) ... 1 a b a 1 2 ... m over D_n edges
  Word x;
  auto push_edge = [&](int i, int j, Word* w, int* sign) {
    auto [s, g] = ctx.normalize_pair(i, j);
    *sign *= s;
    w->push_back(static_cast<char>(g));
  };
  int sx = 1;
  for (int i = m; i >= 1; --i) push_edge(i + 2, i + 3, &x, &sx);
  push_edge(1, 3, &x, &sx);
  push_edge(2, 3, &x, &sx);
  push_edge(1, 3, &x, &sx);
  for (int i = 1; i <= m; ++i) push_edge(i + 2, i + 3, &x, &sx);
  // X' uses the star at the chain-end vertex n: a' = {1,n}, b' = {2,n},
  // i' = {i+2, n} for i = 1..n-3 (with (n-3)' = the chain edge {n-1,n}).
  auto star_edge = [&](char sym, Word* w, int* sign) {
    if (sym == 'a') push_edge(1, n, w, sign);
    else if (sym == 'b') push_edge(2, n, w, sign);
    else push_edge((sym - '0') + 2, n, w, sign);
  };
  Word xp;
  int sxp = 1;
  for (int i = m; i >= 1; --i) star_edge(static_cast<char>('0' + i), &xp, &sxp);
  star_edge('a', &xp, &sxp);
  star_edge('b', &xp, &sxp);
  star_edge('a', &xp, &sxp);
  for (int i = 1; i <= m; ++i) star_edge(static_cast<char>('0' + i), &xp, &sxp);
  Element ex = Element::from_word(n, x, sx);
  Element exp_ = Element::from_word(n, xp, sxp);
  return pair(ctx, ex, exp_);
}

}  // namespace fk
