#include "fk/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fk {

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Perm Perm::compose(const Perm& other) const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[other.img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

SetPartition::SetPartition(int n) : rep_(n) {
  std::iota(rep_.begin(), rep_.end(), 1);
}

void SetPartition::join(int a, int b) {
  int ra = rep(a), rb = rep(b);
  if (ra == rb) return;
  int lo = std::min(ra, rb), hi = std::max(ra, rb);
  for (auto& r : rep_)
    if (r == hi) r = lo;
}

SetPartition SetPartition::coarsen(const SetPartition& other) const {
  SetPartition out = *this;
  for (int v = 1; v <= other.n(); ++v) out.join(v, other.rep(v) /* block leader */);
  // joining v with its leader in `other` merges other's blocks into ours
  return out;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> seen;
  for (int v = 1; v <= n(); ++v) {
    int r = rep(v);
    auto it = std::find(seen.begin(), seen.end(), r);
    if (it == seen.end()) {
      seen.push_back(r);
      out.push_back({v});
    } else {
      out[it - seen.begin()].push_back(v);
    }
  }
  return out;
}

FreeAlgebra::FreeAlgebra(int n) : n_(n) {
  if (n < 1 || n > 127) throw std::invalid_argument("ambient n out of range");
  id_.assign(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      id_[i][j] = static_cast<int>(gens_.size());
      gens_.emplace_back(i, j);
    }
}

int FreeAlgebra::gen_id(int i, int j) const {
  if (i < 1 || j <= i || j > n_) throw std::invalid_argument("bad generator pair");
  return id_[i][j];
}

std::pair<int, int> FreeAlgebra::normalize_pair(int a, int b) const {
  if (a == b) throw std::invalid_argument("x_aa is undefined");
  if (a < b) return {1, gen_id(a, b)};
  return {-1, gen_id(b, a)};
}

std::pair<int, int> FreeAlgebra::transpose_letter(int a, int b, int g) const {
  auto [i, j] = gens_[g];
  auto sub = [&](int v) { return v == a ? b : v == b ? a : v; };
  return normalize_pair(sub(i), sub(j));
}

std::pair<int, int> FreeAlgebra::permute_letter(const Perm& sigma, int g) const {
  auto [i, j] = gens_[g];
  return normalize_pair(sigma.apply(i), sigma.apply(j));
}

Perm FreeAlgebra::sn_degree(const Word& w) const {
  Perm acc = Perm::identity(n_);
  for (unsigned char g : w) {
    auto [i, j] = gens_[g];
    acc = acc.compose(Perm::transposition(n_, i, j));
  }
  return acc;
}

SetPartition FreeAlgebra::support_partition(const Word& w) const {
  SetPartition p(n_);
  for (unsigned char g : w) {
    auto [i, j] = gens_[g];
    p.join(i, j);
  }
  return p;
}

std::vector<int> FreeAlgebra::edge_gens(const Graph& g) const {
  if (g.n() != n_) throw std::invalid_argument("graph ambient mismatch");
  std::vector<int> out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) out.push_back(gen_id(e.first, e.second));
  return out;
}

Element Element::one(int n) { return from_word(n, Word()); }

Element Element::from_word(int n, Word w, Rat c) {
  Element e(n);
  if (c != 0) e.terms_.push_back({std::move(w), std::move(c)});
  return e;
}

bool Element::homogeneous_degree(int* degree) const {
  if (terms_.empty()) {
    if (degree) *degree = 0;
    return true;
  }
  size_t d = terms_.front().w.size();
  for (const auto& t : terms_)
    if (t.w.size() != d) return false;
  if (degree) *degree = static_cast<int>(d);
  return true;
}

void Element::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return deglex_less(t.w, key); });
  if (it != terms_.end() && it->w == w) {
    it->c += c;
    if (it->c == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {w, c});
  }
}

Element& Element::operator+=(const Element& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) { *this = other; return *this; }
  if (n_ != other.n_) throw std::invalid_argument("ambient mismatch");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  size_t a = 0, b = 0;
  while (a < terms_.size() && b < other.terms_.size()) {
    if (terms_[a].w == other.terms_[b].w) {
      Rat c = terms_[a].c + other.terms_[b].c;
      if (c != 0) merged.push_back({terms_[a].w, std::move(c)});
      ++a; ++b;
    } else if (deglex_less(terms_[a].w, other.terms_[b].w)) {
      merged.push_back(terms_[a++]);
    } else {
      merged.push_back(other.terms_[b++]);
    }
  }
  while (a < terms_.size()) merged.push_back(terms_[a++]);
  while (b < other.terms_.size()) merged.push_back(other.terms_[b++]);
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element Element::operator+(const Element& other) const {
  Element out = *this;
  out += other;
  return out;
}

Element Element::operator-(const Element& other) const {
  Element out = *this;
  out += -other;
  return out;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& t : out.terms_) t.c = -t.c;
  return out;
}

Element Element::scaled(const Rat& c) const {
  Element out = *this;
  out.scale(c);
  return out;
}

void Element::scale(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.c *= c;
}

Element Element::from_terms(int n, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return deglex_less(x.w, y.w); });
  Element out(n);
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().w == t.w) {
      out.terms_.back().c += t.c;
      if (out.terms_.back().c == 0) out.terms_.pop_back();
    } else if (t.c != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Element multiply(const Element& a, const Element& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ambient mismatch");
  std::vector<Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) terms.push_back({ta.w + tb.w, ta.c * tb.c});
  return Element::from_terms(a.n(), std::move(terms));
}

Element reverse(const Element& e) {
  std::vector<Term> terms;
  terms.reserve(e.terms().size());
  for (const auto& t : e.terms()) {
    Word w(t.w.rbegin(), t.w.rend());
    terms.push_back({std::move(w), t.c});
  }
  return Element::from_terms(e.n(), std::move(terms));
}

Element relabel(const FreeAlgebra& ctx, const Perm& sigma, const Element& e) {
  if (ctx.n() != e.n()) throw std::invalid_argument("ambient mismatch");
  std::vector<Term> terms;
  terms.reserve(e.terms().size());
  for (const auto& t : e.terms()) {
    Word w;
    w.reserve(t.w.size());
    int sign = 1;
    for (unsigned char g : t.w) {
      auto [s, h] = ctx.permute_letter(sigma, g);
      sign *= s;
      w.push_back(static_cast<char>(h));
    }
    terms.push_back({std::move(w), t.c * sign});
  }
  return Element::from_terms(e.n(), std::move(terms));
}

Element gen_element(const FreeAlgebra& ctx, int a, int b) {
  auto [sign, g] = ctx.normalize_pair(a, b);
  Word w(1, static_cast<char>(g));
  return Element::from_word(ctx.n(), std::move(w), sign);
}

void for_each_word(const FreeAlgebra& ctx, const Graph& g, int d,
                   const std::function<bool(const Word&)>& fn) {
  std::vector<int> gens = ctx.edge_gens(g);
  Word w;
  w.reserve(d);
  std::function<bool(int)> rec = [&](int left) -> bool {
    if (left == 0) return fn(w);
    for (int id : gens) {
      w.push_back(static_cast<char>(id));
      bool keep = rec(left - 1);
      w.pop_back();
      if (!keep) return false;
    }
    return true;
  };
  rec(d);
}

std::vector<Word> words_of_degree(const FreeAlgebra& ctx, const Graph& g, int d) {
  std::vector<Word> out;
  for_each_word(ctx, g, d, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::string render_word(const FreeAlgebra& ctx, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out.push_back('.');
    auto [i, j] = ctx.gen_pair(static_cast<unsigned char>(w[k]));
    if (ctx.n() < 10) {
      out += "x" + std::to_string(i) + std::to_string(j);
    } else {
      out += "x" + std::to_string(i) + "_" + std::to_string(j);
    }
  }
  return out;
}

std::string render_element(const FreeAlgebra& ctx, const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& t : e.terms()) {
    if (!out.empty()) out.push_back(' ');
    out += (t.c < 0 ? "-" : "+");
    Rat a = abs(t.c);
    out += a.get_str() + "*" + render_word(ctx, t.w);
  }
  return out;
}

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

Element parse_element(const FreeAlgebra& ctx, const std::string& text) {
  Element out(ctx.n());
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size()) return out;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+') {
      ++pos;
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (!out.is_zero() || pos != 0) {
      throw std::invalid_argument("expected sign in element at " + std::to_string(pos));
    }
    skip_ws(text, pos);
    Rat coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      coeff = Rat(text.substr(start, pos - start));
      coeff.canonicalize();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    // word: "1" or xij('.'xij)*
    Word w;
    if (pos < text.size() && text[pos] == '1' &&
        (pos + 1 == text.size() || text[pos + 1] == ' ' || text[pos + 1] == '+' ||
         text[pos + 1] == '-')) {
      ++pos;
    } else {
      for (;;) {
        if (pos >= text.size() || text[pos] != 'x')
          throw std::invalid_argument("expected generator at " + std::to_string(pos));
        ++pos;
        auto read_int = [&]() {
          size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (pos == start) throw std::invalid_argument("expected index");
          return std::stoi(text.substr(start, pos - start));
        };
        int i, j;
        if (ctx.n() < 10) {
          size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          std::string digits = text.substr(start, pos - start);
          if (digits.size() != 2) throw std::invalid_argument("expected two vertex digits");
          i = digits[0] - '0';
          j = digits[1] - '0';
        } else {
          i = read_int();
          if (pos >= text.size() || text[pos] != '_')
            throw std::invalid_argument("expected '_' between indices");
          ++pos;
          j = read_int();
        }
        auto [s, g] = ctx.normalize_pair(i, j);
        sign *= s;
        w.push_back(static_cast<char>(g));
        if (pos < text.size() && text[pos] == '.') {
          ++pos;
          continue;
        }
        break;
      }
    }
    out.add_term(w, coeff * sign);
    skip_ws(text, pos);
  }
  return out;
}

}  // namespace fk
