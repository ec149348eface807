#include "fk/pairing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fk/threads.hpp"

namespace fk {

namespace {

// Delta_ab on a single letter: +1 / -1 / 0.
int delta_letter(const FreeAlgebra& ctx, int a, int b, int g) {
  auto [i, j] = ctx.gen_pair(g);
  if (i == a && j == b) return 1;
  if (i == b && j == a) return -1;
  return 0;
}

}  // namespace

Element delta_op(const FreeAlgebra& ctx, int a, int b, const Element& e) {
  if (a == b) throw std::invalid_argument("delta_ab needs a != b");
  if (ctx.n() != e.n()) throw std::invalid_argument("ambient mismatch");
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    const Word& w = t.w;
    // Delta(p_1...p_d) = sum_k Delta(p_k) sigma_ab(p_1..p_{k-1}) p_{k+1}..p_d
    Word prefix;  // sigma_ab applied letterwise
    prefix.reserve(w.size());
    int prefix_sign = 1;
    for (size_t k = 0; k < w.size(); ++k) {
      int g = static_cast<unsigned char>(w[k]);
      int dl = delta_letter(ctx, a, b, g);
      if (dl != 0) {
        Word res = prefix + w.substr(k + 1);
        out.push_back({std::move(res), t.c * (dl * prefix_sign)});
      }
      auto [s, h] = ctx.transpose_letter(a, b, g);
      prefix_sign *= s;
      prefix.push_back(static_cast<char>(h));
    }
  }
  return Element::from_terms(e.n(), std::move(out));
}

Element nabla_op(const FreeAlgebra& ctx, const Element& e, int a, int b) {
  if (a == b) throw std::invalid_argument("nabla_ab needs a != b");
  if (ctx.n() != e.n()) throw std::invalid_argument("ambient mismatch");
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    const Word& w = t.w;
    size_t d = w.size();
    // (P)nabla_ab = sum_k (p_k)(sigma_{P_k^R} nabla_ab) P_k^L P_k^R.
    // Walk k from the right, maintaining sigma of the suffix.
    Perm sigma_suffix = Perm::identity(ctx.n());
    for (size_t kk = 0; kk < d; ++kk) {
      size_t k = d - 1 - kk;
      int g = static_cast<unsigned char>(w[k]);
      int ta = sigma_suffix.apply(a);
      int tb = sigma_suffix.apply(b);
      int dl = delta_letter(ctx, ta, tb, g);
      if (dl != 0) {
        Word res = w.substr(0, k) + w.substr(k + 1);
        out.push_back({std::move(res), t.c * dl});
      }
      auto [i, j] = ctx.gen_pair(g);
      sigma_suffix = Perm::transposition(ctx.n(), i, j).compose(sigma_suffix);
    }
  }
  return Element::from_terms(e.n(), std::move(out));
}

PairCache& thread_pair_cache(int n) {
  thread_local std::unordered_map<int, PairCache> caches;
  return caches[n];
}

Int pair_words(const FreeAlgebra& ctx, const Word& p, const Word& q, PairCache& cache) {
  if (p.size() != q.size()) return 0;
  if (p.empty()) return 1;
  if (p.size() == 1) return delta_letter(ctx, ctx.gen_pair(static_cast<unsigned char>(p[0])).first,
                                         ctx.gen_pair(static_cast<unsigned char>(p[0])).second,
                                         static_cast<unsigned char>(q[0]));
  auto key = std::make_pair(p, q);
  auto it = cache.map.find(key);
  if (it != cache.map.end()) return it->second;
  // <P' p_d, Q> = <P', Delta_{p_d}(Q)>
  int g = static_cast<unsigned char>(p.back());
  auto [a, b] = ctx.gen_pair(g);
  Word pp = p.substr(0, p.size() - 1);
  Element dq = delta_op(ctx, a, b, Element::from_word(ctx.n(), q));
  Int acc(0);
  for (const auto& t : dq.terms()) {
    Int sub = pair_words(ctx, pp, t.w, cache);
    if (sub != 0) acc += sub * t.c.get_num();
  }
  cache.map.emplace(std::move(key), acc);
  return acc;
}

Rat pair(const FreeAlgebra& ctx, const Element& p, const Element& q, PairCache& cache) {
  if (p.n() != q.n()) throw std::invalid_argument("ambient mismatch");
  Rat acc(0);
  for (const auto& tp : p.terms())
    for (const auto& tq : q.terms()) {
      if (tp.w.size() != tq.w.size()) continue;
      Int v = pair_words(ctx, tp.w, tq.w, cache);
      if (v != 0) acc += tp.c * tq.c * Rat(v);
    }
  return acc;
}

Rat pair(const FreeAlgebra& ctx, const Element& p, const Element& q) {
  return pair(ctx, p, q, thread_pair_cache(ctx.n()));
}

void TensorElement::add_term(const Word& p, const Word& q, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(p, q);
  auto less = [](const std::pair<std::pair<Word, Word>, Rat>& t,
                 const std::pair<Word, Word>& k) {
    if (t.first.first != k.first) return deglex_less(t.first.first, k.first);
    return deglex_less(t.first.second, k.second);
  };
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, less);
  if (it != terms_.end() && it->first == key) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {key, c});
  }
}

TensorElement tensor_multiply(const FreeAlgebra& ctx, const TensorElement& a,
                              const TensorElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ambient mismatch");
  TensorElement out(a.n());
  for (const auto& ta : a.terms()) {
    Perm sigma = ctx.sn_degree(ta.first.second);
    for (const auto& tb : b.terms()) {
      // (P1 (x) Q1)(P2 (x) Q2) = P1 sigma_{Q1}(P2) (x) Q1 Q2
      Word p2;
      p2.reserve(tb.first.first.size());
      int sign = 1;
      for (unsigned char g : tb.first.first) {
        auto [s, h] = ctx.permute_letter(sigma, g);
        sign *= s;
        p2.push_back(static_cast<char>(h));
      }
      out.add_term(ta.first.first + p2, ta.first.second + tb.first.second,
                   ta.second * tb.second * sign);
    }
  }
  return out;
}

TensorElement coproduct(const FreeAlgebra& ctx, const Element& e) {
  TensorElement out(e.n());
  for (const auto& t : e.terms()) {
    TensorElement acc(e.n());
    acc.add_term(Word(), Word(), t.c);
    for (unsigned char g : t.w) {
      TensorElement letter(e.n());
      Word gw(1, static_cast<char>(g));
      letter.add_term(gw, Word(), 1);
      letter.add_term(Word(), gw, 1);
      acc = tensor_multiply(ctx, acc, letter);
    }
    for (const auto& tt : acc.terms()) out.add_term(tt.first.first, tt.first.second, tt.second);
  }
  return out;
}

Element dual_act(const FreeAlgebra& ctx, const Word& functional, const Element& q) {
  TensorElement cop = coproduct(ctx, q);
  std::vector<Term> out;
  for (const auto& t : cop.terms())
    if (t.first.first == functional) out.push_back({t.first.second, t.second});
  return Element::from_terms(q.n(), std::move(out));
}

size_t bareiss_rank(std::vector<std::vector<Int>> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  Int prev(1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    // pivot search
    size_t pr = row;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[row]);
    const Int pivot = m[row][col];
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        Int v = pivot * m[i][j] - m[i][col] * m[row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][col] = 0;
    }
    prev = pivot;
    ++row;
    ++rank;
  }
  return rank;
}

size_t gram_rank(const FreeAlgebra& ctx, const std::vector<Word>& rows,
                 const std::vector<Word>& cols, int threads) {
  if (rows.empty() || cols.empty()) return 0;
  size_t d = rows[0].size();
  for (const auto& w : rows)
    if (w.size() != d) throw std::invalid_argument("gram_rank needs equal degrees");
  for (const auto& w : cols)
    if (w.size() != d) throw std::invalid_argument("gram_rank needs equal degrees");
  // Rows of S_n-degree sigma pair to zero against columns whose degree is
  // not sigma^{-1}: group rows by sigma and columns by sigma^{-1} and rank
  // each block separately.
  std::map<Perm, std::vector<size_t>> row_classes;
  std::map<Perm, std::vector<size_t>> col_classes;
  for (size_t k = 0; k < rows.size(); ++k) row_classes[ctx.sn_degree(rows[k])].push_back(k);
  for (size_t k = 0; k < cols.size(); ++k)
    col_classes[ctx.sn_degree(cols[k]).inverse()].push_back(k);

  struct Block {
    const std::vector<size_t>* r;
    const std::vector<size_t>* c;
  };
  std::vector<Block> blocks;
  for (const auto& [sigma, ridx] : row_classes) {
    auto it = col_classes.find(sigma);
    if (it != col_classes.end()) blocks.push_back({&ridx, &it->second});
  }
  std::vector<size_t> block_ranks(blocks.size(), 0);
  parallel_for(blocks.size(), threads, [&](size_t bi) {
    const auto& blk = blocks[bi];
    std::vector<std::vector<Int>> m(blk.r->size(), std::vector<Int>(blk.c->size()));
    PairCache& cache = thread_pair_cache(ctx.n());
    for (size_t i = 0; i < blk.r->size(); ++i)
      for (size_t j = 0; j < blk.c->size(); ++j)
        m[i][j] = pair_words(ctx, rows[(*blk.r)[i]], cols[(*blk.c)[j]], cache);
    block_ranks[bi] = bareiss_rank(std::move(m));
  });
  size_t total = 0;
  for (size_t r : block_ranks) total += r;
  return total;
}

}  // namespace fk
