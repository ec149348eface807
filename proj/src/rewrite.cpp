#include "fk/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace fk {

RewriteSystem::RewriteSystem(int n, int max_degree)
    : n_(n), max_degree_(max_degree), ctx_(n) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
}

void RewriteSystem::add_rule(Word lead, Element tail) {
  int idx = static_cast<int>(rules_.size());
  lead_index_.emplace(lead, idx);
  if (!std::binary_search(lead_lengths_.begin(), lead_lengths_.end(),
                          static_cast<int>(lead.size()))) {
    lead_lengths_.insert(std::upper_bound(lead_lengths_.begin(), lead_lengths_.end(),
                                          static_cast<int>(lead.size())),
                         static_cast<int>(lead.size()));
  }
  rules_.push_back({std::move(lead), std::move(tail)});
  automaton_ready_ = false;
}

void RewriteSystem::rebuild_index() {
  lead_index_.clear();
  lead_lengths_.clear();
  for (size_t k = 0; k < rules_.size(); ++k) {
    lead_index_.emplace(rules_[k].lead, static_cast<int>(k));
    int len = static_cast<int>(rules_[k].lead.size());
    if (!std::binary_search(lead_lengths_.begin(), lead_lengths_.end(), len))
      lead_lengths_.insert(std::upper_bound(lead_lengths_.begin(), lead_lengths_.end(), len),
                           len);
  }
  automaton_ready_ = false;
}

bool RewriteSystem::reducible(const Word& w) const {
  std::string_view sv(w);
  for (size_t end = 1; end <= w.size(); ++end)
    for (int len : lead_lengths_) {
      if (static_cast<size_t>(len) > end) break;
      if (lead_index_.find(sv.substr(end - len, len)) != lead_index_.end()) return true;
    }
  return false;
}

Element RewriteSystem::normal_form(const Element& e) const {
  if (e.n() != n_) throw std::invalid_argument("ambient mismatch");
  for (const auto& t : e.terms())
    if (static_cast<int>(t.w.size()) > max_degree_)
      throw std::invalid_argument("word degree exceeds truncation bound");
  std::map<Word, Rat, DeglexGreater> work;
  for (const auto& t : e.terms()) work.emplace(t.w, t.c);
  std::vector<Term> done;
  while (!work.empty()) {
    auto it = work.begin();
    Word w = it->first;
    Rat c = std::move(it->second);
    work.erase(it);
    if (c == 0) continue;
    // leftmost-ending, shortest-first occurrence of a lead
    std::string_view sv(w);
    int hit_end = -1, hit_len = 0, rule = -1;
    for (size_t end = 1; end <= w.size() && rule < 0; ++end)
      for (int len : lead_lengths_) {
        if (static_cast<size_t>(len) > end) break;
        auto f = lead_index_.find(sv.substr(end - len, len));
        if (f != lead_index_.end()) {
          hit_end = static_cast<int>(end);
          hit_len = len;
          rule = f->second;
          break;
        }
      }
    if (rule < 0) {
      done.push_back({std::move(w), std::move(c)});
      continue;
    }
    const Element& tail = rules_[rule].tail;
    size_t pos = hit_end - hit_len;
    for (const auto& t : tail.terms()) {
      Word nw;
      nw.reserve(w.size() - hit_len + t.w.size());
      nw.append(w, 0, pos);
      nw.append(t.w);
      nw.append(w, pos + hit_len, Word::npos);
      Rat nc = c * t.c;
      auto [wit, inserted] = work.emplace(std::move(nw), nc);
      if (!inserted) {
        wit->second += nc;
        if (wit->second == 0) work.erase(wit);
      }
    }
  }
  return Element::from_terms(n_, std::move(done));
}

Element RewriteSystem::normal_form_word(const Word& w, const Rat& c) const {
  return normal_form(Element::from_word(n_, w, c));
}

void RewriteSystem::build_automaton() const {
  if (automaton_ready_) return;
  int alpha = ctx_.num_gens();
  // Aho-Corasick trie over the leads; dead states (a lead matched) are
  // collapsed to -1 transitions.
  struct Node {
    std::vector<int32_t> next;
    int32_t fail = 0;
    bool terminal = false;
    Node(int alpha) : next(alpha, -1) {}
  };
  std::vector<Node> trie;
  trie.emplace_back(alpha);
  for (const auto& r : rules_) {
    int cur = 0;
    for (unsigned char ch : r.lead) {
      if (trie[cur].next[ch] < 0) {
        trie[cur].next[ch] = static_cast<int32_t>(trie.size());
        trie.emplace_back(alpha);
      }
      cur = trie[cur].next[ch];
    }
    trie[cur].terminal = true;
  }
  // BFS failure links
  std::vector<int32_t> order;
  order.reserve(trie.size());
  for (int c = 0; c < alpha; ++c) {
    int32_t v = trie[0].next[c];
    if (v >= 0) {
      trie[v].fail = 0;
      order.push_back(v);
    }
  }
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int32_t u = order[qi];
    if (trie[trie[u].fail].terminal) trie[u].terminal = true;
    for (int c = 0; c < alpha; ++c) {
      int32_t v = trie[u].next[c];
      if (v < 0) continue;
      int32_t f = trie[u].fail;
      while (f != 0 && trie[f].next[c] < 0) f = trie[f].fail;
      int32_t t = trie[f].next[c];
      trie[v].fail = (t >= 0 && t != v) ? t : 0;
      order.push_back(v);
    }
  }
  goto_.assign(trie.size(), std::vector<int32_t>(alpha, -1));
  // full transition table; -1 marks entering a dead (matched) state
  std::vector<int32_t> bfs;
  bfs.push_back(0);
  for (size_t qi = 0; qi < bfs.size(); ++qi) {
    int32_t u = bfs[qi];
    for (int c = 0; c < alpha; ++c) {
      int32_t v = trie[u].next[c];
      if (v < 0) v = (u == 0) ? 0 : goto_[trie[u].fail][c];
      else bfs.push_back(v);
      if (v >= 0 && trie[v].terminal) v = -1;
      goto_[u][c] = v;
    }
  }
  automaton_ready_ = true;
}

Int RewriteSystem::graded_dim_full(int d) const {
  if (d < 0) return 0;
  if (d > max_degree_) throw std::invalid_argument("degree exceeds truncation bound");
  build_automaton();
  int alpha = ctx_.num_gens();
  std::vector<Int> cnt(goto_.size(), Int(0));
  cnt[0] = 1;
  for (int step = 0; step < d; ++step) {
    std::vector<Int> nxt(goto_.size(), Int(0));
    for (size_t s = 0; s < goto_.size(); ++s) {
      if (cnt[s] == 0) continue;
      for (int c = 0; c < alpha; ++c) {
        int32_t t = goto_[s][c];
        if (t >= 0) nxt[t] += cnt[s];
      }
    }
    cnt.swap(nxt);
  }
  Int total(0);
  for (const auto& v : cnt) total += v;
  return total;
}

std::vector<Word> RewriteSystem::normal_words(int d, size_t cap) const {
  if (d > max_degree_) throw std::invalid_argument("degree exceeds truncation bound");
  build_automaton();
  int alpha = ctx_.num_gens();
  std::vector<Word> out;
  Word w;
  w.reserve(d);
  std::function<void(int32_t, int)> rec = [&](int32_t state, int left) {
    if (left == 0) {
      if (out.size() >= cap) throw ResourceError("normal word enumeration cap exceeded");
      out.push_back(w);
      return;
    }
    for (int c = 0; c < alpha; ++c) {
      int32_t t = goto_[state][c];
      if (t < 0) continue;
      w.push_back(static_cast<char>(c));
      rec(t, left - 1);
      w.pop_back();
    }
  };
  rec(0, d);
  return out;
}

std::vector<Element> quadratic_relations(int n) {
  if (n < 2) throw std::invalid_argument("quadratic_relations needs n >= 2");
  FreeAlgebra ctx(n);
  std::vector<Element> rels;
  // squares x_ij^2
  for (int g = 0; g < ctx.num_gens(); ++g) {
    Word w(2, static_cast<char>(g));
    rels.push_back(Element::from_word(n, std::move(w)));
  }
  // disjoint commutators
  for (int g = 0; g < ctx.num_gens(); ++g)
    for (int h = g + 1; h < ctx.num_gens(); ++h) {
      auto [i, j] = ctx.gen_pair(g);
      auto [k, l] = ctx.gen_pair(h);
      if (i == k || i == l || j == k || j == l) continue;
      Element e(n);
      Word gh, hg;
      gh.push_back(static_cast<char>(g));
      gh.push_back(static_cast<char>(h));
      hg.push_back(static_cast<char>(h));
      hg.push_back(static_cast<char>(g));
      e.add_term(gh, 1);
      e.add_term(hg, -1);
      rels.push_back(std::move(e));
    }
  // three-term relations: x_ab x_bc + x_bc x_ca + x_ca x_ab for the two
  // orbit representatives (i,j,k) and (i,k,j) of each triple i<j<k
  auto triple = [&](int a, int b, int c) {
    Element e(n);
    auto add = [&](int p1, int q1, int p2, int q2) {
      auto [s1, g1] = ctx.normalize_pair(p1, q1);
      auto [s2, g2] = ctx.normalize_pair(p2, q2);
      Word w;
      w.push_back(static_cast<char>(g1));
      w.push_back(static_cast<char>(g2));
      e.add_term(w, s1 * s2);
    };
    add(a, b, b, c);
    add(b, c, c, a);
    add(c, a, a, b);
    return e;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        rels.push_back(triple(i, j, k));
        rels.push_back(triple(i, k, j));
      }
  return rels;
}

namespace {

// S-element of the overlap lead1 = x y, lead2 = y z (|y| = o):
// tail1 * z - x * tail2.
Element s_element(int n, const Rule& r1, const Rule& r2, int o) {
  const Word& u = r1.lead;
  const Word& v = r2.lead;
  Word suffix = v.substr(o);
  Word prefix = u.substr(0, u.size() - o);
  std::vector<Term> terms;
  terms.reserve(r1.tail.terms().size() + r2.tail.terms().size());
  for (const auto& t : r1.tail.terms()) terms.push_back({t.w + suffix, t.c});
  for (const auto& t : r2.tail.terms()) terms.push_back({prefix + t.w, -t.c});
  return Element::from_terms(n, std::move(terms));
}

}  // namespace

RewriteSystem build_rewrite_system(int n, int max_degree, const RewriteCaps& caps,
                                   const std::vector<Element>& extra_relations) {
  RewriteSystem rs(n, max_degree);
  std::vector<std::vector<Element>> pending(max_degree + 2);
  size_t queued = 0;
  if (n >= 2 && max_degree >= 2) {
    for (auto& rel : quadratic_relations(n)) {
      pending[2].push_back(std::move(rel));
      ++queued;
    }
  }
  for (const auto& rel : extra_relations) {
    if (rel.is_zero()) continue;
    int deg = 0;
    if (!rel.homogeneous_degree(&deg) || deg < 1)
      throw std::invalid_argument("extra relations must be homogeneous of positive degree");
    if (deg > max_degree)
      throw std::invalid_argument("extra relation degree exceeds truncation bound");
    pending[deg].push_back(rel);
    ++queued;
  }
  for (int d = 1; d <= max_degree; ++d) {
    if (caps.deadline && std::chrono::steady_clock::now() > *caps.deadline)
      throw ResourceError("wall-clock budget exceeded during completion");
    size_t first_new_rule = rs.rules().size();
    for (size_t pi = 0; pi < pending[d].size(); ++pi) {
      Element nf = rs.normal_form(pending[d][pi]);
      if (nf.is_zero()) continue;
      int deg = 0;
      if (!nf.homogeneous_degree(&deg) || deg != d)
        throw std::logic_error("inhomogeneous element in completion");
      // orient: lead -> tail
      Word lead = nf.leading().w;
      Rat lc = nf.leading().c;
      Element tail(n);
      {
        std::vector<Term> tt(nf.terms().begin(), nf.terms().end() - 1);
        for (auto& t : tt) t.c /= -lc;
        tail = Element::from_terms(n, std::move(tt));
      }
      int new_idx = static_cast<int>(rs.rules().size());
      rs.add_rule(std::move(lead), std::move(tail));
      if (rs.rules().size() > caps.max_rules)
        throw ResourceError("rewrite rule cap exceeded");
      // overlaps of the new rule with every rule (both orders, incl. self)
      for (int other = 0; other <= new_idx; ++other) {
        auto enqueue_overlaps = [&](int i1, int i2) {
          const Word& a = rs.rules()[i1].lead;
          const Word& b = rs.rules()[i2].lead;
          int amax = static_cast<int>(a.size());
          int bmax = static_cast<int>(b.size());
          for (int o = 1; o < std::min(amax, bmax); ++o) {
            int deg_w = amax + bmax - o;
            if (deg_w > max_degree) continue;
            if (a.compare(a.size() - o, o, b, 0, o) != 0) continue;
            pending[deg_w].push_back(s_element(n, rs.rules()[i1], rs.rules()[i2], o));
            if (++queued > caps.max_queue) throw ResourceError("rewrite queue cap exceeded");
          }
        };
        enqueue_overlaps(new_idx, other);
        if (other != new_idx) enqueue_overlaps(other, new_idx);
      }
    }
    pending[d].clear();
    pending[d].shrink_to_fit();
    // Rules created in this degree may reduce each other's tails; re-reduce
    // so the stored system is fully interreduced.
    for (size_t k = first_new_rule; k < rs.rules_.size(); ++k)
      rs.rules_[k].tail = rs.normal_form(rs.rules_[k].tail);
    if (caps.progress) caps.progress(d, rs.rules_.size());
  }
  return rs;
}

size_t audit_confluence(const RewriteSystem& rs) {
  size_t checked = 0;
  const auto& rules = rs.rules();
  for (size_t i = 0; i < rules.size(); ++i)
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& a = rules[i].lead;
      const Word& b = rules[j].lead;
      for (int o = 1; o < static_cast<int>(std::min(a.size(), b.size())); ++o) {
        if (static_cast<int>(a.size() + b.size()) - o > rs.max_degree()) continue;
        if (a.compare(a.size() - o, o, b, 0, o) != 0) continue;
        Element s = s_element(rs.n(), rules[i], rules[j], o);
        if (!rs.is_zero(s)) throw std::logic_error("confluence audit failed");
        ++checked;
      }
    }
  return checked;
}

// ------- subalgebra machinery -------

SubalgebraBasis::SubalgebraBasis(const Graph& g, const RewriteSystem& rs)
    : g_(g), rs_(rs), edge_ids_(rs.ctx().edge_gens(g)) {
  basis_words_.push_back({Word()});
  basis_forms_.push_back({Element::one(rs.n())});
}

void SubalgebraBasis::extend_to(int d) {
  if (d > rs_.max_degree())
    throw std::invalid_argument("degree exceeds truncation bound");
  const FreeAlgebra& ctx = rs_.ctx();
  while (computed_degree() < d) {
    int cur = computed_degree();
    const auto& words = basis_words_[cur];
    const auto& forms = basis_forms_[cur];
    std::vector<Word> new_words;
    std::vector<Element> new_forms;
    // Echelon rows per S_n-degree class: pivot word -> reduced row.
    std::unordered_map<Perm, std::map<Word, Element, DeglexGreater>, PermHash> blocks;
    for (int e : edge_ids_) {
      Word ew(1, static_cast<char>(e));
      for (size_t k = 0; k < words.size(); ++k) {
        Word cand = ew + words[k];
        Element prod(rs_.n());
        {
          std::vector<Term> terms;
          terms.reserve(forms[k].terms().size());
          for (const auto& t : forms[k].terms()) terms.push_back({ew + t.w, t.c});
          prod = Element::from_terms(rs_.n(), std::move(terms));
        }
        Element nf = rs_.normal_form(prod);
        if (nf.is_zero()) continue;
        auto& block = blocks[ctx.sn_degree(cand)];
        Element r = nf;
        while (!r.is_zero()) {
          auto it = block.find(r.leading().w);
          if (it == block.end()) break;
          r -= it->second.scaled(r.leading().c);
        }
        if (r.is_zero()) continue;
        r.scale(Rat(1) / r.leading().c);
        block.emplace(r.leading().w, std::move(r));
        new_words.push_back(std::move(cand));
        new_forms.push_back(std::move(nf));
      }
    }
    basis_words_.push_back(std::move(new_words));
    basis_forms_.push_back(std::move(new_forms));
  }
}

Int graded_dim_sub(const Graph& g, int d, const RewriteSystem& rs) {
  SubalgebraBasis sb(g, rs);
  return sb.dim(d);
}

std::vector<Int> sub_profile(const Graph& g, int max_d, const RewriteSystem& rs) {
  SubalgebraBasis sb(g, rs);
  sb.extend_to(max_d);
  std::vector<Int> out;
  for (int d = 0; d <= max_d; ++d)
    out.emplace_back(static_cast<long>(sb.basis_words(d).size()));
  return out;
}

GradedSeries sub_series(const Graph& g, int max_d, const RewriteSystem& rs) {
  auto prof = sub_profile(g, max_d, rs);
  std::vector<Rat> coeffs;
  for (const auto& v : prof) coeffs.emplace_back(Rat(v));
  return GradedSeries(std::move(coeffs));
}

MonomialBasis monomial_basis_sub(const Graph& g, const RewriteSystem& rs,
                                 const RewriteCaps& caps) {
  SubalgebraBasis sb(g, rs);
  int top = -1;
  for (int d = 1; d <= rs.max_degree() + 1; ++d) {
    if (d > rs.max_degree())
      throw ResourceError("not finite-dimensional within bound");
    if (sb.dim(d) == 0) {
      top = d - 1;
      break;
    }
  }
  MonomialBasis out;
  for (int d = 0; d <= top; ++d) out.by_degree.push_back(sb.basis_words(d));
  out.top_degree = top;
  if (sb.basis_words(top).size() != 1)
    throw std::logic_error("top degree is not one-dimensional");
  // Lexicographically minimal word of the top degree with nonzero normal
  // form, by depth-first search pruned at zero prefixes.
  const FreeAlgebra& ctx = rs.ctx();
  std::vector<int> edges = ctx.edge_gens(g);
  size_t nodes = 0;
  Word w;
  std::function<bool(const Element&, int)> rec = [&](const Element& nf, int left) -> bool {
    if (left == 0) return !nf.is_zero();
    for (int e : edges) {
      if (++nodes > caps.max_search_nodes)
        throw ResourceError("top word search cap exceeded");
      Element next(rs.n());
      {
        std::vector<Term> terms;
        Word ew(1, static_cast<char>(e));
        for (const auto& t : nf.terms()) terms.push_back({t.w + ew, t.c});
        next = Element::from_terms(rs.n(), std::move(terms));
      }
      next = rs.normal_form(next);
      if (next.is_zero()) continue;
      w.push_back(static_cast<char>(e));
      if (rec(next, left - 1)) return true;
      w.pop_back();
    }
    return false;
  };
  if (!rec(Element::one(rs.n()), top))
    throw std::logic_error("no nonzero top word found");
  out.top_word = w;
  return out;
}

Graph descent_left(const Element& w, const Graph& g, const RewriteSystem& rs) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) {
    Element x = gen_element(rs.ctx(), e.first, e.second);
    if (rs.is_zero(multiply(x, w))) edges.push_back(e);
  }
  return Graph(g.n(), std::move(edges));
}

Graph descent_right(const Element& w, const Graph& g, const RewriteSystem& rs) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) {
    Element x = gen_element(rs.ctx(), e.first, e.second);
    if (rs.is_zero(multiply(w, x))) edges.push_back(e);
  }
  return Graph(g.n(), std::move(edges));
}

// ------- serialization -------

namespace {

uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string rule_line(const Rule& r) {
  std::ostringstream os;
  os << r.lead.size();
  for (unsigned char c : r.lead) os << ' ' << static_cast<int>(c);
  os << ' ' << r.tail.terms().size();
  for (const auto& t : r.tail.terms()) {
    os << ' ' << t.c.get_num() << ' ' << t.c.get_den() << ' ' << t.w.size();
    for (unsigned char c : t.w) os << ' ' << static_cast<int>(c);
  }
  return os.str();
}

}  // namespace

void RewriteSystem::save(std::ostream& os) const {
  os << "fkrw 1\n" << n_ << ' ' << max_degree_ << ' ' << rules_.size() << '\n';
  uint64_t h = 1469598103934665603ull;
  for (const auto& r : rules_) {
    std::string line = rule_line(r);
    h = fnv1a(line, h);
    os << line << '\n';
  }
  os << "checksum " << std::hex << h << std::dec << '\n';
}

RewriteSystem RewriteSystem::load(std::istream& is) {
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (magic != "fkrw" || version != 1)
    throw std::invalid_argument("unrecognized rewrite cache format");
  int n = 0, maxdeg = 0;
  size_t count = 0;
  is >> n >> maxdeg >> count;
  if (!is) throw std::invalid_argument("truncated rewrite cache header");
  is.ignore();
  RewriteSystem rs(n, maxdeg);
  uint64_t h = 1469598103934665603ull;
  for (size_t k = 0; k < count; ++k) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("truncated rewrite cache");
    h = fnv1a(line, h);
    std::istringstream ls(line);
    size_t llen = 0;
    ls >> llen;
    Word lead;
    for (size_t i = 0; i < llen; ++i) {
      int c;
      ls >> c;
      lead.push_back(static_cast<char>(c));
    }
    size_t nterms = 0;
    ls >> nterms;
    std::vector<Term> terms;
    for (size_t t = 0; t < nterms; ++t) {
      std::string num, den;
      size_t wlen = 0;
      ls >> num >> den >> wlen;
      Word w;
      for (size_t i = 0; i < wlen; ++i) {
        int c;
        ls >> c;
        w.push_back(static_cast<char>(c));
      }
      Rat coeff{Int(num), Int(den)};
      coeff.canonicalize();
      terms.push_back({std::move(w), std::move(coeff)});
    }
    if (!ls) throw std::invalid_argument("malformed rewrite cache line");
    rs.add_rule(std::move(lead), Element::from_terms(n, std::move(terms)));
  }
  std::string tag, hexsum;
  is >> tag >> hexsum;
  if (tag != "checksum" || hexsum != ([&] {
        std::ostringstream os;
        os << std::hex << h;
        return os.str();
      })())
    throw std::invalid_argument("rewrite cache checksum mismatch");
  return rs;
}

std::string cache_file_name(int n, int max_degree) {
  return "fkrw_v1_n" + std::to_string(n) + "_d" + std::to_string(max_degree) + ".txt";
}

RewriteSystem build_or_load(int n, int max_degree, const std::string& cache_dir,
                            const RewriteCaps& caps) {
  if (!cache_dir.empty()) {
    std::string path = cache_dir + "/" + cache_file_name(n, max_degree);
    std::ifstream in(path);
    if (in) {
      try {
        RewriteSystem rs = RewriteSystem::load(in);
        if (rs.n() == n && rs.max_degree() == max_degree) return rs;
      } catch (const std::exception&) {
        // fall through to rebuild
      }
    }
  }
  RewriteSystem rs = build_rewrite_system(n, max_degree, caps);
  if (!cache_dir.empty()) {
    std::string path = cache_dir + "/" + cache_file_name(n, max_degree);
    std::ofstream out(path);
    if (out) rs.save(out);
  }
  return rs;
}

}  // namespace fk
