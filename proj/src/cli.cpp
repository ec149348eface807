#include "fk/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "fk/catalog.hpp"
#include "fk/coxeter.hpp"
#include "fk/freealg.hpp"
#include "fk/graph.hpp"
#include "fk/mcr.hpp"
#include "fk/pairing.hpp"
#include "fk/rewrite.hpp"
#include "fk/series.hpp"
#include "fk/threads.hpp"
#include "fk/weyl.hpp"

namespace fk {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw UsageError("empty integer in list '" + s + "'");
    out.push_back(std::stoi(tok));
  }
  return out;
}

// Command-line options with environment fallbacks (--max-deg -> FK_MAX_DEG).
class Options {
 public:
  Options(std::vector<std::string> args) : args_(std::move(args)) {}

  std::optional<std::string> get(const std::string& flag) {
    for (size_t k = 0; k + 1 < args_.size(); ++k)
      if (args_[k] == "--" + flag) {
        used_.insert(used_.end(), {k, k + 1});
        return args_[k + 1];
      }
    std::string env = "FK_";
    for (char c : flag) env.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
    if (const char* v = std::getenv(env.c_str())) return std::string(v);
    return std::nullopt;
  }

  std::string require(const std::string& flag) {
    auto v = get(flag);
    if (!v) throw UsageError("missing required flag --" + flag);
    return *v;
  }

  int get_int(const std::string& flag, int fallback) {
    auto v = get(flag);
    return v ? std::stoi(*v) : fallback;
  }

  bool has_switch(const std::string& flag) {
    for (size_t k = 0; k < args_.size(); ++k)
      if (args_[k] == "--" + flag) {
        used_.push_back(k);
        return true;
      }
    return false;
  }

  // Positional arguments (not starting with --, not consumed as values).
  std::vector<std::string> positional() const {
    std::vector<std::string> out;
    for (size_t k = 0; k < args_.size(); ++k) {
      if (std::find(used_.begin(), used_.end(), k) != used_.end()) continue;
      if (args_[k].rfind("--", 0) == 0) {
        ++k;  // skip unknown flag and its value
        continue;
      }
      out.push_back(args_[k]);
    }
    return out;
  }

 private:
  std::vector<std::string> args_;
  std::vector<size_t> used_;
};

struct CommonConfig {
  std::string format = "text";
  int threads = 1;
  std::string cache_dir;
  double budget_seconds = 0;  // 0 = unlimited
  RewriteCaps caps;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void check_budget() const {
    if (budget_seconds <= 0) return;
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) throw ResourceError("wall-clock budget exceeded");
  }
};

CommonConfig common_config(Options& opt, std::ostream* err = nullptr) {
  CommonConfig cfg;
  if (auto f = opt.get("format")) cfg.format = *f;
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "tsv")
    throw UsageError("--format must be text, json or tsv");
  cfg.threads = opt.get_int("threads", 1);
  if (auto c = opt.get("cache-dir")) cfg.cache_dir = *c;
  if (auto b = opt.get("budget")) cfg.budget_seconds = std::stod(*b);
  if (auto r = opt.get("caps")) {
    auto vals = parse_int_list(*r);
    if (!vals.empty()) cfg.caps.max_rules = static_cast<size_t>(vals[0]);
    if (vals.size() > 1) cfg.caps.max_queue = static_cast<size_t>(vals[1]);
    if (vals.size() > 2) cfg.caps.max_search_nodes = static_cast<size_t>(vals[2]);
  }
  if (cfg.budget_seconds > 0)
    cfg.caps.deadline = cfg.start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                        std::chrono::duration<double>(cfg.budget_seconds));
  if (opt.has_switch("progress")) {
    std::ostream* sink = err ? err : &std::cerr;
    cfg.caps.progress = [sink](int degree, size_t rules) {
      (*sink) << "# rewrite: degree " << degree << " complete, " << rules << " rules\n";
    };
  }
  return cfg;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string name = spec.substr(0, colon);
    return named_graph(name, parse_int_list(spec.substr(colon + 1)));
  }
  if (spec == "E6" || spec == "E7" || spec == "E8" || spec == "E6tilde" || spec == "E7tilde")
    return named_graph(spec, {});
  return parse_graph(spec);
}

namespace {

GradedSeries profile_series(const std::vector<Int>& prof) {
  std::vector<Rat> coeffs;
  for (const auto& v : prof) coeffs.emplace_back(Rat(v));
  return GradedSeries(std::move(coeffs));
}

// {"coeffs": [...], "dim": ..., "topdeg": ..., "factors": [...]}
json series_json(const GradedSeries& s) {
  json j;
  j["coeffs"] = json::array();
  for (int d = 0; d <= s.degree(); ++d) j["coeffs"].push_back(s.coeff(d).get_str());
  j["dim"] = s.eval_one().get_str();
  j["topdeg"] = s.degree();
  j["factors"] = json::array();
  if (auto f = s.cyclotomic_factor()) {
    for (const auto& [d, m] : *f)
      j["factors"].push_back({{"phi", d}, {"multiplicity", m}});
  }
  return j;
}

// Per-degree dimension report for a graph: exact dimensions from the
// rewrite engine plus the bilinear-form rank of the words of E_G per
// degree (an independent engine) up to gram_max_deg.
int cmd_hilbert(Options& opt, std::ostream& out, std::ostream& err) {
  CommonConfig cfg = common_config(opt, &err);
  Graph g = parse_graph_spec(opt.require("graph"));
  int n = g.n();
  bool full_graph = g.num_edges() == n * (n - 1) / 2;
  int max_deg = opt.get_int("max-deg", full_graph ? (n >= 6 ? 4 : 8) : 8);
  int gram_max = opt.get_int("gram-max-deg", std::min(max_deg, 3));
  auto expect = opt.get("expect");

  RewriteSystem rs = build_or_load(n, std::max(2, max_deg), cfg.cache_dir, cfg.caps);
  FreeAlgebra ctx(n);
  std::vector<Int> dims;
  std::vector<long long> grams;
  SubalgebraBasis sb(g, rs);
  for (int d = 0; d <= max_deg; ++d) {
    cfg.check_budget();
    dims.emplace_back(static_cast<long>(sb.dim(d)));
    if (d <= gram_max) {
      auto ws = words_of_degree(ctx, g, d);
      grams.push_back(static_cast<long long>(gram_rank(ctx, ws, ws, cfg.threads)));
    }
  }
  GradedSeries series = profile_series(dims);

  bool pass = true;
  std::string verdict;
  if (expect) {
    GradedSeries want = parse_brackets(*expect);
    for (int d = 0; d <= max_deg; ++d)
      if (series.coeff(d) != want.coeff(d)) pass = false;
    if (want.degree() > max_deg) verdict = pass ? "PASS (prefix)" : "FAIL";
    else verdict = pass ? "PASS" : "FAIL";
  }

  if (cfg.format == "json") {
    json j;
    j["schema"] = "fk-hilbert-1";
    j["graph"] = encode_edge_list(g);
    j["n"] = n;
    j["truncation"] = rs.max_degree();
    j["dims"] = json::array();
    for (const auto& v : dims) j["dims"].push_back(v.get_str());
    j["gram_ranks"] = grams;
    j["series"] = series_json(series);
    if (auto f = series.cyclotomic_factor()) j["brackets"] = series.to_bracket_string();
    if (expect) {
      j["expect"] = *expect;
      j["verdict"] = verdict;
    }
    out << j.dump(2) << "\n";
  } else {
    const char* sep = cfg.format == "tsv" ? "\t" : "  ";
    out << "# graph " << encode_edge_list(g) << " (n=" << n << "), truncation bound "
        << rs.max_degree() << "\n";
    out << "deg" << sep << "dim" << sep << "gram" << "\n";
    for (int d = 0; d <= max_deg; ++d) {
      out << d << sep << dims[d].get_str() << sep;
      if (d <= gram_max) out << grams[d];
      else out << "-";
      out << "\n";
    }
    if (series.degree() < max_deg) {
      out << "# closed out: " << series.to_bracket_string() << ", dim "
          << series.eval_one().get_str() << ", top degree " << series.degree() << "\n";
    }
    if (expect) out << "# expect " << *expect << ": " << verdict << "\n";
  }
  if (expect && !pass) return 1;
  return 0;
}

// ---- relation suites ----

Element star_word(const FreeAlgebra& ctx, int center, const std::vector<int>& leaves,
                  const std::string& symbols) {
  // symbol 'a' -> edge center-leaves[0], 'b' -> leaves[1], ...
  Word w;
  int sign = 1;
  for (char c : symbols) {
    int leaf = leaves[c - 'a'];
    auto [s, g] = ctx.normalize_pair(center, leaf);
    sign *= s;
    w.push_back(static_cast<char>(g));
  }
  return Element::from_word(ctx.n(), std::move(w), sign);
}

// Degree-d words of K_n grouped by S_n-degree, built once and shared
// across the relations of a suite.
struct ProbeIndex {
  std::map<int, std::unordered_map<Perm, std::vector<Word>, PermHash>> by_degree;

  const std::vector<Word>& probes(const FreeAlgebra& ctx, int deg, const Perm& sigma) {
    auto it = by_degree.find(deg);
    if (it == by_degree.end()) {
      auto& classes = by_degree[deg];
      Graph kn = named_graph("complete", {ctx.n()});
      for_each_word(ctx, kn, deg, [&](const Word& w) {
        classes[ctx.sn_degree(w)].push_back(w);
        return true;
      });
      it = by_degree.find(deg);
    }
    static const std::vector<Word> kEmpty;
    auto cit = it->second.find(sigma);
    return cit == it->second.end() ? kEmpty : cit->second;
  }
};

bool orthogonal_to_all(const FreeAlgebra& ctx, const Element& rel, int threads,
                       long long* probes, ProbeIndex& index) {
  // Words of mismatched S_n-degree pair to zero identically, so only the
  // matching class is enumerated.
  if (rel.is_zero()) return true;
  int deg = 0;
  if (!rel.homogeneous_degree(&deg)) throw std::logic_error("inhomogeneous relation");
  Perm target = ctx.sn_degree(rel.terms()[0].w).inverse();
  const std::vector<Word>& matching = index.probes(ctx, deg, target);
  *probes += static_cast<long long>(matching.size());
  std::vector<char> ok(matching.size(), 1);
  parallel_for(matching.size(), threads, [&](size_t k) {
    PairCache& cache = thread_pair_cache(ctx.n());
    Rat acc(0);
    for (const auto& t : rel.terms())
      acc += t.c * Rat(pair_words(ctx, t.w, matching[k], cache));
    if (acc != 0) ok[k] = 0;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c == 1; });
}

}  // namespace

std::vector<RelationCheck> run_relation_suite(const std::string& suite, int n,
                                              const RewriteSystem& rs, int threads) {
  FreeAlgebra ctx(n);
  std::vector<std::pair<std::string, Element>> rels;
  auto name_ijk = [](const char* base, std::initializer_list<int> v) {
    std::string s = base;
    for (int x : v) s += "_" + std::to_string(x);
    return s;
  };
  if (suite == "braid") {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || j == k || i == k) continue;
          Element rel = multiply(multiply(gen_element(ctx, i, j), gen_element(ctx, j, k)),
                                 gen_element(ctx, i, j)) -
                        multiply(multiply(gen_element(ctx, j, k), gen_element(ctx, i, j)),
                                 gen_element(ctx, j, k));
          rels.emplace_back(name_ijk("braid", {i, j, k}), std::move(rel));
        }
  } else if (suite == "claw") {
    if (n < 4) throw UsageError("claw suite needs n >= 4");
    for (int c = 1; c <= n; ++c) {
      std::vector<int> leaves;
      for (int v = 1; v <= n; ++v)
        if (v != c) leaves.push_back(v);
      // all 3-subsets of the leaves
      int m = static_cast<int>(leaves.size());
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          for (int d = b + 1; d < m; ++d) {
            std::vector<int> l3 = {leaves[a], leaves[b], leaves[d]};
            Element r1 = star_word(ctx, c, l3, "abca") + star_word(ctx, c, l3, "bcab") +
                         star_word(ctx, c, l3, "cabc");
            Element r2 = star_word(ctx, c, l3, "acba") + star_word(ctx, c, l3, "bacb") +
                         star_word(ctx, c, l3, "cbac");
            rels.emplace_back(name_ijk("claw", {c, l3[0], l3[1], l3[2]}), std::move(r1));
            rels.emplace_back(name_ijk("claw_rev", {c, l3[0], l3[1], l3[2]}), std::move(r2));
          }
    }
  } else if (suite == "cyclic") {
    // sum_{i=2..m} x_{a1 ai} x_{a1 a(i+1)} ... x_{a1 am} x_{a1 a2} ... x_{a1 ai}
    std::vector<int> tuple;
    std::vector<char> used(n + 1, 0);
    std::function<void(int)> rec = [&](int m) {
      if (static_cast<int>(tuple.size()) == m) {
        Element rel(n);
        for (int i = 2; i <= m; ++i) {
          std::vector<std::pair<int, int>> word;
          for (int t = i; t <= m; ++t) word.emplace_back(tuple[0], tuple[t - 1]);
          for (int t = 2; t <= i; ++t) word.emplace_back(tuple[0], tuple[t - 1]);
          Element term = Element::one(n);
          for (auto [a, b] : word) term = multiply(term, gen_element(ctx, a, b));
          rel += term;
        }
        rels.emplace_back(name_ijk("cyclic", std::initializer_list<int>{}) +
                              [&] {
                                std::string s;
                                for (int v : tuple) s += std::to_string(v);
                                return s;
                              }(),
                          std::move(rel));
        return;
      }
      for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        tuple.push_back(v);
        rec(m);
        tuple.pop_back();
        used[v] = 0;
      }
    };
    for (int m = 3; m <= n; ++m) rec(m);
  } else if (suite == "sextic") {
    if (n < 5) throw UsageError("sextic suite needs n >= 5");
    // the degree-six star relations of K_{1,4}
    static const std::pair<const char*, int> kSextic[] = {
        {"abacdc", 1}, {"abcdca", -1}, {"acdcba", 1}, {"bacdcb", 1},  {"bcdcab", -1},
        {"cabadc", -1}, {"cdabac", 1}, {"cdcaba", -1}, {"dabacd", 1}, {"dcabad", -1}};
    for (int c = 1; c <= n; ++c) {
      if (n != 5 && c > 1) break;  // one center suffices beyond the K_{1,4} ambient
      std::vector<int> leaves;
      for (int v = 1; v <= n; ++v)
        if (v != c) leaves.push_back(v);
      if (leaves.size() < 4) continue;
      leaves.resize(4);
      Element rel(n);
      for (const auto& [word, sign] : kSextic)
        rel += star_word(ctx, c, leaves, word).scaled(sign);
      rels.emplace_back(name_ijk("sextic", {c}), std::move(rel));
    }
  } else if (suite == "a3tilde") {
    if (n != 4) throw UsageError("a3tilde suite needs n = 4");
    OrientedGraph og = cycle_oriented(4);
    auto th = [&](std::initializer_list<int> letters) {
      return theta(ctx, std::vector<int>(letters), og);
    };
    rels.emplace_back("a3tilde_cubic",
                      th({0, 1, 2}) + th({1, 2, 3}) + th({2, 3, 0}) + th({3, 0, 1}));
    rels.emplace_back("a3tilde_cubic_rev",
                      th({2, 1, 0}) + th({3, 2, 1}) + th({0, 3, 2}) + th({1, 0, 3}));
    rels.emplace_back("a3tilde_quartic",
                      th({0, 1, 3, 0}) + th({1, 2, 0, 1}) + th({2, 3, 1, 2}) +
                          th({3, 0, 2, 3}) + th({0, 2, 1, 3}) + th({1, 3, 0, 2}));
  } else if (suite == "rk") {
    if (n < 3) throw UsageError("rk suite needs n >= 3");
    for (int k = 1; k <= n - 1; ++k)
      rels.emplace_back("R_" + std::to_string(k), rk_element(ctx, n, k));
  } else {
    throw UsageError("unknown relation suite '" + suite + "'");
  }

  std::vector<RelationCheck> out;
  ProbeIndex index;
  for (auto& [name, rel] : rels) {
    RelationCheck rc;
    rc.name = name;
    rc.nf_zero = rs.is_zero(rel);
    rc.orthogonal = orthogonal_to_all(ctx, rel, threads, &rc.probes, index);
    out.push_back(std::move(rc));
  }
  return out;
}

namespace {

int cmd_relcheck(Options& opt, std::ostream& out, std::ostream& err,
                 const std::string& suite) {
  CommonConfig cfg = common_config(opt, &err);
  int n = opt.get_int("n", suite == "a3tilde" ? 4 : suite == "sextic" ? 5 : 3);
  int need_deg = 2;
  if (suite == "braid") need_deg = 3;
  else if (suite == "claw") need_deg = 4;
  else if (suite == "cyclic") need_deg = n;
  else if (suite == "sextic") need_deg = 6;
  else if (suite == "a3tilde") need_deg = 4;
  else if (suite == "rk") need_deg = std::max(2, n * n / 4 + (n % 2 ? 1 : 0));
  RewriteSystem rs = build_or_load(n, std::max(2, need_deg), cfg.cache_dir, cfg.caps);
  auto checks = run_relation_suite(suite, n, rs, cfg.threads);
  bool all = true;
  if (cfg.format == "json") {
    json j;
    j["schema"] = "fk-relcheck-1";
    j["suite"] = suite;
    j["n"] = n;
    j["relations"] = json::array();
    for (const auto& rc : checks) {
      j["relations"].push_back({{"name", rc.name},
                                {"nf_zero", rc.nf_zero},
                                {"orthogonal", rc.orthogonal},
                                {"probes", rc.probes}});
      all = all && rc.nf_zero && rc.orthogonal;
    }
    j["pass"] = all;
    out << j.dump(2) << "\n";
  } else {
    const char* sep = cfg.format == "tsv" ? "\t" : "  ";
    out << "relation" << sep << "nf" << sep << "orthogonal" << sep << "probes\n";
    for (const auto& rc : checks) {
      out << rc.name << sep << (rc.nf_zero ? "0" : "NONZERO") << sep
          << (rc.orthogonal ? "ok" : "FAIL") << sep << rc.probes << "\n";
      all = all && rc.nf_zero && rc.orthogonal;
    }
    out << (all ? "# all relations verified\n" : "# FAILURES present\n");
  }
  return all ? 0 : 1;
}

int cmd_appendix(Options& opt, std::ostream& out, std::ostream& err) {
  CommonConfig cfg = common_config(opt, &err);
  int vertices = opt.get_int("vertices", 0);  // 0 = all
  int cap5 = opt.get_int("max-deg", 6);       // prefix bound for 5-vertex rows
  std::map<int, RewriteSystem> systems;
  int pass = 0, total = 0;
  const char* sep = cfg.format == "tsv" ? "\t" : "  ";
  json jrows = json::array();
  for (const auto& row : appendix_catalog()) {
    int n = row.graph.n();
    if (vertices && n != vertices) continue;
    ++total;
    cfg.check_budget();
    int bound = n <= 4 ? row.top_degree + 1 : std::min(row.top_degree + 1, cap5);
    auto it = systems.find(n);
    if (it == systems.end()) {
      int sysdeg = n <= 4 ? 13 : std::max(cap5, 7);
      it = systems.emplace(n, build_or_load(n, sysdeg, cfg.cache_dir, cfg.caps)).first;
    }
    bound = std::min(bound, it->second.max_degree());
    GradedSeries got = sub_series(row.graph, bound, it->second);
    bool ok = true;
    for (int d = 0; d <= bound; ++d)
      if (got.coeff(d) != row.series.coeff(d)) ok = false;
    bool full = bound > row.top_degree;
    if (ok) ++pass;
    if (cfg.format == "json") {
      jrows.push_back({{"id", row.id},
                       {"brackets", row.brackets},
                       {"checked_through", bound},
                       {"full", full},
                       {"match", ok}});
    } else {
      out << row.id << sep << row.brackets << sep << (full ? "full" : "prefix") << ":"
          << bound << sep << (ok ? "match" : "MISMATCH") << "\n";
    }
  }
  if (cfg.format == "json") {
    json j;
    j["schema"] = "fk-appendix-1";
    j["rows"] = jrows;
    j["pass"] = pass;
    j["total"] = total;
    out << j.dump(2) << "\n";
  } else {
    out << "# " << pass << "/" << total << " rows match\n";
  }
  return pass == total ? 0 : 1;
}

int cmd_mcr(Options& opt, std::ostream& out) {
  CommonConfig cfg = common_config(opt);
  Graph g = parse_graph_spec(opt.require("g"));
  Graph eg = parse_edge_list(opt.require("e"));
  if (eg.num_edges() != 1) throw UsageError("--e must be a single edge i-j");
  std::pair<int, int> e = eg.edges()[0];
  int n = opt.get_int("n", std::max(g.n(), eg.n()));
  Graph gn(n, g.edges());
  Graph h;
  if (opt.has_switch("auto-h")) {
    h = gn.edge_union(Graph(n, {e})).complement();
  } else {
    h = Graph(n, parse_edge_list(opt.require("h")).edges());
  }
  int max_deg = opt.get_int("max-deg", 10);
  FreeAlgebra ctx(n);
  McrResult res = algorithm_mcr(ctx, gn, h, e, max_deg, cfg.threads);
  if (cfg.format == "json") {
    json j;
    j["schema"] = "fk-mcr-1";
    j["exact"] = res.exact;
    j["stabilized"] = res.stabilized;
    json degs = json::array();
    for (size_t d = 0; d < res.m_words.size(); ++d) {
      json words = json::array();
      for (const auto& w : res.m_words[d]) words.push_back(render_word(ctx, w));
      degs.push_back({{"degree", d}, {"rank", res.m_words[d].size()}, {"words", words}});
    }
    j["m"] = degs;
    out << j.dump(2) << "\n";
  } else {
    out << "# minimal coset representatives (" << (res.exact ? "exact for n<=5" : "lower bound")
        << ")\n";
    for (size_t d = 0; d < res.m_words.size(); ++d) {
      out << d << ": ";
      for (size_t k = 0; k < res.m_words[d].size(); ++k) {
        if (k) out << " ";
        out << render_word(ctx, res.m_words[d][k]);
      }
      out << "\n";
    }
    if (!res.stabilized) out << "# bound reached before ranks vanished\n";
  }
  return 0;
}

int cmd_pair(Options& opt, std::ostream& out) {
  CommonConfig cfg = common_config(opt);
  int n = opt.get_int("n", 0);
  if (n < 2) throw UsageError("--n is required for pair");
  FreeAlgebra ctx(n);
  Element p = parse_element(ctx, opt.require("p"));
  Element q = parse_element(ctx, opt.require("q"));
  Rat v = pair(ctx, p, q);
  if (cfg.format == "json") {
    json j;
    j["schema"] = "fk-pair-1";
    j["value"] = v.get_str();
    out << j.dump(2) << "\n";
  } else {
    out << v.get_str() << "\n";
  }
  return 0;
}

int cmd_nf(Options& opt, std::ostream& out, std::ostream& err) {
  CommonConfig cfg = common_config(opt, &err);
  int n = opt.get_int("n", 0);
  if (n < 2) throw UsageError("--n is required for nf");
  FreeAlgebra ctx(n);
  Element e = parse_element(ctx, opt.require("elt"));
  int deg = 2;
  for (const auto& t : e.terms()) deg = std::max(deg, static_cast<int>(t.w.size()));
  int max_deg = opt.get_int("max-deg", deg);
  RewriteSystem rs = build_or_load(n, max_deg, cfg.cache_dir, cfg.caps);
  Element nf = rs.normal_form(e);
  if (cfg.format == "json") {
    json j;
    j["schema"] = "fk-nf-1";
    j["normal_form"] = render_element(ctx, nf);
    j["zero"] = nf.is_zero();
    out << j.dump(2) << "\n";
  } else {
    out << render_element(ctx, nf) << "\n";
  }
  return 0;
}

int cmd_weyl(Options& opt, std::ostream& out) {
  CommonConfig cfg = common_config(opt);
  WeylData data = parse_weyl_type(opt.require("type"));
  GradedSeries w = data.poincare();
  GradedSeries c = data.coxeter_charpoly();
  GradedSeries ratio = weyl_ratio(data);
  if (cfg.format == "json") {
    json j;
    j["schema"] = "fk-weyl-1";
    j["type"] = data.type + (data.type.size() == 1 ? std::to_string(data.rank) : "");
    j["group_order"] = data.group_order().get_str();
    j["connection_index"] = c.eval_one().get_str();
    j["ratio"] = ratio.to_bracket_string();
    j["series"] = series_json(ratio);
    j["dim"] = ratio.eval_one().get_str();
    out << j.dump(2) << "\n";
  } else {
    out << "W(t)    = " << w.to_bracket_string() << "  (|W| = " << data.group_order().get_str()
        << ")\n";
    out << "C(t)    = " << c.to_string() << "  (f = " << c.eval_one().get_str() << ")\n";
    out << "W/C     = " << ratio.to_bracket_string() << "  (dim = " << ratio.eval_one().get_str()
        << ", top degree " << ratio.degree() << ")\n";
  }
  return 0;
}

int cmd_affine(Options& opt, std::ostream& out, const std::string& sub) {
  CommonConfig cfg = common_config(opt);
  int n = opt.get_int("n", 3);
  if (sub == "primitives") {
    auto prim = primitive_elements(n);
    GradedSeries expect = primitive_length_series(n);
    std::vector<Rat> hist(expect.degree() + 1, Rat(0));
    json jrows = json::array();
    for (const auto& v : prim) {
      hist[static_cast<size_t>(v.length())] += 1;
      if (cfg.format == "json") {
        json row;
        row["window"] = v.window();
        row["length"] = v.length();
        row["word"] = render_reduced_word(reduced_word(v));
        jrows.push_back(row);
      } else {
        out << render_reduced_word(reduced_word(v)) << "  window (";
        for (size_t k = 0; k < v.window().size(); ++k)
          out << (k ? "," : "") << v.window()[k];
        out << ")  length " << v.length() << "\n";
      }
    }
    bool ok = GradedSeries(std::move(hist)) == expect;
    if (cfg.format == "json") {
      json j;
      j["schema"] = "fk-affine-1";
      j["count"] = prim.size();
      j["elements"] = jrows;
      j["length_series_match"] = ok;
      out << j.dump(2) << "\n";
    } else {
      out << "# " << prim.size() << " primitive elements; length series "
          << (ok ? "matches " : "MISMATCHES ") << expect.to_string() << "\n";
    }
    return ok ? 0 : 1;
  }
  if (sub == "ek" || sub == "rk") {
    int k = opt.get_int("k", 1);
    if (sub == "ek") {
      for (const auto& t : ek_terms(n, k)) {
        out << "lambda (";
        for (size_t q = 0; q < t.lambda.size(); ++q) out << (q ? "," : "") << t.lambda[q];
        out << ") word ";
        for (size_t q = 0; q < t.letters.size(); ++q) out << (q ? "." : "") << t.letters[q];
        out << "\n";
      }
      return 0;
    }
    FreeAlgebra ctx(n);
    out << render_element(ctx, rk_element(ctx, n, k)) << "\n";
    return 0;
  }
  if (sub == "gamma") {
    int k = opt.get_int("k", 1);
    Partition outer = parse_int_list(opt.require("shape"));
    Partition inner;
    if (auto in = opt.get("inner")) inner = parse_int_list(*in);
    auto letters = gamma_word(outer, inner, k, n);
    for (size_t q = 0; q < letters.size(); ++q) out << (q ? "." : "") << letters[q];
    out << "\n";
    return 0;
  }
  throw UsageError("unknown affine subcommand '" + sub + "'");
}

const char* kUsage =
    "usage: fk <command> [flags]\n"
    "commands:\n"
    "  hilbert   --graph SPEC [--max-deg D] [--expect BRACKETS] [--gram-max-deg G]\n"
    "  relcheck  SUITE --n N          (braid|claw|cyclic|sextic|a3tilde|rk)\n"
    "  appendix  [--vertices K] [--max-deg D]\n"
    "  mcr       --g SPEC --e i-j (--h SPEC | --auto-h) [--max-deg D]\n"
    "  pair      --n N --p ELT --q ELT\n"
    "  nf        --n N --elt ELT [--max-deg D]\n"
    "  weyl      --type A3|D4|E6|...\n"
    "  affine    primitives|ek|rk|gamma --n N [--k K] [--shape p1,p2,...]\n"
    "common flags: --format text|json|tsv --threads T --cache-dir DIR\n"
    "              --budget SECONDS --caps rules,queue,nodes --progress\n";

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) {
      err << kUsage;
      return 3;
    }
    std::string cmd = args[0];
    Options opt(std::vector<std::string>(args.begin() + 1, args.end()));
    if (cmd == "hilbert") return cmd_hilbert(opt, out, err);
    if (cmd == "relcheck") {
      auto pos = opt.positional();
      if (pos.empty()) throw UsageError("relcheck needs a suite name");
      return cmd_relcheck(opt, out, err, pos[0]);
    }
    if (cmd == "appendix") return cmd_appendix(opt, out, err);
    if (cmd == "mcr") return cmd_mcr(opt, out);
    if (cmd == "pair") return cmd_pair(opt, out);
    if (cmd == "nf") return cmd_nf(opt, out, err);
    if (cmd == "weyl") return cmd_weyl(opt, out);
    if (cmd == "affine") {
      auto pos = opt.positional();
      if (pos.empty()) throw UsageError("affine needs a subcommand");
      return cmd_affine(opt, out, pos[0]);
    }
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      return 0;
    }
    throw UsageError("unknown command '" + cmd + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << kUsage;
    return 3;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fk
