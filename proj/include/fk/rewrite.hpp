#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fk/freealg.hpp"
#include "fk/graph.hpp"
#include "fk/rational.hpp"
#include "fk/series.hpp"

namespace fk {

struct RewriteCaps {
  size_t max_rules = 2'000'000;
  size_t max_queue = 8'000'000;
  // Guard for word-tree searches (top-word lookup).
  size_t max_search_nodes = 50'000'000;
  // Wall-clock deadline, checked at degree boundaries during completion.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Called after each completed degree.
  std::function<void(int degree, size_t rules)> progress;
};

struct Rule {
  Word lead;      // deglex-maximal word of the relation
  Element tail;   // lead rewrites to tail; every tail word < lead
};

namespace detail {
struct SvHash {
  using is_transparent = void;
  size_t operator()(std::string_view s) const { return std::hash<std::string_view>()(s); }
  size_t operator()(const std::string& s) const { return std::hash<std::string_view>()(s); }
};
struct SvEq {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return a == b; }
};
}  // namespace detail

// Degree-truncated reduced rewrite system for the defining ideal of E_n:
// all S-obstructions of degree <= max_degree reduce to zero, leading words
// are subword-free, and normal forms of elements of degree <= max_degree
// are canonical.
class RewriteSystem {
 public:
  RewriteSystem(int n, int max_degree);

  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  const FreeAlgebra& ctx() const { return ctx_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // True if some rule's lead occurs in w as a subword.
  bool reducible(const Word& w) const;
  Element normal_form(const Element& e) const;
  Element normal_form_word(const Word& w, const Rat& c = 1) const;
  bool is_zero(const Element& e) const { return normal_form(e).is_zero(); }

  // Number of normal words of degree d (= dim E_n^d for d <= max_degree),
  // counted by walking the lead-avoidance automaton.
  Int graded_dim_full(int d) const;
  // Explicit normal words of degree d, deglex order (throws ResourceError
  // beyond the cap).
  std::vector<Word> normal_words(int d, size_t cap = 10'000'000) const;

  void add_rule(Word lead, Element tail);  // used by the builder/loader
  void rebuild_index();

  // Versioned text serialization with a checksum line.
  void save(std::ostream& os) const;
  static RewriteSystem load(std::istream& is);

 private:
  friend RewriteSystem build_rewrite_system(int, int, const RewriteCaps&,
                                            const std::vector<Element>&);
  int n_;
  int max_degree_;
  FreeAlgebra ctx_;
  std::vector<Rule> rules_;
  // lead word -> rule index (transparent hash: lookups take string_view)
  std::unordered_map<std::string, int, detail::SvHash, detail::SvEq> lead_index_;
  std::vector<int> lead_lengths_;  // distinct lengths, ascending

  // Lead-avoidance automaton (built lazily for counting).
  mutable bool automaton_ready_ = false;
  mutable std::vector<std::vector<int32_t>> goto_;  // state x letter -> state (-1 dead)
  void build_automaton() const;
};

// Defining relations of E_n: squares, disjoint commutators, and the two
// independent three-term relations per vertex triple.
std::vector<Element> quadratic_relations(int n);

// Truncated completion; deterministic for fixed inputs. extra_relations
// are adjoined to the defining ideal (each must be homogeneous in degree,
// for experiments with quotients).
RewriteSystem build_rewrite_system(int n, int max_degree,
                                   const RewriteCaps& caps = RewriteCaps(),
                                   const std::vector<Element>& extra_relations = {});

// Re-checks that every overlap of rule leads with obstruction degree
// <= max_degree reduces to zero. Returns the number of overlaps checked.
size_t audit_confluence(const RewriteSystem& rs);

// ------- subalgebra dimensions -------

// Degree-incremental basis of E_G inside E_n: basis words over the edges of
// g per degree, together with the normal forms of their products. Built by
// spanning E_G^{d+1} with (edge generator) * (degree-d basis) products; the
// spanning set is processed in deglex order of the product words and ranked
// with exact elimination, blocked by S_n-degree.
class SubalgebraBasis {
 public:
  SubalgebraBasis(const Graph& g, const RewriteSystem& rs);

  const Graph& graph() const { return g_; }
  // Extends the chain through degree d (d <= rs.max_degree).
  void extend_to(int d);
  int computed_degree() const { return static_cast<int>(basis_words_.size()) - 1; }
  const std::vector<Word>& basis_words(int d) const { return basis_words_[d]; }
  const std::vector<Element>& basis_forms(int d) const { return basis_forms_[d]; }
  int dim(int d) { extend_to(d); return static_cast<int>(basis_words_[d].size()); }

 private:
  Graph g_;
  const RewriteSystem& rs_;
  std::vector<int> edge_ids_;
  std::vector<std::vector<Word>> basis_words_;
  std::vector<std::vector<Element>> basis_forms_;
};

// dim E_G^d, computed through the incremental basis.
Int graded_dim_sub(const Graph& g, int d, const RewriteSystem& rs);

// Hilbert profile of E_G for degrees 0..max_d.
std::vector<Int> sub_profile(const Graph& g, int max_d, const RewriteSystem& rs);
GradedSeries sub_series(const Graph& g, int max_d, const RewriteSystem& rs);

struct MonomialBasis {
  std::vector<std::vector<Word>> by_degree;
  int top_degree = 0;
  Word top_word;  // lexicographically minimal spanning word of the top degree
};

// Requires E_G to close out within the truncation bound (a zero dimension
// at top_degree+1); throws ResourceError otherwise.
MonomialBasis monomial_basis_sub(const Graph& g, const RewriteSystem& rs,
                                 const RewriteCaps& caps = RewriteCaps());

// Subgraph of g on the edges e with normal_form(x_e * w) == 0.
Graph descent_left(const Element& w, const Graph& g, const RewriteSystem& rs);
Graph descent_right(const Element& w, const Graph& g, const RewriteSystem& rs);

// Cache-file name for a system, keyed by (n, max_degree, format version).
std::string cache_file_name(int n, int max_degree);
// Loads a cached system if present and valid, else builds and saves it.
// cache_dir empty disables caching.
RewriteSystem build_or_load(int n, int max_degree, const std::string& cache_dir,
                            const RewriteCaps& caps = RewriteCaps());

}  // namespace fk
