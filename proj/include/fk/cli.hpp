#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fk {

// Exit codes: 0 pass, 1 check failure, 2 resource cap exceeded, 3 usage
// error. Flags may also be supplied via environment variables (--max-deg
// becomes FK_MAX_DEG, and so on).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses a CLI graph spec: "A:3", "D:5", "cycle:4", "star:5", "complete:6",
// "complete_multipartite:2,3", "E6", "Dtilde:4", an edge list "1-2,2-3", or
// a graph6 string (prefix "g6:" forces graph6).
class Graph;
Graph parse_graph_spec(const std::string& spec);

// Relation suites used by `relcheck` and the acceptance tests. Each
// relation is checked two ways: its normal form vanishes, and it pairs to
// zero against every word of the same degree (mismatched S_n-degrees pair
// to zero identically, so probes are enumerated within the matching
// S_n-degree class).
struct RelationCheck {
  std::string name;
  bool nf_zero = false;
  bool orthogonal = false;
  long long probes = 0;
};

class RewriteSystem;
std::vector<RelationCheck> run_relation_suite(const std::string& suite, int n,
                                              const RewriteSystem& rs, int threads = 1);

}  // namespace fk
