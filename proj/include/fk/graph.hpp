#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fk {

// Simple graph on vertices 1..n. Edges are stored canonically as pairs
// (i,j) with i<j, sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int i, int j) const;
  int degree(int v) const;

  Graph complement() const;
  // Union of edge sets (same vertex count required).
  Graph edge_union(const Graph& other) const;
  bool is_subgraph_of(const Graph& g) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Graph with a direction assigned to every edge. Directions are stored in
// the same order as the underlying edge list.
struct OrientedGraph {
  Graph underlying;
  std::vector<std::pair<int, int>> directions;  // (tail, head) per edge
};

// Parses either an edge list "1-2,2-3" or a graph6 string (auto-detected:
// edge lists start with a digit). Throws std::invalid_argument on bad input.
Graph parse_graph(const std::string& text);

Graph parse_edge_list(const std::string& text);
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);
std::string encode_edge_list(const Graph& g);

// Named constructors. Families:
//   A:n           path on n vertices (n>=1)
//   D:n           two prongs 1,2 at hub 3, then chain 3-4-...-n (n>=3)
//   E6,E7,E8      path 1..(n-1) with branch vertex n attached to 3
//   cycle:n       cycle 1-2-...-n-1 (n>=3); edge k joins k+1 and k+2 (mod n)
//   star:n        K_{1,n-1} centered at vertex 1
//   complete:n    K_n
//   complete_multipartite:p1,p2,...   consecutive vertex blocks
//   Dtilde:n      affine D diagram on n+1 vertices (Dtilde:3 = 4-cycle)
//   E6tilde,E7tilde   affine E diagrams
Graph named_graph(const std::string& name, const std::vector<int>& params);

// Directs the edges of a disjoint union of paths and cycles head-to-tail so
// that every vertex has indegree and outdegree at most one. Throws if some
// vertex has degree >= 3.
OrientedGraph orient_for_theta(const Graph& g);

}  // namespace fk
