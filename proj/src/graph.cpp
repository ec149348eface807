#include "fk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fk {

namespace {

std::pair<int, int> canon(int i, int j) {
  if (i == j) throw std::invalid_argument("loop edge " + std::to_string(i));
  if (i > j) std::swap(i, j);
  return {i, j};
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges) {
    e = canon(e.first, e.second);
    if (e.first < 1 || e.second > n)
      throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Graph::has_edge(int i, int j) const {
  if (i == j) return false;
  auto e = canon(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.first == v || e.second == v) ++d;
  return d;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!has_edge(i, j)) edges.emplace_back(i, j);
  return Graph(n_, std::move(edges));
}

Graph Graph::edge_union(const Graph& other) const {
  if (n_ != other.n_) throw std::invalid_argument("vertex count mismatch");
  auto edges = edges_;
  edges.insert(edges.end(), other.edges_.begin(), other.edges_.end());
  return Graph(n_, std::move(edges));
}

bool Graph::is_subgraph_of(const Graph& g) const {
  if (n_ != g.n_) return false;
  for (const auto& e : edges_)
    if (!g.has_edge(e.first, e.second)) return false;
  return true;
}

Graph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  size_t pos = 0;
  auto read_int = [&]() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected integer in edge list at " +
                                                  std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  };
  while (pos < text.size()) {
    int i = read_int();
    if (pos >= text.size() || text[pos] != '-')
      throw std::invalid_argument("expected '-' in edge list");
    ++pos;
    int j = read_int();
    if (i < 1 || j < 1) throw std::invalid_argument("vertex labels are 1-based");
    if (i == j) throw std::invalid_argument("loop edge " + std::to_string(i));
    edges.emplace_back(i, j);
    n = std::max({n, i, j});
    if (pos < text.size()) {
      if (text[pos] != ',') throw std::invalid_argument("expected ',' in edge list");
      ++pos;
    }
  }
  if (edges.empty()) throw std::invalid_argument("empty edge list");
  return Graph(n, std::move(edges));
}

Graph parse_graph6(const std::string& text) {
  // Bytes are printable ASCII 63..126, six data bits each, header then the
  // upper triangle column-major.
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  size_t pos = 0;
  auto byte = [&](size_t k) -> int {
    if (k >= text.size()) throw std::invalid_argument("truncated graph6 string");
    int c = static_cast<unsigned char>(text[k]);
    if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 byte");
    return c - 63;
  };
  long long n = 0;
  if (text[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (text.size() > 1 && text[1] != '~') {
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = 0;
    for (int k = 2; k < 8; ++k) n = (n << 6) | byte(k);
    pos = 8;
  }
  if (n > 100000) throw std::invalid_argument("graph6 order too large");
  std::vector<std::pair<int, int>> edges;
  int bits = 0, acc = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      if (bits == 0) {
        acc = byte(pos++);
        bits = 6;
      }
      --bits;
      if ((acc >> bits) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != text.size()) throw std::invalid_argument("trailing graph6 bytes");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  std::string out;
  long long n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for graph6 encoder");
  }
  int bits = 0, acc = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

std::string encode_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(e.first) + "-" + std::to_string(e.second);
  }
  return out;
}

Graph parse_graph(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty graph spec");
  if (std::isdigit(static_cast<unsigned char>(text[0]))) return parse_edge_list(text);
  return parse_graph6(text);
}

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph e_family(int n) {
  // Path 1..n-1 with the branch vertex n attached to vertex 3.
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(3, n);
  return Graph(n, std::move(edges));
}

}  // namespace

Graph named_graph(const std::string& name, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + name + "' takes " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (name == "A") {
    need(1);
    int n = params[0];
    if (n < 1) throw std::invalid_argument("A:n needs n >= 1");
    return path_graph(n);
  }
  if (name == "D") {
    need(1);
    int n = params[0];
    if (n < 3) throw std::invalid_argument("D:n needs n >= 3");
    std::vector<std::pair<int, int>> edges = {{1, 3}, {2, 3}};
    for (int v = 3; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
  }
  if (name == "E6" || name == "E7" || name == "E8") {
    need(0);
    return e_family(name == "E6" ? 6 : name == "E7" ? 7 : 8);
  }
  if (name == "cycle") {
    need(1);
    int n = params[0];
    if (n < 3) throw std::invalid_argument("cycle:n needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
  }
  if (name == "star") {
    need(1);
    int n = params[0];
    if (n < 2) throw std::invalid_argument("star:n needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
    return Graph(n, std::move(edges));
  }
  if (name == "complete") {
    need(1);
    int n = params[0];
    if (n < 1) throw std::invalid_argument("complete:n needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
  }
  if (name == "complete_multipartite") {
    if (params.empty()) throw std::invalid_argument("complete_multipartite needs part sizes");
    int n = 0;
    std::vector<int> part_of;
    for (size_t p = 0; p < params.size(); ++p) {
      if (params[p] < 1) throw std::invalid_argument("part sizes must be positive");
      for (int k = 0; k < params[p]; ++k) part_of.push_back(static_cast<int>(p));
      n += params[p];
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (part_of[i - 1] != part_of[j - 1]) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
  }
  if (name == "Dtilde") {
    need(1);
    int n = params[0];
    if (n < 3) throw std::invalid_argument("Dtilde:n needs n >= 3");
    if (n == 3) return named_graph("cycle", {4});
    // Prongs 1,2 at vertex 3; chain 3..n-1; prongs n, n+1 at vertex n-1.
    std::vector<std::pair<int, int>> edges = {{1, 3}, {2, 3}};
    for (int v = 3; v < n - 1; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, n);
    edges.emplace_back(n - 1, n + 1);
    return Graph(n + 1, std::move(edges));
  }
  if (name == "E6tilde") {
    need(0);
    // E6 with the branch extended by one vertex.
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 5; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(3, 6);
    edges.emplace_back(6, 7);
    return Graph(7, std::move(edges));
  }
  if (name == "E7tilde") {
    need(0);
    // Path of 7 vertices with the branch at the middle vertex.
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 7; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(4, 8);
    return Graph(8, std::move(edges));
  }
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

OrientedGraph orient_for_theta(const Graph& g) {
  int n = g.n();
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) >= 3)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " has degree >= 3; graph is not a union of paths and cycles");
  // Walk each component from an endpoint (or anywhere on a cycle),
  // directing edges head-to-tail along the walk.
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& e : g.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::map<std::pair<int, int>, std::pair<int, int>> dir;  // canon edge -> (tail, head)
  std::vector<char> visited(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (visited[start] || adj[start].empty()) continue;
    int s = start;
    if (adj[start].size() == 2) {
      // Possibly mid-path: find an endpoint if one exists.
      int prev = 0, cur = start;
      for (int steps = 0; steps <= n; ++steps) {
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) { next = w; break; }
        if (next == -1 || adj[cur].size() == 1) break;
        if (next == start) break;  // cycle
        prev = cur;
        cur = next;
        if (adj[cur].size() == 1) break;
      }
      s = cur;
    }
    int prev = 0, cur = s;
    visited[cur] = 1;
    for (;;) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev && !(w == s && prev == 0 && adj[s].size() == 1)) {
          if (dir.count(canon(cur, w))) continue;
          next = w;
          break;
        }
      if (next == -1) break;
      dir[canon(cur, next)] = {cur, next};
      prev = cur;
      cur = next;
      visited[cur] = 1;
      if (cur == s) break;
    }
  }
  OrientedGraph og;
  og.underlying = g;
  og.directions.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    auto it = dir.find(e);
    if (it == dir.end())
      throw std::logic_error("orientation walk missed an edge");
    og.directions.push_back(it->second);
  }
  return og;
}

}  // namespace fk
