#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flis/errors.hpp"

namespace flis {

/// Dense 0-based vertex index.
using VertexId = std::int32_t;

/// Immutable simple undirected graph with sorted adjacency lists (CSR layout).
/// Safe to share across threads after construction.
class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(VertexId n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0) throw InvalidParams("negative vertex count");
  }

  static Graph from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges) {
    Graph g(n);
    std::vector<std::pair<VertexId, VertexId>> sorted;
    sorted.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidParams("edge endpoint out of range");
      if (u == v) throw InvalidParams("self-loop");
      if (u > v) std::swap(u, v);
      sorted.emplace_back(u, v);
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidParams("duplicate edge");
    g.build(sorted);
    return g;
  }

  /// Parses the edge-list text format: header "n m", then m lines "u v".
  /// Lines starting with '#' and blank lines are ignored. Rejects bad tokens,
  /// out-of-range endpoints, self-loops and duplicate edges.
  static Graph from_edge_list(std::istream& in) {
    std::vector<long long> tokens;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view sv(line);
      while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r'))
        sv.remove_prefix(1);
      if (sv.empty() || sv.front() == '#') continue;
      std::istringstream ls{std::string(sv)};
      std::string tok;
      while (ls >> tok) {
        long long v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
          throw ParseError("line " + std::to_string(line_no) + ": bad token '" + tok + "'");
        tokens.push_back(v);
      }
    }
    if (tokens.size() < 2) throw ParseError("missing 'n m' header");
    const long long n = tokens[0], m = tokens[1];
    if (n < 0 || m < 0) throw ParseError("negative count in header");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
      throw ParseError("expected " + std::to_string(2 * m) + " edge endpoints, got " +
                       std::to_string(tokens.size() - 2));
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
      const long long u = tokens[2 + 2 * e], v = tokens[3 + 2 * e];
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex out of range in edge");
      if (u == v) throw ParseError("self-loop");
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    try {
      return from_edges(static_cast<VertexId>(n), edges);
    } catch (const InvalidParams& e) {
      throw ParseError(e.what());
    }
  }

  static Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_edge_list(in);
  }

  VertexId order() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.size()) / 2; }

  std::span<const VertexId> neighbors(VertexId u) const {
    return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
  }

  VertexId degree(VertexId u) const { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges as sorted (u,v) pairs with u < v.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void write_edge_list(std::ostream& out) const {
    out << n_ << ' ' << edge_count() << '\n';
    for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
  }

  std::string to_edge_list() const {
    std::ostringstream out;
    write_edge_list(out);
    return out.str();
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    VertexId count = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n_;
  }

  bool is_tree() const { return edge_count() == n_ - 1 && is_connected(); }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && offsets_ == o.offsets_ && adj_ == o.adj_;
  }

 private:
  void build(const std::vector<std::pair<VertexId, VertexId>>& sorted_edges) {
    std::vector<std::int32_t> deg(n_, 0);
    for (auto [u, v] : sorted_edges) {
      ++deg[u];
      ++deg[v];
    }
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (VertexId u = 0; u < n_; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
    adj_.resize(sorted_edges.size() * 2);
    std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : sorted_edges) {
      adj_[fill[u]++] = v;
      adj_[fill[v]++] = u;
    }
    for (VertexId u = 0; u < n_; ++u)
      std::sort(adj_.begin() + offsets_[u], adj_.begin() + offsets_[u + 1]);
  }

  VertexId n_ = 0;
  std::vector<std::int32_t> offsets_;
  std::vector<VertexId> adj_;
};

/// True iff the subgraph induced by u_set is connected and acyclic.
/// The empty set and singletons count as trees.
inline bool is_induced_subtree(const Graph& g, std::span<const VertexId> u_set) {
  if (u_set.empty()) return true;
  std::vector<char> in_set(g.order(), 0);
  for (VertexId v : u_set) {
    if (v < 0 || v >= g.order()) throw InvalidParams("vertex out of range");
    if (in_set[v]) throw InvalidParams("duplicate vertex in set");
    in_set[v] = 1;
  }
  std::int64_t induced_edges = 0;
  for (VertexId v : u_set)
    for (VertexId w : g.neighbors(v))
      if (in_set[w]) ++induced_edges;
  induced_edges /= 2;
  if (induced_edges != static_cast<std::int64_t>(u_set.size()) - 1) return false;
  // connectivity within the set
  std::vector<VertexId> stack{u_set.front()};
  std::vector<char> seen(g.order(), 0);
  seen[u_set.front()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u))
      if (in_set[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == u_set.size();
}

inline bool is_induced_subtree(const Graph& g, const std::vector<VertexId>& u_set) {
  return is_induced_subtree(g, std::span<const VertexId>(u_set));
}

/// Number of degree-1 vertices of the tree induced by u_set.
/// A single vertex is not a leaf; both endpoints of a single edge are.
inline int leaf_count(const Graph& g, std::span<const VertexId> u_set) {
  if (!is_induced_subtree(g, u_set)) throw NotATree("vertex set does not induce a tree");
  if (u_set.size() <= 1) return 0;
  std::vector<char> in_set(g.order(), 0);
  for (VertexId v : u_set) in_set[v] = 1;
  int leaves = 0;
  for (VertexId v : u_set) {
    int d = 0;
    for (VertexId w : g.neighbors(v)) d += in_set[w];
    leaves += (d == 1);
  }
  return leaves;
}

inline int leaf_count(const Graph& g, const std::vector<VertexId>& u_set) {
  return leaf_count(g, std::span<const VertexId>(u_set));
}

/// An instance of the "induced subtree with i vertices and ell leaves" decision problem.
struct LISInstance {
  Graph graph;
  int i = 0;
  int ell = 0;
};

/// Independent-Set -> LIS reduction: add a universal vertex (index n) adjacent
/// to every vertex of g; asking for an independent set of size k becomes asking
/// for an induced subtree with k+1 vertices and k leaves.
inline LISInstance reduce_independent_set(const Graph& g, int k) {
  if (k < 0) throw InvalidParams("negative independent-set size");
  const VertexId n = g.order();
  std::vector<std::pair<VertexId, VertexId>> edges = g.edges();
  edges.reserve(edges.size() + static_cast<std::size_t>(n));
  for (VertexId u = 0; u < n; ++u) edges.emplace_back(u, n);
  return LISInstance{Graph::from_edges(n + 1, edges), k + 1, k};
}

}  // namespace flis
