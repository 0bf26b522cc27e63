#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "flis/configuration.hpp"
#include "flis/errors.hpp"
#include "flis/graph.hpp"
#include "flis/leaf_function.hpp"

namespace flis {
namespace oracle {

// Ground truth by exhaustion. Everything here iterates all 2^n vertex subsets
// as bitmasks, so the guards are hard limits, not suggestions.

inline constexpr VertexId kMaxBruteForceOrder = 20;

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId w : g.neighbors(u)) adj[u] |= std::uint32_t{1} << w;
  return adj;
}

/// Tree test on a subset bitmask: connected with exactly |S|-1 induced edges.
inline bool subset_induces_tree(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  const int size = std::popcount(mask);
  if (size <= 1) return true;
  int edges = 0;
  for (std::uint32_t m = mask; m;) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    edges += std::popcount(adj[v] & mask);
  }
  edges /= 2;
  if (edges != size - 1) return false;
  std::uint32_t frontier = mask & (~mask + 1);  // lowest set bit
  std::uint32_t reached = frontier;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      next |= adj[v] & mask & ~reached;
    }
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

inline int subset_leaf_count(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  if (std::popcount(mask) <= 1) return 0;
  int leaves = 0;
  for (std::uint32_t m = mask; m;) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    leaves += std::popcount(adj[v] & mask) == 1;
  }
  return leaves;
}

/// Leaf function by iterating every vertex subset.
inline LeafFunction leaf_function_bruteforce(const Graph& g) {
  if (g.order() > kMaxBruteForceOrder)
    throw TooLarge("leaf_function_bruteforce: graph order exceeds " +
                   std::to_string(kMaxBruteForceOrder));
  const auto adj = adjacency_masks(g);
  LeafFunction lf = LeafFunction::all_impossible(static_cast<std::size_t>(g.order()));
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto m32 = static_cast<std::uint32_t>(mask);
    if (!subset_induces_tree(adj, m32)) continue;
    const int size = std::popcount(m32);
    lf[static_cast<std::size_t>(size)] =
        std::max(lf[static_cast<std::size_t>(size)], subset_leaf_count(adj, m32));
  }
  return lf;
}

inline std::uint64_t count_induced_subtrees_bruteforce(const Graph& g) {
  if (g.order() > kMaxBruteForceOrder)
    throw TooLarge("count_induced_subtrees_bruteforce: graph order exceeds " +
                   std::to_string(kMaxBruteForceOrder));
  const auto adj = adjacency_masks(g);
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    count += subset_induces_tree(adj, static_cast<std::uint32_t>(mask));
  return count;
}

/// True iff some k vertices are pairwise non-adjacent. Size 0 is always yes.
inline bool has_independent_set(const Graph& g, int k) {
  if (g.order() > kMaxBruteForceOrder)
    throw TooLarge("has_independent_set: graph order exceeds " +
                   std::to_string(kMaxBruteForceOrder));
  if (k < 0) throw InvalidParams("has_independent_set: negative k");
  if (k == 0) return true;
  if (k > g.order()) return false;
  const auto adj = adjacency_masks(g);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto m32 = static_cast<std::uint32_t>(mask);
    if (std::popcount(m32) != k) continue;
    bool independent = true;
    for (std::uint32_t m = m32; m && independent;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      independent = (adj[v] & m32) == 0;
    }
    if (independent) return true;
  }
  return false;
}

namespace detail {

inline LeafCount extend_exhaustively(Configuration& c, int n_prime) {
  if (c.green_count() == n_prime) return c.green_leaf_count();
  const auto u = c.vertex_to_add();
  if (!u) return kImpossible;
  LeafCount best = kImpossible;
  c.add_to_subtree(*u);
  best = std::max(best, extend_exhaustively(c, n_prime));
  c.undo();
  c.exclude_vertex(*u);
  best = std::max(best, extend_exhaustively(c, n_prime));
  c.undo();
  return best;
}

inline int red_free_component(const Configuration& c) {
  auto start = c.first_green();
  if (!start) return c.graph().order();  // conservative guard with no tree yet
  const Graph& g = c.graph();
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack{*start};
  seen[*start] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u))
      if (!seen[w] && c.color(w) != Color::Red) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count;
}

}  // namespace detail

inline constexpr int kMaxExtensionComponent = 15;

/// Max leaves over all include/exclude extensions of c to exactly n_prime
/// green vertices; kImpossible when no extension reaches that size.
inline LeafCount max_leaves_over_extensions(const Configuration& c, int n_prime) {
  if (detail::red_free_component(c) > kMaxExtensionComponent)
    throw TooLarge("max_leaves_over_extensions: component exceeds " +
                   std::to_string(kMaxExtensionComponent));
  if (n_prime < c.green_count()) return kImpossible;
  Configuration scratch = c;
  return detail::extend_exhaustively(scratch, n_prime);
}

}  // namespace oracle
}  // namespace flis
