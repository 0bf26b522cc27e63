#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "flis/configuration.hpp"
#include "flis/errors.hpp"
#include "flis/graph.hpp"
#include "flis/leaf_function.hpp"

namespace flis {

/// Order of the connected component containing the green subtree, with red
/// vertices treated as deleted.
inline int component_size(const Configuration& c) {
  auto start = c.first_green();
  if (!start) throw NoGreenVertex("component_size: no green vertex");
  const Graph& g = c.graph();
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack{*start};
  seen[*start] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(u)) {
      if (seen[w] || c.color(w) == Color::Red) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count;
}

/// Everything one optimistic-growth sweep produces, shared by all target
/// sizes n'. The available vertices (yellow, blue, and green-tree leaves) are
/// layered by their red-free distance from the inner green vertices; each
/// round d picks the highest-degree available vertex within distance d and
/// credits deg-1 vertices / deg-2 leaves.
struct PotentialProfile {
  int green_size = 0;
  int green_leaves = 0;
  int inner_count = 0;
  int completion_yellows = 0;  // yellows adjacent to an inner vertex
  int component = 0;
  std::vector<int> pick_degrees;  // red-free degrees, in pick order

  /// Upper bound on leaves reachable at exactly n_prime green vertices.
  LeafCount evaluate(int n_prime) const {
    if (n_prime > component) return kImpossible;
    if (green_size + completion_yellows >= n_prime)
      return green_leaves + (n_prime - green_size);
    int n = green_size + completion_yellows;
    int l = green_leaves + completion_yellows;
    for (int deg : pick_degrees) {
      if (n >= n_prime) break;
      if (n + deg - 1 <= n_prime) {
        n += deg - 1;
        l += deg - 2;
      } else {
        l += (n_prime - n) - 1;
        n = n_prime;
      }
    }
    return l < 0 ? kImpossible : l;
  }
};

/// Reusable scratch space for profile construction and the pruning test.
/// Not thread-safe; give each worker its own evaluator.
class PotentialEvaluator {
 public:
  /// Builds the sweep for a configuration with >= 3 green vertices.
  const PotentialProfile& build(const Configuration& c) {
    const int n = c.green_count();
    if (n < 3) throw TooFewGreens("leaf potential needs >= 3 green vertices");
    const Graph& g = c.graph();
    const VertexId order = g.order();
    ensure(order);
    ++generation_;

    profile_.green_size = n;
    profile_.green_leaves = c.green_leaf_count();
    profile_.completion_yellows = c.inner_yellow_count();
    profile_.pick_degrees.clear();

    // component of the green tree, reds removed
    queue_.clear();
    const VertexId start = *c.first_green();
    stamp_[start] = generation_;
    queue_.push_back(start);
    inner_.clear();
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const VertexId u = queue_[head];
      if (c.is_inner(u)) inner_.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (stamp_[w] == generation_ || c.color(w) == Color::Red) continue;
        stamp_[w] = generation_;
        queue_.push_back(w);
      }
    }
    profile_.component = static_cast<int>(queue_.size());
    profile_.inner_count = static_cast<int>(inner_.size());

    // layer the available vertices by distance from the inner set
    ++generation_;
    bfs_.clear();
    for (VertexId u : inner_) {
      stamp_[u] = generation_;
      dist_[u] = 0;
      bfs_.push_back(u);
    }
    int max_dist = 0;
    layers_flat_.clear();
    for (std::size_t head = 0; head < bfs_.size(); ++head) {
      const VertexId u = bfs_[head];
      for (VertexId w : g.neighbors(u)) {
        if (stamp_[w] == generation_ || c.color(w) == Color::Red) continue;
        stamp_[w] = generation_;
        dist_[w] = dist_[u] + 1;
        bfs_.push_back(w);
        const Color cw = c.color(w);
        const bool available =
            cw == Color::Yellow || cw == Color::Blue ||
            (cw == Color::Green && c.green_degree(w) == 1);
        if (available) {
          int red_free_deg = 0;
          for (VertexId x : g.neighbors(w)) red_free_deg += c.color(x) != Color::Red;
          layers_flat_.push_back({dist_[w], red_free_deg, w});
          max_dist = std::max(max_dist, dist_[w]);
        }
      }
    }
    std::sort(layers_flat_.begin(), layers_flat_.end(),
              [](const Item& a, const Item& b) { return a.dist < b.dist; });

    // greedy rounds: one pick per round, horizon d grows by one each time.
    // Stop once the optimistic size reaches |K|: no target n' <= |K| ever
    // consumes a later pick.
    heap_.clear();
    std::size_t next = 0;
    int optimistic_size = n + profile_.completion_yellows;
    for (int d = 1; optimistic_size < profile_.component; ++d) {
      while (next < layers_flat_.size() && layers_flat_[next].dist <= d) {
        heap_.emplace_back(layers_flat_[next].degree, -layers_flat_[next].vertex);
        std::push_heap(heap_.begin(), heap_.end());
        ++next;
      }
      if (heap_.empty()) break;  // no available vertex within distance d
      std::pop_heap(heap_.begin(), heap_.end());
      profile_.pick_degrees.push_back(heap_.back().first);
      optimistic_size += heap_.back().first - 1;
      heap_.pop_back();
    }
    return profile_;
  }

  /// True iff for every n' in [n, |K|] the potential does not exceed best[n'],
  /// i.e. no extension of this configuration can improve any entry.
  bool prunable(const Configuration& c, const LeafFunction& best) {
    const int n = c.green_count();
    if (n < 3) return false;
    const int l = c.green_leaf_count();
    const int y = c.inner_yellow_count();
    // completion segment first: it needs no graph traversal
    for (int np = n; np <= n + y; ++np)
      if (l + (np - n) > best[static_cast<std::size_t>(np)]) return false;
    build(c);
    int cur_n = n + y;
    int cur_l = l + y;
    std::size_t pick = 0;
    const auto& degs = profile_.pick_degrees;
    for (int np = n + y + 1; np <= profile_.component; ++np) {
      while (pick < degs.size() && cur_n < np && cur_n + degs[pick] - 1 <= np) {
        cur_n += degs[pick] - 1;
        cur_l += degs[pick] - 2;
        ++pick;
      }
      int pot;
      if (cur_n >= np) {
        pot = cur_l;  // landed exactly: cur_n never overshoots np
      } else if (pick < degs.size()) {
        pot = cur_l + (np - cur_n) - 1;  // capped pick, not consumed
      } else {
        pot = cur_l;  // available vertices exhausted
      }
      if (pot > best[static_cast<std::size_t>(np)]) return false;
    }
    return true;
  }

 private:
  struct Item {
    int dist;
    int degree;
    VertexId vertex;
  };

  void ensure(VertexId order) {
    if (stamp_.size() < static_cast<std::size_t>(order)) {
      stamp_.assign(order, 0);
      dist_.assign(order, 0);
    }
  }

  PotentialProfile profile_;
  std::vector<int> stamp_, dist_;
  int generation_ = 0;
  std::vector<VertexId> queue_, bfs_, inner_;
  std::vector<Item> layers_flat_;
  std::vector<std::pair<int, int>> heap_;  // (degree, -vertex): max-degree, min-index
};

/// One-shot profile of a configuration (>= 3 greens required).
inline PotentialProfile potential_profile(const Configuration& c) {
  PotentialEvaluator ev;
  return ev.build(c);
}

/// Algorithm value for a single target size. Requires green count n >= 3 and
/// n <= n_prime; kImpossible when n_prime exceeds the component order.
inline LeafCount leaf_potential(const Configuration& c, int n_prime) {
  PotentialEvaluator ev;
  const PotentialProfile& p = ev.build(c);
  if (n_prime < p.green_size) throw InvalidParams("leaf_potential: n' below green count");
  return p.evaluate(n_prime);
}

/// Pruning test against the best values found so far.
inline bool prunable(const Configuration& c, const LeafFunction& best) {
  PotentialEvaluator ev;
  return ev.prunable(c, best);
}

}  // namespace flis
