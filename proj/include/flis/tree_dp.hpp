#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flis/errors.hpp"
#include "flis/graph.hpp"
#include "flis/leaf_function.hpp"

namespace flis {

/// Directed edge tail->head naming the subtree rooted at head that hangs away
/// from tail (delete edge {tail,head}, keep head's side, root it at head).
struct Arc {
  VertexId tail;
  VertexId head;
  bool operator==(const Arc&) const = default;
};

/// Max leaves over rooted subtrees (sharing the root) by size, for one arc's
/// subtree. A lone rooted vertex counts as a leaf, so values[1] = 1.
struct RootedLeafFunction {
  std::vector<int> values;  // index 0..size

  int size() const { return static_cast<int>(values.size()) - 1; }
  int operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
};

/// Leaf function of a rooted forest: fold the trees together, where choosing
/// j vertices from the first tree and i-j from the rest is a max-plus
/// convolution. Never enumerates the compositions of i.
inline RootedLeafFunction merge_forest(std::span<const RootedLeafFunction> parts) {
  if (parts.empty()) throw EmptyForest("merge_forest: no parts");
  RootedLeafFunction acc = parts[0];
  for (std::size_t t = 1; t < parts.size(); ++t) {
    const RootedLeafFunction& part = parts[t];
    const int a = part.size();
    const int b = acc.size();
    std::vector<int> merged(static_cast<std::size_t>(a + b) + 1, 0);
    for (int i = 0; i <= a + b; ++i) {
      int best = -1;
      const int j_lo = std::max(0, i - b);
      const int j_hi = std::min(i, a);
      for (int j = j_lo; j <= j_hi; ++j) best = std::max(best, part[j] + acc[i - j]);
      merged[static_cast<std::size_t>(i)] = best;
    }
    acc.values = std::move(merged);
  }
  return acc;
}

/// Memo of rooted leaf functions per directed arc of a tree. Entries are
/// computed on demand (children first, via an explicit work stack) and never
/// change afterwards. Total storage is O(n^2).
class ArcTable {
 public:
  explicit ArcTable(Graph&&) = delete;  // the tree must outlive the table
  explicit ArcTable(const Graph& tree) : tree_(&tree) {
    if (!tree.is_tree()) throw NotATree("ArcTable: input graph is not a tree");
    arc_offsets_.resize(static_cast<std::size_t>(tree.order()) + 1, 0);
    for (VertexId u = 0; u < tree.order(); ++u)
      arc_offsets_[static_cast<std::size_t>(u) + 1] =
          arc_offsets_[static_cast<std::size_t>(u)] + tree.degree(u);
    const std::size_t arcs = arc_offsets_.back();
    memo_.resize(arcs);
    computed_.assign(arcs, 0);
  }

  const Graph& tree() const { return *tree_; }

  const RootedLeafFunction& rooted(Arc a) {
    const int id = arc_id(a);
    if (!computed_[id]) compute(id);
    return memo_[id];
  }

  int subtree_size(Arc a) { return rooted(a).size(); }

  std::size_t computed_entries() const {
    std::size_t k = 0;
    for (char c : computed_) k += c;
    return k;
  }

  std::size_t total_stored_values() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < memo_.size(); ++i)
      if (computed_[i]) k += memo_[i].values.size();
    return k;
  }

  /// Flat arc index: position of head within tail's adjacency list.
  int arc_id(Arc a) const {
    const Graph& g = *tree_;
    if (a.tail < 0 || a.tail >= g.order() || a.head < 0 || a.head >= g.order())
      throw NotAnArc("arc endpoint out of range");
    auto nb = g.neighbors(a.tail);
    auto it = std::lower_bound(nb.begin(), nb.end(), a.head);
    if (it == nb.end() || *it != a.head)
      throw NotAnArc("no edge {" + std::to_string(a.tail) + "," + std::to_string(a.head) + "}");
    return static_cast<int>(arc_offsets_[a.tail] + (it - nb.begin()));
  }

 private:
  void compute(int root_id) {
    const Graph& g = *tree_;
    std::vector<int> work{root_id};
    std::vector<RootedLeafFunction> parts;
    while (!work.empty()) {
      const int cur = work.back();
      if (computed_[cur]) {
        work.pop_back();
        continue;
      }
      const Arc a = arc_of(cur);
      bool ready = true;
      for (VertexId w : g.neighbors(a.head)) {
        if (w == a.tail) continue;
        const int dep = arc_id({a.head, w});
        if (!computed_[dep]) {
          if (ready) ready = false;
          work.push_back(dep);
        }
      }
      if (!ready) continue;
      parts.clear();
      for (VertexId w : g.neighbors(a.head))
        if (w != a.tail) parts.push_back(memo_[arc_id({a.head, w})]);
      RootedLeafFunction f;
      if (parts.empty()) {
        f.values = {0, 1};
      } else {
        const RootedLeafFunction forest = merge_forest(parts);
        f.values.resize(static_cast<std::size_t>(forest.size()) + 2);
        f.values[0] = 0;
        f.values[1] = 1;
        for (int i = 2; i <= forest.size() + 1; ++i)
          f.values[static_cast<std::size_t>(i)] = forest[i - 1];
      }
      memo_[cur] = std::move(f);
      computed_[cur] = 1;
      work.pop_back();
    }
  }

  Arc arc_of(int id) const {
    const auto it = std::upper_bound(arc_offsets_.begin(), arc_offsets_.end(), id);
    const VertexId tail = static_cast<VertexId>(it - arc_offsets_.begin()) - 1;
    return Arc{tail, tree_->neighbors(tail)[id - arc_offsets_[tail]]};
  }

  const Graph* tree_;
  std::vector<int> arc_offsets_;
  std::vector<RootedLeafFunction> memo_;
  std::vector<char> computed_;
};

inline const RootedLeafFunction& rooted_leaf_function(ArcTable& table, Arc a) {
  return table.rooted(a);
}

/// Max leaves over subtrees with i vertices that contain the edge {u,v}:
/// combine the two rooted sides, each contributing at least its root.
/// Entries 0 and 1 are impossible (such a subtree has >= 2 vertices).
inline std::vector<LeafCount> edge_leaf_function(ArcTable& table, VertexId u, VertexId v) {
  const Graph& g = table.tree();
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
    throw NotAnEdge("edge_leaf_function: {" + std::to_string(u) + "," + std::to_string(v) +
                    "} is not an edge");
  const RootedLeafFunction& side_v = table.rooted({u, v});  // rooted at v
  const RootedLeafFunction& side_u = table.rooted({v, u});  // rooted at u
  const int n = g.order();
  std::vector<LeafCount> out(static_cast<std::size_t>(n) + 1, kImpossible);
  for (int i = 2; i <= n; ++i) {
    int best = kImpossible;
    const int j_lo = std::max(1, i - side_u.size());
    const int j_hi = std::min(i - 1, side_v.size());
    for (int j = j_lo; j <= j_hi; ++j)
      best = std::max(best, side_v[j] + side_u[i - j]);
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

/// Polynomial leaf function for trees: every subtree with >= 2 vertices
/// contains an edge, so maximize the per-edge combination over all edges.
inline LeafFunction leaf_function_tree(const Graph& tree) {
  if (!tree.is_tree()) throw NotATree("leaf_function_tree: input graph is not a tree");
  const int n = tree.order();
  LeafFunction lf = LeafFunction::all_impossible(static_cast<std::size_t>(n));
  lf[0] = 0;
  if (n >= 1) lf[1] = 0;
  if (n < 2) return lf;
  ArcTable table(tree);
  for (auto [u, v] : tree.edges()) {
    const std::vector<LeafCount> per_edge = edge_leaf_function(table, u, v);
    for (int i = 2; i <= n; ++i)
      lf[static_cast<std::size_t>(i)] =
          std::max(lf[static_cast<std::size_t>(i)], per_edge[static_cast<std::size_t>(i)]);
  }
  return lf;
}

}  // namespace flis
