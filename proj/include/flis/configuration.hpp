#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "flis/errors.hpp"
#include "flis/graph.hpp"

namespace flis {

enum class Color : std::uint8_t { Green, Yellow, Red, Blue };

inline std::string_view color_name(Color c) {
  switch (c) {
    case Color::Green: return "green";
    case Color::Yellow: return "yellow";
    case Color::Red: return "red";
    case Color::Blue: return "blue";
  }
  return "?";
}

/// Incremental induced-subtree search state: a four-coloring of the vertices
/// plus an undo history.
///
///   green  - confirmed subtree vertices (they always induce a tree)
///   yellow - has exactly one green neighbour, safe to add
///   red    - excluded (forced by a cycle threat, or by choice)
///   blue   - untouched
///
/// Neighbours of a green vertex are never blue. add_to_subtree costs
/// O(deg v), exclude_vertex O(1), undo the cost of the operation it cancels.
/// History entries store deltas (vertex, recoloured neighbours, three counter
/// snapshots), never whole colorings.
class Configuration {
 public:
  explicit Configuration(Graph&&) = delete;  // the graph must outlive the configuration
  explicit Configuration(const Graph& g)
      : graph_(&g),
        color_(g.order(), Color::Blue),
        green_degree_(g.order(), 0),
        green_parent_(g.order(), -1),
        yellow_nbr_count_(g.order(), 0),
        words_((static_cast<std::size_t>(g.order()) + 63) / 64) {
    green_bits_.assign(words_, 0);
    yellow_bits_.assign(words_, 0);
    blue_bits_.assign(words_, 0);
    for (VertexId v = 0; v < g.order(); ++v) set_bit(blue_bits_, v);
  }

  const Graph& graph() const { return *graph_; }

  Color color(VertexId v) const { return color_[v]; }
  int green_degree(VertexId v) const { return green_degree_[v]; }
  bool is_inner(VertexId v) const { return color_[v] == Color::Green && green_degree_[v] >= 2; }

  int green_count() const { return green_count_; }
  int green_leaf_count() const { return green_leaf_count_; }
  /// Yellow vertices whose (unique) green neighbour is an inner tree vertex.
  int inner_yellow_count() const { return inner_yellow_count_; }

  std::pair<int, int> green_stats() const { return {green_count_, green_leaf_count_}; }

  std::size_t history_depth() const { return history_.size(); }

  std::uint64_t work_units() const { return work_units_; }

  std::optional<VertexId> first_green() const { return first_set(green_bits_); }

  /// Smallest-index vertex that can safely be coloured green: the smallest
  /// yellow vertex, or the smallest blue one while the tree is still empty.
  std::optional<VertexId> vertex_to_add() const {
    if (green_count_ == 0) return first_set(blue_bits_);
    return first_set(yellow_bits_);
  }

  void add_to_subtree(VertexId v) {
    check_vertex(v);
    const Color cv = color_[v];
    const bool first = green_count_ == 0;
    if (!(cv == Color::Yellow || (cv == Color::Blue && first)))
      throw IllegalAdd("add_to_subtree: vertex " + std::to_string(v) + " is " +
                       std::string(color_name(cv)));
    history_.push_back(HistoryEntry{HistoryEntry::Kind::Include, v, cv,
                                    recolor_log_.size(), 0, green_count_, green_leaf_count_,
                                    inner_yellow_count_});
    ++work_units_;
    if (cv == Color::Yellow) {
      const VertexId p = green_parent_[v];
      --yellow_nbr_count_[p];
      if (is_inner(p)) --inner_yellow_count_;
    }
    set_color(v, Color::Green);
    ++green_count_;
    for (VertexId w : graph_->neighbors(v)) {
      ++work_units_;
      const int old_green_deg = green_degree_[w]++;
      switch (color_[w]) {
        case Color::Green:
          if (old_green_deg == 1) {  // leaf becomes inner
            --green_leaf_count_;
            inner_yellow_count_ += yellow_nbr_count_[w];
          } else if (old_green_deg == 0) {  // lone vertex becomes a leaf
            ++green_leaf_count_;
          }
          break;
        case Color::Yellow: {  // second green neighbour: forced red
          log_recolor(w, Color::Yellow);
          set_color(w, Color::Red);
          const VertexId p = green_parent_[w];
          --yellow_nbr_count_[p];
          if (is_inner(p)) --inner_yellow_count_;
          break;
        }
        case Color::Blue:
          log_recolor(w, Color::Blue);
          set_color(w, Color::Yellow);
          green_parent_[w] = v;
          ++yellow_nbr_count_[v];  // v cannot be inner right after its own add
          break;
        case Color::Red:
          break;  // red stays red
      }
    }
    if (green_degree_[v] == 1) ++green_leaf_count_;
    history_.back().recolored_count = recolor_log_.size() - history_.back().recolored_begin;
  }

  void exclude_vertex(VertexId v) {
    check_vertex(v);
    const Color cv = color_[v];
    if (cv != Color::Yellow && cv != Color::Blue)
      throw IllegalExclude("exclude_vertex: vertex " + std::to_string(v) + " is " +
                           std::string(color_name(cv)));
    history_.push_back(HistoryEntry{HistoryEntry::Kind::Exclude, v, cv, recolor_log_.size(), 0,
                                    green_count_, green_leaf_count_, inner_yellow_count_});
    ++work_units_;
    if (cv == Color::Yellow) {
      const VertexId p = green_parent_[v];
      --yellow_nbr_count_[p];
      if (is_inner(p)) --inner_yellow_count_;
    }
    set_color(v, Color::Red);
  }

  void undo() {
    if (history_.empty()) throw EmptyHistory("undo: no operation to cancel");
    const HistoryEntry e = history_.back();
    history_.pop_back();
    ++work_units_;
    const VertexId v = e.vertex;
    if (e.kind == HistoryEntry::Kind::Include) {
      set_color(v, e.previous_color);
      for (VertexId w : graph_->neighbors(v)) {
        ++work_units_;
        --green_degree_[w];
      }
      for (std::size_t k = e.recolored_begin; k < e.recolored_begin + e.recolored_count; ++k) {
        const auto [w, prev] = recolor_log_[k];
        if (prev == Color::Yellow) {  // the include turned w red
          ++yellow_nbr_count_[green_parent_[w]];
        } else {  // the include turned blue w yellow: undo the credit given to v
          --yellow_nbr_count_[v];
        }
        set_color(w, prev);
      }
      recolor_log_.resize(e.recolored_begin);
      if (e.previous_color == Color::Yellow) ++yellow_nbr_count_[green_parent_[v]];
    } else {
      set_color(v, e.previous_color);
      if (e.previous_color == Color::Yellow) ++yellow_nbr_count_[green_parent_[v]];
    }
    green_count_ = e.green_count;
    green_leaf_count_ = e.green_leaf_count;
    inner_yellow_count_ = e.inner_yellow_count;
  }

  /// Sorted green vertex set.
  std::vector<VertexId> green_vertices() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(green_count_));
    for (VertexId v = 0; v < graph_->order(); ++v)
      if (color_[v] == Color::Green) out.push_back(v);
    return out;
  }

  /// One line per vertex: "id color green_degree".
  void dump(std::ostream& out) const {
    for (VertexId v = 0; v < graph_->order(); ++v)
      out << v << ' ' << color_name(color_[v]) << ' ' << green_degree_[v] << '\n';
  }

  /// Recomputes everything from the coloring and compares with the cached
  /// state; also checks the structural coloring conditions. Test support.
  bool self_check(std::string* why = nullptr) const {
    auto fail = [&](const std::string& msg) {
      if (why) *why = msg;
      return false;
    };
    const Graph& g = *graph_;
    int greens = 0, leaves = 0, inner_yellows = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
      int gd = 0;
      for (VertexId w : g.neighbors(v)) gd += color_[w] == Color::Green;
      if (gd != green_degree_[v])
        return fail("green_degree mismatch at " + std::to_string(v));
      if (color_[v] == Color::Green) {
        ++greens;
        if (gd == 1) ++leaves;
        for (VertexId w : g.neighbors(v))
          if (color_[w] == Color::Blue)
            return fail("blue vertex " + std::to_string(w) + " next to green");
      }
      if (color_[v] == Color::Yellow) {
        if (gd != 1) return fail("yellow vertex " + std::to_string(v) + " has " +
                                 std::to_string(gd) + " green neighbours");
        const VertexId p = green_parent_[v];
        if (p < 0 || color_[p] != Color::Green || !g.has_edge(v, p))
          return fail("stale green parent at " + std::to_string(v));
        if (green_degree_[p] >= 2) ++inner_yellows;
      }
    }
    if (greens != green_count_) return fail("green_count mismatch");
    if (greens >= 2 && leaves != green_leaf_count_) return fail("green_leaf_count mismatch");
    if (greens < 2 && green_leaf_count_ != 0) return fail("green_leaf_count not zero");
    if (inner_yellows != inner_yellow_count_) return fail("inner_yellow_count mismatch");
    // greens induce a tree
    if (greens > 0) {
      const VertexId start = *first_green();
      std::vector<char> seen(g.order(), 0);
      std::vector<VertexId> stack{start};
      seen[start] = 1;
      int reached = 1, green_edges = 0;
      while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(u))
          if (color_[w] == Color::Green) {
            ++green_edges;
            if (!seen[w]) {
              seen[w] = 1;
              ++reached;
              stack.push_back(w);
            }
          }
      }
      if (reached != greens) return fail("green set disconnected");
      if (green_edges / 2 != greens - 1) return fail("green set has a cycle");
    }
    // bitsets agree with the color array
    for (VertexId v = 0; v < g.order(); ++v) {
      if (test_bit(green_bits_, v) != (color_[v] == Color::Green) ||
          test_bit(yellow_bits_, v) != (color_[v] == Color::Yellow) ||
          test_bit(blue_bits_, v) != (color_[v] == Color::Blue))
        return fail("bitset mismatch at " + std::to_string(v));
      if (color_[v] == Color::Green) {
        int yn = 0;
        for (VertexId w : g.neighbors(v)) yn += color_[w] == Color::Yellow;
        if (yn != yellow_nbr_count_[v])
          return fail("yellow_nbr_count mismatch at " + std::to_string(v));
      }
    }
    return true;
  }

  bool same_coloring(const Configuration& o) const {
    return color_ == o.color_ && green_degree_ == o.green_degree_;
  }

 private:
  struct HistoryEntry {
    enum class Kind : std::uint8_t { Include, Exclude };
    Kind kind;
    VertexId vertex;
    Color previous_color;
    std::size_t recolored_begin;
    std::size_t recolored_count;
    int green_count;
    int green_leaf_count;
    int inner_yellow_count;
  };

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= graph_->order()) throw InvalidParams("vertex out of range");
  }

  void log_recolor(VertexId w, Color prev) { recolor_log_.emplace_back(w, prev); }

  void set_color(VertexId v, Color c) {
    switch (color_[v]) {
      case Color::Green: clear_bit(green_bits_, v); break;
      case Color::Yellow: clear_bit(yellow_bits_, v); break;
      case Color::Blue: clear_bit(blue_bits_, v); break;
      case Color::Red: break;
    }
    color_[v] = c;
    switch (c) {
      case Color::Green: set_bit(green_bits_, v); break;
      case Color::Yellow: set_bit(yellow_bits_, v); break;
      case Color::Blue: set_bit(blue_bits_, v); break;
      case Color::Red: break;
    }
  }

  static void set_bit(std::vector<std::uint64_t>& bits, VertexId v) {
    bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }
  static void clear_bit(std::vector<std::uint64_t>& bits, VertexId v) {
    bits[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  static bool test_bit(const std::vector<std::uint64_t>& bits, VertexId v) {
    return (bits[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
  }
  static std::optional<VertexId> first_set(const std::vector<std::uint64_t>& bits) {
    for (std::size_t w = 0; w < bits.size(); ++w)
      if (bits[w]) return static_cast<VertexId>(w * 64 + std::countr_zero(bits[w]));
    return std::nullopt;
  }

  const Graph* graph_;
  std::vector<Color> color_;
  std::vector<int> green_degree_;
  // for a yellow vertex, the green neighbour that turned it yellow
  std::vector<VertexId> green_parent_;
  // for a green vertex, its current number of yellow neighbours
  std::vector<int> yellow_nbr_count_;
  std::size_t words_;
  std::vector<std::uint64_t> green_bits_, yellow_bits_, blue_bits_;
  std::vector<HistoryEntry> history_;
  std::vector<std::pair<VertexId, Color>> recolor_log_;
  int green_count_ = 0;
  int green_leaf_count_ = 0;
  int inner_yellow_count_ = 0;
  std::uint64_t work_units_ = 0;
};

}  // namespace flis
