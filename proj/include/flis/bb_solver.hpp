#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <thread>
#include <vector>

#include "flis/configuration.hpp"
#include "flis/errors.hpp"
#include "flis/generators.hpp"
#include "flis/graph.hpp"
#include "flis/leaf_function.hpp"
#include "flis/leaf_potential.hpp"

namespace flis {

struct SearchStats {
  std::uint64_t visited_subtrees = 0;  // nodes where vertex_to_add returned none
  std::uint64_t include_ops = 0;
  std::uint64_t exclude_ops = 0;
  std::uint64_t pruned = 0;
  std::chrono::nanoseconds elapsed{0};

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(elapsed).count();
  }
};

struct SolveOptions {
  bool use_bound = true;
  std::set<int> witness_sizes;  // sizes for which one optimal vertex set is kept
  std::optional<std::uint64_t> node_budget;
};

struct SolveResult {
  LeafFunction leaf_function;
  SearchStats stats;
  std::map<int, std::vector<VertexId>> witnesses;
  bool complete = true;  // false when the node budget ran out
};

namespace detail {

// Depth-first walk over the configuration tree: at each node either include
// the chooser's vertex or exclude it, undoing on the way back. Every leaf of
// this tree is a distinct induced subtree. The stack is explicit so large
// graphs cannot overflow the call stack.
template <class OnLeaf, class Prune>
bool explore_configurations(const Graph& g, SearchStats& stats,
                            std::optional<std::uint64_t> node_budget, OnLeaf&& on_leaf,
                            Prune&& prune) {
  enum : std::uint8_t { kEnter, kAfterInclude, kAfterExclude };
  struct Frame {
    VertexId vertex;
    std::uint8_t phase;
  };
  Configuration cfg(g);
  std::vector<Frame> stack;
  stack.reserve(static_cast<std::size_t>(g.order()) * 2 + 4);
  stack.push_back({-1, kEnter});
  std::uint64_t entered = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    switch (f.phase) {
      case kEnter: {
        if (node_budget && entered >= *node_budget) return false;
        ++entered;
        const auto u = cfg.vertex_to_add();
        if (!u) {
          ++stats.visited_subtrees;
          on_leaf(cfg);
          stack.pop_back();
          break;
        }
        if (prune(cfg)) {
          ++stats.pruned;
          stack.pop_back();
          break;
        }
        f.vertex = *u;
        f.phase = kAfterInclude;
        ++stats.include_ops;
        cfg.add_to_subtree(f.vertex);
        stack.push_back({-1, kEnter});
        break;
      }
      case kAfterInclude: {
        cfg.undo();
        f.phase = kAfterExclude;
        ++stats.exclude_ops;
        cfg.exclude_vertex(f.vertex);
        stack.push_back({-1, kEnter});
        break;
      }
      default:
        cfg.undo();
        stack.pop_back();
        break;
    }
  }
  return true;
}

}  // namespace detail

/// Computes the full leaf function of g by exhaustive configuration search,
/// cutting branches whose leaf potential cannot beat the best values found so
/// far (unless opts.use_bound is off; both settings give the same function).
inline SolveResult leaf_function_bb(const Graph& g, const SolveOptions& opts = {}) {
  if (opts.node_budget && *opts.node_budget == 0)
    throw InvalidParams("node_budget must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult result;
  result.leaf_function = LeafFunction::all_impossible(static_cast<std::size_t>(g.order()));
  LeafFunction& best = result.leaf_function;
  best[0] = 0;
  PotentialEvaluator evaluator;

  auto on_leaf = [&](const Configuration& cfg) {
    const int i = cfg.green_count();
    const int l = cfg.green_leaf_count();
    const bool wanted = opts.witness_sizes.contains(i);
    if (l > best[static_cast<std::size_t>(i)]) {
      best[static_cast<std::size_t>(i)] = l;
      if (wanted) result.witnesses[i] = cfg.green_vertices();
    } else if (wanted && l == best[static_cast<std::size_t>(i)] &&
               !result.witnesses.contains(i)) {
      result.witnesses[i] = cfg.green_vertices();
    }
  };
  auto prune = [&](const Configuration& cfg) {
    return opts.use_bound && evaluator.prunable(cfg, best);
  };
  result.complete =
      detail::explore_configurations(g, result.stats, opts.node_budget, on_leaf, prune);
  result.stats.elapsed = std::chrono::steady_clock::now() - t0;
  return result;
}

/// Visits every induced subtree of g exactly once (empty set and singletons
/// included) and returns the total count. The visitor receives
/// (size, leaves, sorted vertex set).
template <class Visitor>
std::uint64_t enumerate_induced_subtrees(const Graph& g, Visitor&& visit) {
  SearchStats stats;
  std::vector<VertexId> buffer;
  detail::explore_configurations(
      g, stats, std::nullopt,
      [&](const Configuration& cfg) {
        buffer = cfg.green_vertices();
        visit(cfg.green_count(), cfg.green_leaf_count(),
              std::span<const VertexId>(buffer));
      },
      [](const Configuration&) { return false; });
  return stats.visited_subtrees;
}

inline std::uint64_t count_induced_subtrees(const Graph& g) {
  return enumerate_induced_subtrees(g, [](int, int, std::span<const VertexId>) {});
}

/// One benchmark cell: the same random graph solved with and without the
/// leaf-potential bound.
struct BenchRow {
  int n = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t visited_bound = 0;
  std::uint64_t visited_nobound = 0;
  double ms_bound = 0.0;
  double ms_nobound = 0.0;
};

/// Runs the (density, seed) grid on G(n,p) graphs. Rows come back ordered by
/// (density index, seed index) regardless of how many workers ran them.
inline std::vector<BenchRow> density_benchmark(int n, std::span<const double> densities,
                                               std::span<const std::uint64_t> seeds,
                                               unsigned jobs = 1) {
  if (n < 1) throw InvalidParams("density_benchmark: need n >= 1");
  const std::size_t cells = densities.size() * seeds.size();
  std::vector<BenchRow> rows(cells);
  auto run_cell = [&](std::size_t idx) {
    const std::size_t di = idx / seeds.size();
    const std::size_t si = idx % seeds.size();
    BenchRow row;
    row.n = n;
    row.density = densities[di];
    row.seed = seeds[si];
    const Graph g = families::random_gnp(n, row.density, row.seed);
    SolveOptions with_bound;
    SolveOptions no_bound;
    no_bound.use_bound = false;
    const SolveResult a = leaf_function_bb(g, with_bound);
    const SolveResult b = leaf_function_bb(g, no_bound);
    row.visited_bound = a.stats.visited_subtrees;
    row.visited_nobound = b.stats.visited_subtrees;
    row.ms_bound = a.stats.elapsed_ms();
    row.ms_nobound = b.stats.elapsed_ms();
    rows[idx] = row;
  };
  if (jobs <= 1 || cells <= 1) {
    for (std::size_t i = 0; i < cells; ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < cells; i = next.fetch_add(1)) run_cell(i);
    };
    std::vector<std::future<void>> futs;
    const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(cells));
    futs.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
  }
  return rows;
}

inline void write_benchmark_csv(std::span<const BenchRow> rows, std::ostream& out) {
  out << "n,density,seed,visited_bound,visited_nobound,ms_bound,ms_nobound\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.density << ',' << r.seed << ',' << r.visited_bound << ','
        << r.visited_nobound << ',' << r.ms_bound << ',' << r.ms_nobound << '\n';
  }
}

}  // namespace flis
