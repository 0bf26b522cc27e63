#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "flis/bb_solver.hpp"
#include "flis/closed_forms.hpp"
#include "flis/generators.hpp"
#include "flis/graph.hpp"
#include "flis/oracle.hpp"

using namespace flis;

TEST_CASE("known leaf functions") {
  CHECK(leaf_function_bb(families::hypercube(3)).leaf_function ==
        LeafFunction::from_table("0 0 2 2 3 2 * * *"));
  CHECK(leaf_function_bb(families::complete(4)).leaf_function ==
        LeafFunction::from_table("0 0 2 * *"));
  CHECK(leaf_function_bb(families::path(4)).leaf_function ==
        LeafFunction::from_table("0 0 2 2 2"));
  CHECK(leaf_function_bb(Graph(0)).leaf_function == LeafFunction({0}));
  CHECK(leaf_function_bb(Graph(3)).leaf_function == LeafFunction::from_table("0 0 * *"));
}

TEST_CASE("bound on and off agree with the oracle") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 25; ++trial) {
    const VertexId n = 5 + static_cast<VertexId>(rng() % 7);
    const double p = 0.1 + 0.1 * (rng() % 9);
    const Graph g = families::random_gnp(n, p, rng());
    SolveOptions no_bound;
    no_bound.use_bound = false;
    const SolveResult with = leaf_function_bb(g);
    const SolveResult without = leaf_function_bb(g, no_bound);
    const LeafFunction truth = oracle::leaf_function_bruteforce(g);
    CHECK(with.leaf_function == truth);
    CHECK(without.leaf_function == truth);
    CHECK(with.stats.visited_subtrees <= without.stats.visited_subtrees);
    CHECK(with.stats.pruned <= with.stats.include_ops + with.stats.exclude_ops);
  }
}

TEST_CASE("witnesses are optimal induced subtrees") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    const VertexId n = 6 + static_cast<VertexId>(rng() % 5);
    const Graph g = families::random_gnp(n, 0.3 + 0.05 * (rng() % 8), rng());
    SolveOptions opts;
    for (int i = 0; i <= n; ++i) opts.witness_sizes.insert(i);
    const SolveResult r = leaf_function_bb(g, opts);
    for (int i = 0; i <= n; ++i) {
      if (!r.leaf_function.possible(static_cast<std::size_t>(i))) {
        CHECK_FALSE(r.witnesses.contains(i));
        continue;
      }
      REQUIRE(r.witnesses.contains(i));
      const auto& w = r.witnesses.at(i);
      CHECK(static_cast<int>(w.size()) == i);
      CHECK(is_induced_subtree(g, w));
      CHECK(leaf_count(g, w) == r.leaf_function[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("witness for a claw in the cube") {
  SolveOptions opts;
  opts.witness_sizes.insert(4);
  const SolveResult r = leaf_function_bb(families::hypercube(3), opts);
  REQUIRE(r.witnesses.contains(4));
  const Graph q3 = families::hypercube(3);
  CHECK(leaf_count(q3, r.witnesses.at(4)) == 3);
}

TEST_CASE("enumeration visits every induced subtree exactly once") {
  SECTION("triangle") {
    std::set<std::vector<VertexId>> seen;
    const std::uint64_t count = enumerate_induced_subtrees(
        families::complete(3), [&](int size, int leaves, std::span<const VertexId> vs) {
          CHECK(size == static_cast<int>(vs.size()));
          if (size == 2) CHECK(leaves == 2);
          seen.emplace(vs.begin(), vs.end());
        });
    CHECK(count == 7);
    CHECK(seen.size() == 7);
  }
  SECTION("path of three") {
    CHECK(count_induced_subtrees(families::path(3)) == 7);
  }
  SECTION("edgeless graph") {
    CHECK(count_induced_subtrees(Graph(3)) == 4);
  }
  SECTION("single vertex") {
    CHECK(count_induced_subtrees(Graph(1)) == 2);
  }
  SECTION("matches subset brute force on random graphs") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 14; ++trial) {
      const VertexId n = 4 + static_cast<VertexId>(rng() % 7);
      const Graph g = families::random_gnp(n, 0.1 + 0.1 * (rng() % 9), rng());
      std::set<std::uint32_t> masks;
      const std::uint64_t count = enumerate_induced_subtrees(
          g, [&](int, int, std::span<const VertexId> vs) {
            std::uint32_t mask = 0;
            for (VertexId v : vs) mask |= 1u << v;
            masks.insert(mask);
          });
      CHECK(count == oracle::count_induced_subtrees_bruteforce(g));
      CHECK(masks.size() == count);  // no duplicates
    }
  }
}

TEST_CASE("node budget flags partial results") {
  const Graph q4 = families::hypercube(4);
  SolveOptions opts;
  opts.node_budget = 50;
  const SolveResult r = leaf_function_bb(q4, opts);
  CHECK_FALSE(r.complete);
  opts.node_budget = 0;
  CHECK_THROWS_AS(leaf_function_bb(q4, opts), InvalidParams);
  SolveOptions plenty;
  plenty.node_budget = 100'000'000;
  CHECK(leaf_function_bb(families::path(4), plenty).complete);
}

TEST_CASE("density benchmark rows") {
  const double densities[] = {0.3, 0.9};
  const std::uint64_t seeds[] = {1, 2, 3};
  const auto rows = density_benchmark(9, densities, seeds, 2);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].density == densities[i / 3]);
    CHECK(rows[i].seed == seeds[i % 3]);
    CHECK(rows[i].visited_bound <= rows[i].visited_nobound);
  }
  // determinism modulo timing columns
  const auto again = density_benchmark(9, densities, seeds, 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].visited_bound == again[i].visited_bound);
    CHECK(rows[i].visited_nobound == again[i].visited_nobound);
  }
  // a one-vertex graph has exactly the empty subtree and one singleton
  const double d1[] = {0.5};
  const std::uint64_t s1[] = {7};
  CHECK(density_benchmark(1, d1, s1)[0].visited_nobound == 2);
}
