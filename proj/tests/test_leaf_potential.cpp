#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "flis/closed_forms.hpp"
#include "flis/generators.hpp"
#include "flis/leaf_potential.hpp"
#include "flis/oracle.hpp"
#include "test_support.hpp"

using namespace flis;

TEST_CASE("component size ignores everything behind red vertices") {
  const Graph p5 = families::path(5);
  Configuration c(p5);
  c.add_to_subtree(2);
  CHECK(component_size(c) == 5);

  Configuration d(p5);
  d.add_to_subtree(0);
  d.exclude_vertex(2);
  CHECK(component_size(d) == 2);

  const Graph k4 = families::complete(4);
  Configuration e(k4);
  e.add_to_subtree(0);
  e.exclude_vertex(1);
  e.exclude_vertex(2);
  e.exclude_vertex(3);
  CHECK(component_size(e) == 1);

  Configuration f(p5);
  CHECK_THROWS_AS(component_size(f), NoGreenVertex);
}

namespace {

Configuration mid_path_config(const Graph& p5) {
  Configuration c(p5);
  c.add_to_subtree(1);
  c.add_to_subtree(2);
  c.add_to_subtree(3);
  return c;
}

}  // namespace

TEST_CASE("leaf potential hand traces") {
  const Graph p5 = families::path(5);
  SECTION("middle of a path") {
    Configuration c = mid_path_config(p5);
    CHECK(leaf_potential(c, 5) == 2);
    CHECK(leaf_potential(c, 3) == c.green_leaf_count());  // n' = n
    CHECK(leaf_potential(c, 4) == 2);
  }
  SECTION("star completes from yellows alone") {
    const Graph s4 = families::star(4);
    Configuration c(s4);
    c.add_to_subtree(0);
    c.add_to_subtree(1);
    c.add_to_subtree(2);
    CHECK(c.inner_yellow_count() == 2);  // rays 3 and 4 touch the inner center
    CHECK(leaf_potential(c, 5) == 4);    // completion branch: 2 + 2
  }
  SECTION("n' beyond the component is impossible") {
    Configuration c = mid_path_config(p5);
    CHECK(leaf_potential(c, 6) == kImpossible);
  }
  SECTION("too few greens") {
    Configuration c(p5);
    c.add_to_subtree(0);
    c.add_to_subtree(1);
    CHECK_THROWS_AS(leaf_potential(c, 4), TooFewGreens);
  }
  SECTION("n' below the green count") {
    Configuration c = mid_path_config(p5);
    CHECK_THROWS_AS(leaf_potential(c, 2), InvalidParams);
  }
}

TEST_CASE("profile bookkeeping matches the loop invariant") {
  // n - l stays |inner| + k after k picks, both along hand traces and fuzz.
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const VertexId n = 5 + static_cast<VertexId>(rng() % 5);
    const Graph g = families::random_gnp(n, 0.2 + 0.1 * (rng() % 7), rng());
    Configuration c(g);
    if (!test::grow_random_configuration(c, 3 + static_cast<int>(rng() % 3), rng)) continue;
    const PotentialProfile prof = potential_profile(c);
    int nn = prof.green_size + prof.completion_yellows;
    int ll = prof.green_leaves + prof.completion_yellows;
    CHECK(nn - ll == prof.inner_count);  // k = 0
    int k = 0;
    for (int deg : prof.pick_degrees) {
      nn += deg - 1;
      ll += deg - 2;
      ++k;
      CHECK(nn - ll == prof.inner_count + k);
      CHECK(deg >= 2);  // the greedy never runs out of branching vertices
    }
  }
}

TEST_CASE("potential dominates exhaustive extension") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const VertexId n = 4 + static_cast<VertexId>(rng() % 6);
    const Graph g = families::random_gnp(n, 0.2 + 0.1 * (rng() % 7), rng());
    Configuration c(g);
    if (!test::grow_random_configuration(c, 3 + static_cast<int>(rng() % 4), rng)) continue;
    const int k = component_size(c);
    for (int np = c.green_count(); np <= k; ++np) {
      const LeafCount truth = oracle::max_leaves_over_extensions(c, np);
      const LeafCount bound = leaf_potential(c, np);
      CHECK(truth <= bound);
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("prunable") {
  const Graph q3 = families::hypercube(3);
  SECTION("nothing proven yet means nothing can be pruned") {
    Configuration c(q3);
    c.add_to_subtree(0);
    c.add_to_subtree(1);
    c.add_to_subtree(3);
    LeafFunction best = LeafFunction::all_impossible(8);
    best[0] = 0;
    CHECK_FALSE(prunable(c, best));
  }
  SECTION("potential equal to best everywhere prunes") {
    Configuration c(q3);
    c.add_to_subtree(0);
    c.add_to_subtree(1);
    c.add_to_subtree(3);
    LeafFunction best = LeafFunction::all_impossible(8);
    const PotentialProfile prof = potential_profile(c);
    for (int np = c.green_count(); np <= prof.component; ++np)
      best[static_cast<std::size_t>(np)] = prof.evaluate(np);
    CHECK(prunable(c, best));
  }
  SECTION("fixture: path 0-1-3 in the cube against the reference table") {
    Configuration c(q3);
    c.add_to_subtree(0);
    c.add_to_subtree(1);
    c.add_to_subtree(3);
    // the add sequence forces 2 red (two green neighbours), so |K| = 7
    CHECK(c.color(2) == Color::Red);
    CHECK(component_size(c) == 7);
    CHECK(leaf_potential(c, 3) == 2);
    CHECK(leaf_potential(c, 4) == 3);
    CHECK(leaf_potential(c, 5) == 3);
    // the bound at 5 overshoots the true table value 2, so no pruning
    const LeafFunction table = hypercube_table(3);
    CHECK(leaf_potential(c, 5) > table[5]);
    CHECK_FALSE(prunable(c, table));
    // and the exhaustive oracle confirms the bound is an overestimate here
    CHECK(oracle::max_leaves_over_extensions(c, 5) == 2);
  }
}

TEST_CASE("prunable agrees with evaluating the profile over the whole range") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    const VertexId n = 5 + static_cast<VertexId>(rng() % 6);
    const Graph g = families::random_gnp(n, 0.2 + 0.1 * (rng() % 7), rng());
    Configuration c(g);
    if (!test::grow_random_configuration(c, 3 + static_cast<int>(rng() % 3), rng)) continue;
    // random best table
    LeafFunction best = LeafFunction::all_impossible(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < best.size(); ++i)
      if (rng() % 3) best[i] = static_cast<LeafCount>(rng() % (i + 2));
    const PotentialProfile prof = potential_profile(c);
    bool expected = true;
    for (int np = prof.green_size; np <= prof.component; ++np)
      if (prof.evaluate(np) > best[static_cast<std::size_t>(np)]) expected = false;
    CHECK(prunable(c, best) == expected);
  }
}
