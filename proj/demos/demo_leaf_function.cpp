// Quick tour: build a few graphs, compute their leaf functions with the
// different solvers, and show a maximum-leaf witness.

#include <iostream>

#include "flis/flis.hpp"

int main() {
  using namespace flis;

  // the 3-cube, solved by branch and bound
  const Graph q3 = families::hypercube(3);
  SolveOptions opts;
  opts.witness_sizes.insert(4);
  const SolveResult r = leaf_function_bb(q3, opts);
  std::cout << "Q_3 leaf function: " << r.leaf_function.to_table() << '\n';
  std::cout << "a 4-vertex induced subtree with " << r.leaf_function[4] << " leaves:";
  for (VertexId v : r.witnesses.at(4)) std::cout << ' ' << v;
  std::cout << "\nsearch visited " << r.stats.visited_subtrees << " induced subtrees ("
            << r.stats.pruned << " branches pruned)\n\n";

  // a random tree, solved by the polynomial dynamic program
  const Graph tree = families::random_tree(16, /*seed=*/42);
  std::cout << "random 16-vertex tree: " << leaf_function_tree(tree).to_table() << '\n';

  // closed forms for classical families
  std::cout << "wheel W_6:          " << closed_form_wheel(6).to_table() << '\n';
  std::cout << "K_{2,3}:            " << closed_form_complete_bipartite(2, 3).to_table()
            << '\n';

  // infinite lattices follow linear recurrences
  std::cout << "square lattice, i=100:  " << lattice_leaf_value(Lattice::Square, 100) << '\n';
  std::cout << "cubic lattice,  i=100:  " << lattice_leaf_value(Lattice::Cubic, 100) << '\n';
  return 0;
}
