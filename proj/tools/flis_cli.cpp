// Command-line front end: generate graphs, compute leaf functions with any of
// the solvers, run the independent-set reduction, enumerate induced subtrees,
// and benchmark the pruning bound on random graphs.
//
// Exit codes: 0 success, 1 parse/IO error, 2 solver-input mismatch,
// 3 node budget exhausted.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "flis/flis.hpp"
#include "flis/json_io.hpp"

namespace {

using namespace flis;

struct SolverMismatch : Error {
  using Error::Error;
};
struct BudgetExhausted : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

struct GraphSource {
  std::string input_path;  // file path, or "-" for stdin
  std::string family;
  std::vector<double> params;
  std::optional<std::uint64_t> seed;

  bool has_family() const { return !family.empty(); }

  Graph load() const {
    if (has_family()) {
      const auto fam = parse_family(family);
      if (!fam) throw SolverMismatch("unknown family '" + family + "'");
      return generate_family(*fam, params, seed);
    }
    if (input_path.empty()) throw IoError("no input graph: give a file or --family");
    if (input_path == "-") return Graph::from_edge_list(std::cin);
    std::ifstream in(input_path);
    if (!in) throw IoError("cannot open '" + input_path + "'");
    return Graph::from_edge_list(in);
  }
};

void add_source_options(CLI::App* cmd, GraphSource& src, bool positional_input = true) {
  if (positional_input)
    cmd->add_option("input", src.input_path, "edge-list file ('-' for stdin)");
  cmd->add_option("--family", src.family,
                  "named family: complete, cycle, wheel, complete-bipartite, hypercube, "
                  "path, star, random-gnp, random-tree");
  cmd->add_option("--param", src.params, "family parameter (repeatable)");
  cmd->add_option("--seed", src.seed, "seed for the random families");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

std::vector<double> parse_density_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw InvalidParams("bad density '" + tok + "'");
    }
  }
  if (out.empty()) throw InvalidParams("empty density list");
  return out;
}

std::vector<std::uint64_t> parse_seed_spec(const std::string& text) {
  std::vector<std::uint64_t> out;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const std::uint64_t lo = std::stoull(text.substr(0, dots));
      const std::uint64_t hi = std::stoull(text.substr(dots + 2));
      if (hi < lo) throw InvalidParams("seed range is empty");
      for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
    } else {
      std::stringstream ss(text);
      std::string tok;
      while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    }
  } catch (const InvalidParams&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidParams("bad seed spec '" + text + "'");
  }
  if (out.empty()) throw InvalidParams("empty seed list");
  return out;
}

int run_gen(const GraphSource& src, const std::string& out_path, const std::string& format) {
  const Graph g = src.load();
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  if (format == "json")
    out << graph_to_json(g).dump(2) << '\n';
  else
    g.write_edge_list(out);
  return 0;
}

struct LeafFunctionArgs {
  GraphSource source;
  std::string solver = "auto";
  bool no_bound = false;
  std::vector<int> witness_sizes;
  bool stats = false;
  std::string format = "table";
  std::optional<std::uint64_t> budget;
  std::string out_path;
};

int run_leaf_function(const LeafFunctionArgs& args) {
  std::ofstream file;
  std::ostream& out = open_output(args.out_path, file);

  std::string solver = args.solver;
  if (!args.witness_sizes.empty()) {
    if (solver == "auto") solver = "bb";
    if (solver != "bb") throw SolverMismatch("--witness requires the bb solver");
  }

  LeafFunction lf;
  std::optional<SolveResult> search;

  if (solver == "closed-form") {
    if (!args.source.has_family())
      throw SolverMismatch("closed-form needs --family, not a graph file");
    const auto fam = parse_family(args.source.family);
    if (!fam) throw SolverMismatch("unknown family '" + args.source.family + "'");
    std::vector<long long> iparams;
    for (double p : args.source.params) iparams.push_back(static_cast<long long>(p));
    if (*fam == Family::Hypercube) {
      if (iparams.size() != 1) throw InvalidParams("hypercube: expected one parameter");
      lf = hypercube_table(static_cast<int>(iparams[0]));
    } else {
      try {
        lf = closed_form(*fam, iparams);
      } catch (const InvalidParams& e) {
        throw SolverMismatch(e.what());
      }
    }
  } else {
    const Graph g = args.source.load();
    if (solver == "auto") solver = g.is_tree() ? "tree-dp" : "bb";
    if (solver == "tree-dp") {
      lf = leaf_function_tree(g);
    } else if (solver == "brute") {
      lf = oracle::leaf_function_bruteforce(g);
    } else if (solver == "bb") {
      SolveOptions opts;
      opts.use_bound = !args.no_bound;
      opts.node_budget = args.budget;
      for (int i : args.witness_sizes) {
        if (i < 0 || i > g.order())
          throw InvalidParams("witness size out of range: " + std::to_string(i));
        opts.witness_sizes.insert(i);
      }
      search = leaf_function_bb(g, opts);
      lf = search->leaf_function;
    } else {
      throw SolverMismatch("unknown solver '" + solver + "'");
    }
  }

  const bool partial = search && !search->complete;

  if (args.format == "table") {
    out << lf.to_table() << '\n';
    if (search) {
      for (const auto& [size, vertices] : search->witnesses) {
        out << "witness " << size << ':';
        for (VertexId v : vertices) out << ' ' << v;
        out << '\n';
      }
    }
    if (args.stats) {
      if (search) {
        const SearchStats& s = search->stats;
        out << "stats: visited=" << s.visited_subtrees << " include_ops=" << s.include_ops
            << " exclude_ops=" << s.exclude_ops << " pruned=" << s.pruned
            << " ms=" << s.elapsed_ms() << '\n';
      } else {
        out << "stats: solver=" << solver << '\n';
      }
    }
  } else if (args.format == "csv") {
    out << lf.to_csv();
    if (args.stats && search)
      std::cerr << "# visited=" << search->stats.visited_subtrees
                << " pruned=" << search->stats.pruned
                << " ms=" << search->stats.elapsed_ms() << '\n';
  } else if (args.format == "json") {
    nlohmann::json j = leaf_function_to_json(lf);
    j["solver"] = solver;
    if (search) {
      j["complete"] = search->complete;
      nlohmann::json wit = nlohmann::json::object();
      for (const auto& [size, vertices] : search->witnesses)
        wit[std::to_string(size)] = vertices;
      if (!search->witnesses.empty()) j["witnesses"] = std::move(wit);
      if (args.stats) {
        j["stats"] = {{"visited", search->stats.visited_subtrees},
                      {"include_ops", search->stats.include_ops},
                      {"exclude_ops", search->stats.exclude_ops},
                      {"pruned", search->stats.pruned},
                      {"ms", search->stats.elapsed_ms()}};
      }
    }
    out << j.dump(2) << '\n';
  } else {
    throw InvalidParams("unknown format '" + args.format + "'");
  }

  if (partial) throw BudgetExhausted("node budget exhausted; results are partial");
  return 0;
}

int run_reduce(const std::string& input, int k, const std::string& out_path) {
  GraphSource src;
  src.input_path = input;
  const Graph g = src.load();
  const LISInstance inst = reduce_independent_set(g, k);
  if (out_path.empty()) {
    inst.graph.write_edge_list(std::cout);
    std::cerr << "i=" << inst.i << " ell=" << inst.ell << '\n';
  } else {
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    inst.graph.write_edge_list(out);
    std::cout << "i=" << inst.i << " ell=" << inst.ell << '\n';
  }
  return 0;
}

int run_enumerate(const GraphSource& src, bool list) {
  const Graph g = src.load();
  std::uint64_t count = 0;
  if (list) {
    count = enumerate_induced_subtrees(g, [&](int size, int leaves,
                                              std::span<const VertexId> vs) {
      std::cout << size << ' ' << leaves << ':';
      for (VertexId v : vs) std::cout << ' ' << v;
      std::cout << '\n';
    });
  } else {
    count = count_induced_subtrees(g);
  }
  std::cout << count << '\n';
  return 0;
}

int run_bench(int n, const std::string& densities, const std::string& seeds, unsigned jobs,
              const std::string& format) {
  if (format != "csv") throw InvalidParams("bench supports --format csv only");
  const auto dens = parse_density_list(densities);
  const auto seed_list = parse_seed_spec(seeds);
  const auto rows = density_benchmark(n, dens, seed_list, jobs);
  write_benchmark_csv(rows, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leaf functions of induced subtrees: exact solvers and tools"};
  app.require_subcommand(1);

  // gen
  GraphSource gen_src;
  std::string gen_out, gen_format = "edge-list";
  auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
  gen->add_option("family", gen_src.family, "family name")->required();
  gen->add_option("params", gen_src.params, "family parameters");
  gen->add_option("--seed", gen_src.seed, "seed for random families");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_option("--format", gen_format, "edge-list or json")
      ->check(CLI::IsMember({"edge-list", "json"}));

  // leaf-function
  LeafFunctionArgs lf_args;
  auto* lf = app.add_subcommand("leaf-function", "compute the leaf function of a graph");
  add_source_options(lf, lf_args.source);
  lf->add_option("--solver", lf_args.solver, "auto, bb, tree-dp, brute, closed-form")
      ->check(CLI::IsMember({"auto", "bb", "tree-dp", "brute", "closed-form"}));
  lf->add_flag("--no-bound", lf_args.no_bound, "disable the leaf-potential pruning bound");
  lf->add_option("--witness", lf_args.witness_sizes,
                 "also print one optimal vertex set of this size (repeatable)");
  lf->add_flag("--stats", lf_args.stats, "print search statistics");
  lf->add_option("--format", lf_args.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  lf->add_option("--budget", lf_args.budget, "node budget for the bb solver");
  lf->add_option("-o,--output", lf_args.out_path, "output file (default stdout)");

  // reduce-is
  std::string red_input, red_out;
  int red_k = 0;
  auto* red = app.add_subcommand(
      "reduce-is", "reduce an independent-set instance to a leafed-subtree instance");
  red->add_option("input", red_input, "edge-list file ('-' for stdin)")->required();
  red->add_option("k", red_k, "independent set size")->required()
      ->check(CLI::NonNegativeNumber);
  red->add_option("-o,--output", red_out, "output file for the reduced graph");

  // enumerate
  GraphSource enum_src;
  bool enum_list = false;
  auto* en = app.add_subcommand("enumerate", "count (or list) all induced subtrees");
  add_source_options(en, enum_src);
  en->add_flag("--list", enum_list, "print one line per induced subtree");

  // bench
  int bench_n = 0;
  std::string bench_densities, bench_seeds = "1..10", bench_format = "csv";
  unsigned bench_jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* bench = app.add_subcommand(
      "bench", "compare search effort with and without the bound on G(n,p)");
  bench->add_option("n", bench_n, "vertex count")->required()->check(CLI::PositiveNumber);
  bench->add_option("densities", bench_densities, "comma-separated densities, e.g. 0.2,0.8")
      ->required();
  bench->add_option("--seeds", bench_seeds, "seed list '1,2,3' or range '1..5'");
  bench->add_option("--jobs", bench_jobs, "parallel workers");
  bench->add_option("--format", bench_format, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_src, gen_out, gen_format);
    if (lf->parsed()) return run_leaf_function(lf_args);
    if (red->parsed()) return run_reduce(red_input, red_k, red_out);
    if (en->parsed()) return run_enumerate(enum_src, enum_list);
    if (bench->parsed())
      return run_bench(bench_n, bench_densities, bench_seeds, bench_jobs, bench_format);
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const SolverMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotATree& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
