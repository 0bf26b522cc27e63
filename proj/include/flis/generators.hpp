#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flis/errors.hpp"
#include "flis/graph.hpp"

namespace flis {

enum class Family {
  Complete,
  Cycle,
  Wheel,
  CompleteBipartite,
  Hypercube,
  Path,
  Star,
  RandomGnp,
  RandomTree,
};

inline std::optional<Family> parse_family(std::string_view name) {
  std::string s(name);
  for (char& c : s)
    if (c == '-') c = '_';
  if (s == "complete") return Family::Complete;
  if (s == "cycle") return Family::Cycle;
  if (s == "wheel") return Family::Wheel;
  if (s == "complete_bipartite") return Family::CompleteBipartite;
  if (s == "hypercube") return Family::Hypercube;
  if (s == "path") return Family::Path;
  if (s == "star") return Family::Star;
  if (s == "random_gnp") return Family::RandomGnp;
  if (s == "random_tree") return Family::RandomTree;
  return std::nullopt;
}

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Complete: return "complete";
    case Family::Cycle: return "cycle";
    case Family::Wheel: return "wheel";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::Hypercube: return "hypercube";
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::RandomGnp: return "random_gnp";
    case Family::RandomTree: return "random_tree";
  }
  return "?";
}

namespace families {

inline Graph complete(VertexId n) {
  if (n < 1) throw InvalidParams("complete: need n >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline Graph path(VertexId n) {
  if (n < 1) throw InvalidParams("path: need n >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle(VertexId n) {
  if (n < 3) throw InvalidParams("cycle: need n >= 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

/// Wheel with an n-vertex rim (vertices 0..n-1) and hub at index n.
inline Graph wheel(VertexId rim) {
  if (rim < 3) throw InvalidParams("wheel: need rim >= 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u + 1 < rim; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, rim - 1);
  for (VertexId u = 0; u < rim; ++u) edges.emplace_back(u, rim);
  return Graph::from_edges(rim + 1, edges);
}

/// Parts are [0,p) and [p,p+q).
inline Graph complete_bipartite(VertexId p, VertexId q) {
  if (p < 1 || q < 1) throw InvalidParams("complete_bipartite: need p,q >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < p; ++u)
    for (VertexId v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  return Graph::from_edges(p + q, edges);
}

/// Star K_{1,rays} with the center at index 0.
inline Graph star(VertexId rays) {
  if (rays < 1) throw InvalidParams("star: need rays >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v <= rays; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(rays + 1, edges);
}

/// 2^d vertices labelled by their binary expansion; adjacent iff the labels
/// differ in exactly one bit.
inline Graph hypercube(int d) {
  if (d < 1 || d > 20) throw InvalidParams("hypercube: need 1 <= d <= 20");
  const VertexId n = VertexId{1} << d;
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(n) * d / 2);
  for (VertexId u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b) {
      VertexId v = u ^ (VertexId{1} << b);
      if (u < v) edges.emplace_back(u, v);
    }
  return Graph::from_edges(n, edges);
}

namespace detail {
// mt19937_64 is seeded directly and sampled without std distributions so the
// output stream is identical across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
  return rng() % k;
}
}  // namespace detail

/// Each of the C(n,2) pairs is an edge independently with probability p.
inline Graph random_gnp(VertexId n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidParams("random_gnp: need n >= 1");
  if (p < 0.0 || p > 1.0) throw InvalidParams("random_gnp: need 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (detail::uniform01(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Uniform labelled tree via a random Pruefer sequence.
inline Graph random_tree(VertexId n, std::uint64_t seed) {
  if (n < 1) throw InvalidParams("random_tree: need n >= 1");
  if (n == 1) return Graph(1);
  std::mt19937_64 rng(seed);
  std::vector<VertexId> pruefer(static_cast<std::size_t>(n) - 2);
  for (auto& s : pruefer)
    s = static_cast<VertexId>(detail::uniform_below(rng, static_cast<std::uint64_t>(n)));
  std::vector<VertexId> deg(n, 1);
  for (VertexId s : pruefer) ++deg[s];
  // smallest-leaf-first decode
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  std::vector<char> used(n, 0);
  VertexId ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  VertexId leaf = ptr;
  for (VertexId s : pruefer) {
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      while (deg[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::from_edges(n, edges);
}

}  // namespace families

/// String-tag dispatcher used by the CLI. Integer parameters are passed as
/// doubles and checked for integrality; random families consume `seed`.
inline Graph generate_family(Family f, std::span<const double> params,
                             std::optional<std::uint64_t> seed = std::nullopt) {
  auto as_int = [](double x, const char* what) -> VertexId {
    auto v = static_cast<long long>(x);
    if (static_cast<double>(v) != x) throw InvalidParams(std::string(what) + ": expected an integer");
    if (v < -(1LL << 30) || v > (1LL << 30)) throw InvalidParams(std::string(what) + ": out of range");
    return static_cast<VertexId>(v);
  };
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidParams(std::string(family_name(f)) + ": expected " + std::to_string(k) +
                          " parameter(s), got " + std::to_string(params.size()));
  };
  switch (f) {
    case Family::Complete: need(1); return families::complete(as_int(params[0], "n"));
    case Family::Cycle: need(1); return families::cycle(as_int(params[0], "n"));
    case Family::Wheel: need(1); return families::wheel(as_int(params[0], "n"));
    case Family::CompleteBipartite:
      need(2);
      return families::complete_bipartite(as_int(params[0], "p"), as_int(params[1], "q"));
    case Family::Hypercube: need(1); return families::hypercube(as_int(params[0], "d"));
    case Family::Path: need(1); return families::path(as_int(params[0], "n"));
    case Family::Star: need(1); return families::star(as_int(params[0], "q"));
    case Family::RandomGnp:
      need(2);
      return families::random_gnp(as_int(params[0], "n"), params[1], seed.value_or(0));
    case Family::RandomTree:
      need(1);
      return families::random_tree(as_int(params[0], "n"), seed.value_or(0));
  }
  throw InvalidParams("unknown family");
}

}  // namespace flis
