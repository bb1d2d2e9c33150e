#include "oddpack/generators.hpp"

#include <random>
#include <string>

#include "oddpack/dimacs.hpp"
#include "oddpack/errors.hpp"

namespace oddpack {

namespace {

void add_bipartite(std::vector<Edge>& edges, int side) {
  for (int a = 0; a < side; ++a) {
    for (int b = side; b < 2 * side; ++b) edges.emplace_back(a, b);
  }
}

void add_clique(std::vector<Edge>& edges, int first, int count) {
  for (int i = first; i < first + count; ++i) {
    for (int j = i + 1; j < first + count; ++j) edges.emplace_back(i, j);
  }
}

// Uniform double in [0,1) built from the top 53 bits, identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

GeneratedSystem gen_non_parity_linked(int k, int side) {
  if (k < 1) throw InputError("k must be at least 1");
  if (side < 2 * k) throw InputError("side size must be at least 2k");
  std::vector<Edge> edges;
  add_bipartite(edges, side);
  add_clique(edges, 0, 2 * k - 1);
  std::vector<TerminalPair> pairs;
  for (int i = 0; i < k; ++i) pairs.push_back({side + 2 * i, side + 2 * i + 1});
  for (int i = side; i < side + 2 * k; ++i) {
    for (int j = i + 1; j < side + 2 * k; ++j) {
      const bool matched = (i - side) % 2 == 0 && j == i + 1;
      if (!matched) edges.emplace_back(i, j);
    }
  }
  return {Graph(2 * side, edges), TerminalSystem::all_demanded(std::move(pairs), Parity::odd)};
}

TightCover gen_tight_cover(int k, int tau, int side) {
  if (k < 1) throw InputError("k must be at least 1");
  if (tau < 1 || tau > k) throw InputError("tau must lie in 1..k");
  if (side < 2 * k - 1 || side < k) throw InputError("side size must be at least max(2k-1, k)");
  std::vector<Edge> edges;
  add_bipartite(edges, side);
  add_clique(edges, 0, 2 * k - 1);
  add_clique(edges, side, tau);
  std::vector<Vertex> s;
  for (int i = 0; i < k; ++i) s.push_back(side + i);
  return {Graph(2 * side, edges), VertexSet(std::move(s))};
}

const char* to_string(Family f) {
  switch (f) {
    case Family::non_parity_linked:
      return "nonParityLinked";
    case Family::tight_cover:
      return "tightCover";
    case Family::random_gnp:
      return "randomGnp";
    case Family::random_dense:
      return "randomDense";
    case Family::file:
      return "file";
  }
  return "file";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::non_parity_linked, Family::tight_cover, Family::random_gnp, Family::random_dense,
                   Family::file}) {
    if (name == to_string(f)) return f;
  }
  throw InputError("unknown family '" + name + "'");
}

Graph sample_random(const InstanceSpec& spec) {
  if (spec.family != Family::random_gnp && spec.family != Family::random_dense) {
    throw InputError("sample_random needs a random family");
  }
  if (spec.n < 0) throw InputError("n must be non-negative");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InputError("p must lie in [0,1]");
  std::mt19937_64 rng(spec.seed);
  const bool keep_on_hit = spec.family == Family::random_gnp;
  std::vector<Edge> edges;
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      const bool hit = unit(rng) < spec.p;
      if (hit == keep_on_hit) edges.emplace_back(u, v);
    }
  }
  return Graph(spec.n, edges);
}

Graph generate(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::non_parity_linked:
      return gen_non_parity_linked(spec.k, spec.side).graph;
    case Family::tight_cover:
      return gen_tight_cover(spec.k, spec.tau, spec.side).graph;
    case Family::random_gnp:
    case Family::random_dense:
      return sample_random(spec);
    case Family::file:
      return read_dimacs_file(spec.path);
  }
  throw InputError("unknown family");
}

}  // namespace oddpack
