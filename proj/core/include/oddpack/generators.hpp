#pragma once

#include <cstdint>
#include <string>

#include "oddpack/graph.hpp"
#include "oddpack/pbm.hpp"

namespace oddpack {

struct GeneratedSystem {
  Graph graph;
  TerminalSystem system;
};

/// Complete bipartite graph with sides A = 0..side-1 and B = side..2side-1,
/// a clique on the first 2k-1 vertices of A, and inside B a clique on the 2k
/// terminals s_i = side+2i, t_i = side+2i+1 minus the edges s_i t_i. Every
/// pair demands an odd path. Requires side >= 2k.
GeneratedSystem gen_non_parity_linked(int k, int side);

struct TightCover {
  Graph graph;
  VertexSet s;
};

/// Complete bipartite graph (same layout) plus a clique on the first 2k-1
/// vertices of A and a clique on the first tau vertices of B; S is the first
/// k vertices of B. Requires 1 <= tau <= k and side >= 2k-1.
TightCover gen_tight_cover(int k, int tau, int side);

enum class Family { non_parity_linked, tight_cover, random_gnp, random_dense, file };

const char* to_string(Family f);
Family family_from_string(const std::string& name);

/// Parameters of one generated instance; unused fields are ignored.
struct InstanceSpec {
  Family family = Family::random_gnp;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int k = 0;
  int tau = 0;
  int side = 0;
  std::string path;
};

/// G(n, p) for random_gnp, its complement for random_dense. Deterministic in
/// (family, n, p, seed). Throws InputError for other families or bad parameters.
Graph sample_random(const InstanceSpec& spec);

/// Any family; `file` reads the DIMACS-like format from spec.path.
Graph generate(const InstanceSpec& spec);

}  // namespace oddpack
