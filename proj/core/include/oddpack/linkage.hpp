#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddpack/budget.hpp"
#include "oddpack/graph.hpp"
#include "oddpack/partitions.hpp"
#include "oddpack/pbm.hpp"

namespace oddpack {

/// Disjoint paths; path i runs from pairs[i].s to pairs[i].t.
struct Linkage {
  std::vector<std::vector<Vertex>> paths;

  std::vector<Parity> parities() const;
};

/// Endpoints, adjacency, global vertex-disjointness and (optionally) the
/// demanded parities. On failure `why` names the first violation.
bool validate_linkage(const Graph& g, const TerminalSystem& ts, const Linkage& linkage, bool check_parity = true,
                      std::string* why = nullptr);

/// Exhaustive k-linkage search; parity demands are ignored.
std::optional<Linkage> find_linkage(const Graph& g, const TerminalSystem& ts, const Budget& budget = {});

/// Exhaustive search honouring the parity demands of ts.
std::optional<Linkage> find_parity_linkage(const Graph& g, const TerminalSystem& ts, const Budget& budget = {});

struct AssemblyOptions {
  /// Largest cover size (exclusive) accepted; 0 means 8k.
  int small_cover_threshold = 0;
  /// Number of primed-neighbour selections tried before giving up.
  int max_attempts = 256;
  Budget budget{};
};

/// Builds parity paths from a parity breaking matching: every terminal (and
/// every matching vertex used for a parity flip) gets a primed neighbour on
/// the opposite side outside the terminals and the cover, the primed vertices
/// are linked inside g - (T ∪ X), and each path is spliced together.
/// Throws PreconditionError on an invalid matching or a cover at or above the threshold.
std::optional<Linkage> assemble_parity_paths(const Graph& g, const NicePartition& np, const TerminalSystem& ts,
                                             const Matching& m, const AssemblyOptions& options = {});

/// Induced subgraph that is 2k-connected with at least 5k|V(H)| edges, found by
/// peeling low-degree vertices and splitting on minimum separators.
std::optional<Subgraph> dense_subgraph(const Graph& g, int k, const Budget& budget = {});

/// Path whose vertices meet Z exactly in its two ends.
struct ZPath {
  std::vector<Vertex> vertices;
};

bool is_odd_z_path(const Graph& g, const VertexSet& z, const ZPath& path);

struct ZPathCertificate {
  int ell = 0;
  std::vector<ZPath> packing;            // ell disjoint odd Z-paths, when found
  std::optional<VertexSet> hitting_set;  // minimum set meeting every odd Z-path otherwise
  bool violation = false;                // hitting set larger than 2*ell-2

  bool packed() const noexcept { return !packing.empty(); }
};

/// Packing of ell disjoint odd Z-paths, else a minimum hitting set. ell must be positive.
ZPathCertificate odd_z_path_dichotomy(const Graph& g, const VertexSet& z, int ell, const Budget& budget = {});

}  // namespace oddpack
