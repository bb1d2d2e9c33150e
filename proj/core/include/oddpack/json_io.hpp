#pragma once

#include <nlohmann/json.hpp>

#include "oddpack/covers.hpp"
#include "oddpack/graph.hpp"
#include "oddpack/linkage.hpp"
#include "oddpack/packing.hpp"
#include "oddpack/partitions.hpp"
#include "oddpack/pbm.hpp"

namespace oddpack {

using json = nlohmann::json;

/// Serialisers shared by the command line tool and the sweep reports.
/// `base` is added to every vertex id and pair index (1 for user-facing output).
json to_json(const Graph& g, int base = 0);
json to_json(const VertexSet& s, int base = 0);
json to_json(const std::vector<Vertex>& seq, int base = 0);
json to_json(const Cycle& c, int base = 0);
json to_json(const Matching& m, int base = 0);
json to_json(const Partition& p, int base = 0);
json to_json(const NicePartition& np, int base = 0);
json to_json(const Linkage& l, int base = 0);
json to_json(const CyclePacking& p, int base = 0);
json to_json(const DichotomyResult& r, int base = 0);
json to_json(const ZPathCertificate& c, int base = 0);
json to_json(const MatchingFormResult& r, int base = 0);
json to_json(const TerminalSystem& ts, int base = 0);

}  // namespace oddpack
