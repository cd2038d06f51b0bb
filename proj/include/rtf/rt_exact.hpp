#pragma once

#include <cstdint>
#include <optional>

#include "rtf/coloring.hpp"
#include "rtf/graph.hpp"

namespace rtf {

struct RtQuery {
    int n = 1;
    FreenessSpec spec;
    int alpha_cap = 1;
};

struct RtResult {
    enum class Kind { solved, infeasible, incomplete };
    Kind kind = Kind::infeasible;
    std::int64_t max_edges = -1;
    std::optional<Graph> witness;
    std::optional<EdgeColoring> witness_coloring;
    std::int64_t nodes = 0;
    std::int64_t candidates = 0;  // isomorph-free graphs meeting the alpha cap
};

// Exact small-order extremal search: enumerates graphs up to isomorphism by
// vertex augmentation with canonical-code deduplication, prunes on the
// independence cap level by level (it is monotone under induced subgraphs),
// and certifies candidates with the coloring search. Capped at n <= 10.
RtResult rt_exact(const RtQuery& q, std::int64_t node_budget = 500'000'000);

// max-code canonical form used by the enumerator (exposed for tests)
std::string canonical_code(const Graph& g);

}  // namespace rtf
