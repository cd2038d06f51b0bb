#include "rtf/graph.hpp"

namespace rtf {

std::int64_t crossing_edges(const Graph& g, const Partition& p) {
    return g.size() - inner_edges(g, p);
}

std::int64_t inner_edges(const Graph& g, const Partition& p) {
    std::int64_t e = 0;
    for (const auto& b : p.blocks()) e += g.edges_within(b);
    return e;
}

int min_crossing_degree(const Graph& g, const Partition& p) {
    int best = g.order();
    for (int v = 0; v < g.order(); ++v)
        for (int j = 0; j < p.block_count(); ++j) {
            if (j == p.block_of(v)) continue;
            best = std::min(best, g.degree_in(v, p.block(j)));
        }
    return best;
}

}  // namespace rtf
