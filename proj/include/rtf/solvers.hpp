#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rtf/graph.hpp"

namespace rtf {

// Exactness is first-class: operations never silently degrade, they report
// incomplete instead.
enum class SolveStatus { exact, incomplete };

struct SolverLimits {
    std::int64_t node_budget = 200'000'000;
    int exact_cap = 120;  // alpha/clique exact mode size gate when no budget given
};

struct CliqueCertificate {
    int size = 0;
    VertexSet witness;
    SolveStatus status = SolveStatus::exact;
    std::int64_t nodes = 0;
};

// Maximum clique via branch and bound with greedy-coloring upper bounds and
// degree-order branching; ties broken by lowest vertex index.
CliqueCertificate max_clique(const Graph& g, const SolverLimits& lim = {});

// Decision variant with early exit; nullopt when no K_k exists (exact).
std::optional<VertexSet> find_clique(const Graph& g, int k,
                                     std::int64_t node_budget = 200'000'000,
                                     SolveStatus* status = nullptr);

inline bool is_triangle_free(const Graph& g) { return !find_clique(g, 3).has_value(); }

struct AlphaCertificate {
    int lower = 0;            // |witness|
    int upper = 0;            // certified upper bound
    VertexSet witness;        // independent set of size lower
    SolveStatus status = SolveStatus::exact;
    std::int64_t nodes = 0;
    bool exact() const { return status == SolveStatus::exact; }
    int value() const { return lower; }  // meaningful when exact()
};

enum class AlphaMode { exact, bound };

struct AlphaOptions {
    AlphaMode mode = AlphaMode::exact;
    std::int64_t node_budget = 0;  // 0: default budget, but exact mode then requires n <= cap
    int exact_cap = 120;
    std::uint64_t seed = 1;  // bound-mode multistart
    int starts = 8;
};

// Independence number. Exact mode decomposes into connected components and
// certifies via the clique solver; bound mode returns a greedy/local-search
// witness and a clique-cover upper bound.
AlphaCertificate alpha(const Graph& g, const AlphaOptions& opts = {});

struct TrianglePacking {
    std::vector<std::array<int, 3>> triangles;
    SolveStatus status = SolveStatus::exact;
    std::int64_t nodes = 0;
    int size() const { return int(triangles.size()); }
};

enum class PackingMode { greedy, exact };

// Edge-disjoint triangle packing. Greedy returns a maximal packing (lower
// bound); exact maximizes over the triangle hypergraph by branch and bound.
// Exact mode refuses instances with more than triangle_cap triangles.
TrianglePacking triangle_packing(const Graph& g, PackingMode mode,
                                 int triangle_cap = 5000,
                                 std::int64_t node_budget = 500'000'000);

std::vector<std::array<int, 3>> enumerate_triangles(const Graph& g);

enum class CutMode { local, exact };

struct CutOptions {
    int restarts = 0;         // local mode: extra seeded random starts
    std::uint64_t seed = 1;
    int exact_cap = 16;
};

struct CutResult {
    Partition parts;
    std::int64_t crossing = 0;
    SolveStatus status = SolveStatus::exact;
};

// Max-cut p-partition. Local mode starts from the round-robin partition and
// applies first-improvement single-vertex moves in vertex order until no
// move gains; exact mode enumerates assignments with block-symmetry pruning.
CutResult max_cut_partition(const Graph& g, int p, CutMode mode, const CutOptions& opts = {});

// true iff no single-vertex move increases the crossing count
bool is_cut_local_optimum(const Graph& g, const Partition& parts);

struct PPartiteDistance {
    Partition parts;
    std::int64_t distance = 0;  // inner edges + missing cross edges
    SolveStatus status = SolveStatus::exact;
};

// Edit distance to the nearest complete p-partite graph over vertex
// partitions (deletions inside blocks plus additions across blocks).
PPartiteDistance p_partite_distance(const Graph& g, int p, CutMode mode,
                                    const CutOptions& opts = {});

std::int64_t p_partite_cost(const Graph& g, const Partition& parts);

struct ShearerVerdict {
    bool applicable = false;  // input must be triangle-free
    int k = 0;                // largest k with 2k^2/log k <= n (k=1 trivial)
    int alpha_value = 0;
    bool holds = false;  // alpha >= k
};

// Triangle-free sanity oracle: any n-vertex triangle-free graph has an
// independent set of size k whenever n >= 2k^2/log k (natural log here;
// the bound direction is conservative at these sizes either way).
ShearerVerdict shearer_check(const Graph& g, const SolverLimits& lim = {});

// --- oracle-grade naive routines (exponential; for cross-checks) ---------
namespace naive {
int alpha(const Graph& g);                    // subset enumeration, n <= ~24
int max_clique(const Graph& g);               // subset enumeration
int triangle_packing(const Graph& g);         // plain DFS over triangle list
std::int64_t max_cut(const Graph& g, int p);  // all assignments
std::int64_t p_partite_distance(const Graph& g, int p);
}  // namespace naive

}  // namespace rtf
