#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtf/coloring.hpp"
#include "rtf/graph.hpp"
#include "rtf/rational.hpp"
#include "rtf/solvers.hpp"

namespace rtf {

// 3-partite host with equal blocks and a density floor.
struct TripartiteHost {
    Graph graph;
    VertexSet z1, z2, z3;
    double gamma = 0;

    int block_size() const { return z1.count(); }
    void validate() const;  // equal blocks partitioning V, gamma in (0,1)

    static TripartiteHost complete(int block, double gamma);
    static TripartiteHost random_density(int block, double density, double gamma,
                                         std::uint64_t seed);
};

// sample count ceil(log n / (6 log(1/gamma))) -- base-free ratio
int drc_sample_count(int block, double gamma);

struct DrcOutcome {
    int q = 0;
    std::vector<int> q2, q3;   // sampled vertices (with repetition)
    VertexSet s_prime;         // common neighborhood inside block one
    std::int64_t bad_pairs = 0;
    VertexSet s;               // s_prime with one endpoint of every bad pair removed
    double target = 0;         // block^{2/3} / 2
    bool target_met = false;
    int attempts = 0;
};

// Dependent random choice: sample q vertices with repetition from each of
// the far blocks, intersect their neighborhoods in block one, then delete
// the higher-indexed endpoint of every low-common-degree pair (scanned
// lexicographically). The size guarantee is existential over samples, so
// the call resamples up to max_retries and keeps the best outcome.
DrcOutcome drc_sample(const TripartiteHost& host, std::uint64_t seed, int max_retries = 64);

// pair degree check: every pair of s has >= gamma^9 * block common
// neighbors in each far block
bool drc_pairs_ok(const TripartiteHost& host, const VertexSet& s);

struct DrcExpectation {
    int q = 0;
    int replicas = 0;
    double mean_sprime = 0, se_sprime = 0;
    double mean_bad = 0, se_bad = 0;
    double exact_sprime = 0;       // sum over v of prod_i (d(v,Z_i)/block)^q
    double min_ratio_bound = 0;    // block * gamma_hat^{2q}
    bool sprime_within_3se = false;
    bool lower_bound_ok = false;   // mean + 3se >= min_ratio_bound
};

// Monte Carlo replica study of the sampled common-neighborhood size against
// its directly computed expectation.
DrcExpectation drc_expectation_mc(const TripartiteHost& host, int replicas,
                                  std::uint64_t seed);

// Random maximal triangle-free graph: insert non-edges in seeded uniform
// order, rejecting any that would close a triangle.
Graph triangle_free_process(int n, std::uint64_t seed);

struct ExtractTrace {
    Graph subgraph;
    VertexSet kept;
    std::vector<int> deleted;  // deletion order
};

// Greedy low-degree peeling: while some vertex has degree <= d * (current
// order), delete the lowest-indexed one. Output satisfies min degree >
// d * order or is empty.
ExtractTrace min_degree_extract(const Graph& g, Ratio d);

struct RefineMove {
    int v = 0, from = 0, to = 0;
    std::int64_t inner_before = 0, inner_after = 0;
};

struct RefineResult {
    Partition parts;
    std::vector<RefineMove> trace;
    bool completed = false;  // false: move cap tripped
    int min_cross_degree = 0;
};

// Move any vertex with at most threshold * n neighbors in a foreign block
// into that block; repeat until stable or the move cap trips.
RefineResult refine_partition(const Graph& g, Partition parts, Ratio threshold = {1, 10},
                              std::int64_t move_cap = 0 /* 0: 10n */);

// Block-density graph over a partition: edge when one class reaches the
// density floor, class one taking priority; weight is the chosen class's
// exact density.
struct WeightedReducedGraph {
    int m = 0;
    std::vector<int> vertex_color;            // from the supplied block tags
    std::vector<int> edge_color;              // m*m, 0 = no edge
    std::vector<long long> weight_num;        // cross edge count
    std::vector<long long> weight_den;        // block size product

    int color(int p, int q) const { return edge_color[p * m + q]; }
    bool has_edge(int p, int q) const { return p != q && color(p, q) != 0; }
    double weight(int p, int q) const {
        return double(weight_num[p * m + q]) / double(weight_den[p * m + q]);
    }
    // weight(p,q) > 1/2 + gamma, exactly
    bool heavy(int p, int q, Ratio gamma) const {
        auto i = std::size_t(p) * m + q;
        return 2 * weight_num[i] * gamma.den > weight_den[i] * (gamma.den + 2 * gamma.num);
    }
};

WeightedReducedGraph reduced_coloring(const Graph& g, const EdgeColoring& c,
                                      const Partition& parts, Ratio gamma,
                                      const std::vector<int>& vertex_tags);

struct GeneralizedCliqueQuery {
    int t = 2;
    Ratio gamma{1, 10};
    int color = 1;
};

struct GeneralizedCliqueWitness {
    std::vector<int> x, y;  // ascending; y subset of x
};

// Exhaustive search for a clique X of color i with a subset Y (vertices of
// color i, |X|+|Y| = t) whose internal edges all weigh more than 1/2+gamma;
// returns the lexicographically least witness.
std::optional<GeneralizedCliqueWitness> find_generalized_clique(
    const WeightedReducedGraph& r, const GeneralizedCliqueQuery& query);

struct ExtractorResult {
    bool relabelled = false;  // colors swapped so class one is the larger
    int x = -1, y = -1, x_prime = -1, y_prime = -1;
    VertexSet big_x, big_y, z, x_prime_nbhd, y_prime_nbhd;
    double alpha_hat = 0;  // |Z|/n
    double beta_hat = 0;   // |X'|/n
    bool fact_check_ok = true;
    VertexSet side_a, side_b;
    std::int64_t cut_edges = 0;
    int cross_min_degree = 0;  // min degree of class one across (A,B)
    std::int64_t e_g2 = 0;
};

// Degree-extremal vertex scan on a two-colored triangle-free-per-class
// graph followed by a max-cut split of the dominant class. Argmax picks
// break ties at the lowest index; asymptotic-regime conclusions are
// reported, not asserted.
ExtractorResult k3k3_extract(const Graph& g, const EdgeColoring& c,
                             bool check_pair_fact = true,
                             std::int64_t node_budget = 400'000'000);

}  // namespace rtf
