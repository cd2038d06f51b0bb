#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtf/graph.hpp"
#include "rtf/solvers.hpp"

namespace rtf {

// Assignment of every edge of a host graph to one of k color classes.
// Colors are 1-based; 0 means uncolored.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int n, int k) : n_(n), k_(k), color_(std::size_t(n) * n, 0) {}

    int order() const { return n_; }
    int colors() const { return k_; }

    int color(int u, int v) const { return color_[idx(u, v)]; }
    void set(int u, int v, int c) { color_[idx(u, v)] = color_[idx(v, u)] = std::uint8_t(c); }
    void unset(int u, int v) { set(u, v, 0); }

    // every host edge colored in [1,k], every non-edge uncolored
    bool covers(const Graph& g) const;

    // spanning subgraph of one color class
    Graph class_graph(int c) const;

    std::int64_t class_size(int c) const;

    // swaps classes a and b
    void relabel(int a, int b);

    // header "n k", then one "u v c" line per edge (u < v, ascending)
    std::string to_text() const;
    static EdgeColoring from_text(const std::string& text);

    bool operator==(const EdgeColoring&) const = default;

private:
    std::size_t idx(int u, int v) const { return std::size_t(u) * n_ + v; }
    int n_ = 0;
    int k_ = 0;
    std::vector<std::uint8_t> color_;
};

// (s_1,...,s_k): color i must stay K_{s_i}-free. s_i = 2 bars color i from
// edges entirely; order is significant (color identity matters).
struct FreenessSpec {
    std::vector<int> sizes;
    int colors() const { return int(sizes.size()); }
    void validate() const;
    std::string to_string() const;  // "3,4"
    static FreenessSpec parse(const std::string& text);
};

struct MonoCliqueWitness {
    int color = 0;
    VertexSet clique;
};

// A monochromatic K_{s_i} in class i, or nullopt when none exists (exact,
// via the clique solver per class).
std::optional<MonoCliqueWitness> mono_clique(const Graph& g, const EdgeColoring& c,
                                             const FreenessSpec& spec,
                                             std::int64_t node_budget = 200'000'000);

struct FreenessResult {
    SolveStatus status = SolveStatus::exact;
    std::optional<EdgeColoring> coloring;  // nullopt + exact = proven none
    std::int64_t nodes = 0;
    bool found() const { return coloring.has_value(); }
    bool proven_none() const { return !coloring && status == SolveStatus::exact; }
};

// Complete backtracking over edge colorings in lexicographic edge order.
// A color that would finish a forbidden clique is pruned; colors with equal
// clique targets get their symmetry broken by first-use order.
FreenessResult freeness_search(const Graph& g, const FreenessSpec& spec,
                               std::int64_t node_budget = 4'000'000'000LL);

struct SplitResult {
    VertexSet side1, side2;
    int alpha1 = 0;  // alpha(G_1[side1]), solver-certified
    int alpha2 = 0;  // alpha(G_2[side2])
    int target = 0;
    bool target_met = false;
    int moves = 0;
};

// Heuristic split of the vertex set aiming for small alpha of color class i
// inside side i; achieved values re-verified with the exact solver. Missing
// the target is an outcome, not an error.
SplitResult split_partition(const Graph& g, const EdgeColoring& c, int target_alpha_cap,
                            int max_rounds = 64);

// Joint vertex+edge coloring of a complete host: no edge shares a color
// with either endpoint, and class i has no edge-monochromatic K_{a_i}.
struct StarColoring {
    int n = 0;
    std::vector<int> vertex_color;  // 1-based colors
    EdgeColoring edge_color;

    bool respects_vertex_rule() const;  // edge color differs from both endpoint colors
    std::string to_text() const;
    static StarColoring from_text(const std::string& text);
};

struct RStarResult {
    int value = 0;  // largest feasible complete-graph order found
    std::optional<StarColoring> witness;
    SolveStatus status = SolveStatus::exact;  // incomplete: cap or budget hit
    std::int64_t nodes = 0;
};

// Largest N <= cap admitting a StarColoring for (a_1,...,a_k); feasibility
// is monotone decreasing in N, so the scan stops at the first failure.
RStarResult r_star_search(int k, const std::vector<int>& sizes, int cap = 12,
                          std::int64_t node_budget = 2'000'000'000LL);

namespace naive {
// brute force over all k^{e(G)} colorings
bool freeness_by_enumeration(const Graph& g, const FreenessSpec& spec);
}  // namespace naive

}  // namespace rtf
