#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rtf/coloring.hpp"
#include "rtf/graph.hpp"
#include "rtf/solvers.hpp"

namespace rtf {

// d-regular triangle-free graph with solver-certified independence number.
struct FndGraph {
    Graph graph;
    int d = 0;
    AlphaCertificate alpha_cert;
    std::string source;
    int order() const { return graph.order(); }
};

enum class FndStrategy { c5_blowup, andrasfai_blowup, annealed };

struct FndOptions {
    FndStrategy strategy = FndStrategy::c5_blowup;
    int alpha_cap = 0;          // annealed: stop when alpha <= cap (0: aim for alpha == d)
    std::uint64_t seed = 1;
    int swap_budget = 20000;    // annealed local moves
    std::int64_t alpha_budget = 200'000'000;
};

// Triangle-free d-regular provider. The blow-up strategies are exact
// families (alpha == d by construction, still solver-certified); annealing
// is best effort and throws when it cannot reach the target within budget.
FndGraph fnd_provider(int n, int d_target, const FndOptions& opts = {});

// Assembled lower-bound instance: graph, prescribed 2-coloring, part
// structure, the closed-form edge ledger, and verification artifacts.
struct ConstructionReport {
    std::string family;
    Graph graph;
    EdgeColoring coloring;
    Partition parts;
    FreenessSpec target;
    std::int64_t predicted_edges = 0;
    std::int64_t actual_edges = 0;
    int inner_degree = 0;  // d of the regular inner graphs (0 when mixed)
    int s_param = 0;       // clique parameter for the Turan-plus-inner families
    AlphaCertificate alpha_cert;
    std::optional<MonoCliqueWitness> freeness_violation;  // nullopt = verified free

    bool ledger_ok() const { return predicted_edges == actual_edges; }
    bool freeness_ok() const { return !freeness_violation.has_value(); }
};

struct BuildOptions {
    bool verify_freeness = true;
    bool verify_alpha = true;
    std::int64_t node_budget = 400'000'000;
};

// Two balanced parts, a triangle-free graph inside each; inner edges color
// 1, crossing edges color 2. Ledger: e(T_2(n)) + e(F_a) + e(F_b).
ConstructionReport build_k3k3(int n, const FndGraph& side1, const FndGraph& side2,
                              const BuildOptions& opts = {});

// Five parts with inner graphs; cyclically adjacent pairs and inner edges
// color 2, diagonal pairs color 1. Ledger: e(T_5(n)) + 5 e(F).
ConstructionReport build_k3k5(int n, const std::vector<FndGraph>& fs,
                              const BuildOptions& opts = {});

// Three parts; part one carries f2 plus a clone set A of the independent
// set B plus the complete [A,B] join plus isolated padding. Ledger:
// e(T_3(n)) + 2 e(f1) + e(f2) + 2|B|^2.
ConstructionReport build_k3k4(int n, const FndGraph& f1, const FndGraph& f2,
                              const VertexSet& b_set, const BuildOptions& opts = {});

// Six parts; part six carries f2 plus three clone sets of the first half of
// the independent set I plus a pentagon pattern over the five I-blocks plus
// padding. Ledger: e(T_6(n)) + 5 e(f1) + e(f2) + (3/2)d2^2 + 5(d2/2)^2.
ConstructionReport build_k3k6(int n, const FndGraph& f1, const FndGraph& f2,
                              const VertexSet& i_set, const BuildOptions& opts = {});

enum class TargetParity { odd, even };

using HProvider = std::function<Graph(int nv, std::uint64_t seed)>;

// Turan-plus-inner lower-bound instance for (K_3, K_{2s-1}) or (K_3, K_{2s}):
// t parts with triangle-free inner graphs, crossing pairs colored by a
// (K_3,K_s)-free coloring of the complete pattern graph.
ConstructionReport build_thm12_lower(int n, int s, TargetParity parity, const HProvider& h,
                                     std::uint64_t seed = 1, const BuildOptions& opts = {});

// Classical Ramsey anchors used by the builders (s in [2,5]).
int ramsey_r3(int s);

}  // namespace rtf
