#pragma once

#include <utility>
#include <vector>

#include "rtf/graph.hpp"

namespace rtf {

struct TuranGraph {
    Graph graph;
    Partition parts;
};

// Balanced complete p-partite graph on n vertices; parts of size
// ceil(n/p) first, laid out as contiguous vertex ranges.
TuranGraph turan_graph(int n, int p);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph petersen_graph();

// Cayley-type triangle-free graph on 3k-1 vertices, k-regular with
// independence number k: i ~ j iff (i - j) mod (3k-1) lies in [k, 2k-1].
Graph andrasfai_graph(int k);

// Every vertex becomes an independent t-set; edges become complete t x t
// bipartite blocks. New vertices are laid out block-by-block in original
// vertex order, so vertex v's block is [v*t, (v+1)*t).
Graph blow_up(const Graph& g, int t);

struct CloneResult {
    Graph graph;
    // clone_of[i] = original vertex cloned by new vertex old_n + i
    std::vector<int> clone_of;
};

// Adds one new vertex per element of s, each inheriting the open
// neighborhood of its original. Clones are mutually non-adjacent and not
// adjacent to their originals.
CloneResult clone_vertices(const Graph& g, const VertexSet& s);

// Disjoint union placing b after a.
Graph disjoint_union(const Graph& a, const Graph& b);

// Copies h onto the vertex range [offset, offset + h.order()) of g.
void overlay(Graph& g, const Graph& h, int offset);

}  // namespace rtf
