#include "rtf/generators.hpp"

#include <stdexcept>

namespace rtf {

TuranGraph turan_graph(int n, int p) {
    if (p < 1 || p > n) throw std::invalid_argument("turan_graph: need 1 <= p <= n");
    std::vector<int> sizes(p, n / p);
    for (int i = 0; i < n % p; ++i) ++sizes[i];
    Partition parts = Partition::contiguous(n, sizes);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (parts.block_of(u) != parts.block_of(v)) g.add_edge(u, v);
    return {std::move(g), std::move(parts)};
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph andrasfai_graph(int k) {
    if (k < 1) throw std::invalid_argument("andrasfai_graph: need k >= 1");
    int n = 3 * k - 1;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = (v - u) % n;
            if (d > n - d) d = n - d;
            // difference set {k,...,2k-1}, folded to [1, n/2]
            if (d >= k) g.add_edge(u, v);
        }
    return g;
}

Graph blow_up(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("blow_up: need t >= 1");
    int n = g.order();
    Graph h(n * t);
    for (auto [u, v] : g.edges())
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) h.add_edge(u * t + i, v * t + j);
    return h;
}

CloneResult clone_vertices(const Graph& g, const VertexSet& s) {
    int n = g.order();
    std::vector<int> originals = s.to_vector();
    Graph h(n + int(originals.size()));
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (std::size_t i = 0; i < originals.size(); ++i) {
        int a = n + int(i);
        g.neighbors(originals[i]).for_each([&](int w) { h.add_edge(a, w); });
    }
    return {std::move(h), std::move(originals)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

void overlay(Graph& g, const Graph& h, int offset) {
    if (offset + h.order() > g.order()) throw std::invalid_argument("overlay: range out of bounds");
    for (auto [u, v] : h.edges()) g.add_edge(offset + u, offset + v);
}

}  // namespace rtf
