#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rtf/bits.hpp"

namespace rtf {

// Undirected simple graph on vertices 0..n-1 with per-vertex neighbor
// bitsets. Values are treated as immutable once a builder returns them;
// add_edge exists for builders only.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int order() const { return n_; }
    std::int64_t size() const { return m_; }

    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int degree_in(int v, const VertexSet& s) const { return adj_[v].count_and(s); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    int min_degree() const {
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return n_ ? d : 0;
    }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (v > u) out.emplace_back(u, v);
            });
        return out;
    }

    Graph complement() const {
        Graph c(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adj_[u].test(v)) c.add_edge(u, v);
        return c;
    }

    // Induced subgraph; old_of[i] is the original label of new vertex i.
    Graph induced(const VertexSet& s, std::vector<int>* old_of = nullptr) const {
        std::vector<int> verts = s.to_vector();
        std::vector<int> idx(n_, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = int(i);
        Graph h(int(verts.size()));
        for (int u : verts)
            adj_[u].for_each([&](int v) {
                if (v > u && idx[v] >= 0) h.add_edge(idx[u], idx[v]);
            });
        if (old_of) *old_of = std::move(verts);
        return h;
    }

    std::int64_t edges_within(const VertexSet& s) const {
        std::int64_t e = 0;
        s.for_each([&](int v) { e += adj_[v].count_and(s); });
        return e / 2;
    }

    std::int64_t edges_between(const VertexSet& a, const VertexSet& b) const {
        std::int64_t e = 0;
        a.for_each([&](int v) { e += adj_[v].count_and(b); });
        return e;
    }

    // adjacency symmetric, loop-free, cached edge count consistent
    bool is_consistent() const {
        std::int64_t deg_sum = 0;
        for (int u = 0; u < n_; ++u) {
            if (adj_[u].test(u)) return false;
            deg_sum += degree(u);
            for (int v = u + 1; v < n_; ++v)
                if (adj_[u].test(v) != adj_[v].test(u)) return false;
        }
        return deg_sum == 2 * m_;
    }

    std::vector<VertexSet> components() const {
        std::vector<VertexSet> comps;
        VertexSet left = vertices();
        while (!left.empty()) {
            int root = left.first();
            VertexSet comp(n_), frontier(n_);
            comp.set(root);
            frontier.set(root);
            while (!frontier.empty()) {
                VertexSet next(n_);
                frontier.for_each([&](int v) { next |= adj_[v]; });
                next -= comp;
                comp |= next;
                frontier = next;
            }
            comps.push_back(comp);
            left -= comp;
        }
        return comps;
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<VertexSet> adj_;
};

// Ordered list of disjoint vertex blocks covering 0..n-1.
class Partition {
public:
    Partition() = default;
    Partition(int universe, std::vector<VertexSet> blocks)
        : n_(universe), blocks_(std::move(blocks)) {
        rebuild_index();
    }

    static Partition round_robin(int n, int p) {
        std::vector<VertexSet> blocks(p, VertexSet(n));
        for (int v = 0; v < n; ++v) blocks[v % p].set(v);
        return Partition(n, std::move(blocks));
    }

    // consecutive ranges of the given sizes
    static Partition contiguous(int n, const std::vector<int>& sizes) {
        std::vector<VertexSet> blocks;
        int at = 0;
        for (int s : sizes) {
            VertexSet b(n);
            for (int i = 0; i < s; ++i) b.set(at++);
            blocks.push_back(std::move(b));
        }
        if (at != n) throw std::invalid_argument("sizes do not cover universe");
        return Partition(n, std::move(blocks));
    }

    int universe() const { return n_; }
    int block_count() const { return int(blocks_.size()); }
    const VertexSet& block(int i) const { return blocks_[i]; }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    int block_of(int v) const { return block_of_[v]; }

    void move_vertex(int v, int to) {
        blocks_[block_of_[v]].reset(v);
        blocks_[to].set(v);
        block_of_[v] = to;
    }

    bool is_valid() const {
        VertexSet seen(n_);
        for (const auto& b : blocks_) {
            if (b.universe() != n_) return false;
            if (seen.intersects(b)) return false;
            seen |= b;
        }
        return seen == VertexSet::full(n_);
    }

    std::vector<int> sizes() const {
        std::vector<int> s;
        s.reserve(blocks_.size());
        for (const auto& b : blocks_) s.push_back(b.count());
        return s;
    }

private:
    void rebuild_index() {
        block_of_.assign(n_, -1);
        for (int i = 0; i < int(blocks_.size()); ++i)
            blocks_[i].for_each([&](int v) { block_of_[v] = i; });
        for (int v = 0; v < n_; ++v)
            if (block_of_[v] < 0) throw std::invalid_argument("partition does not cover universe");
    }

    int n_ = 0;
    std::vector<VertexSet> blocks_;
    std::vector<int> block_of_;
};

// crossing edges of the partition
std::int64_t crossing_edges(const Graph& g, const Partition& p);
// edges inside blocks
std::int64_t inner_edges(const Graph& g, const Partition& p);
// min over v and blocks j != block(v) of d(v, block j)
int min_crossing_degree(const Graph& g, const Partition& p);

}  // namespace rtf
