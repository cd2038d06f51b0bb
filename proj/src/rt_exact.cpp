#include "rtf/rt_exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rtf {

namespace {

// rows of the upper triangle in placement order, one bit row per level
struct CodeSearch {
    const Graph& g;
    int n;
    std::vector<int> best;      // best[i]: row bits of vertex at position i
    std::vector<int> placed;
    std::vector<char> used;
    std::int64_t nodes = 0;

    explicit CodeSearch(const Graph& g_)
        : g(g_), n(g_.order()), best(g_.order(), -1), used(g_.order(), 0) {}

    void rec(int pos) {
        if (pos == n) return;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            ++nodes;
            int row = 0;
            for (int i = 0; i < pos; ++i) row = (row << 1) | (g.has_edge(v, placed[i]) ? 1 : 0);
            if (row < best[pos]) continue;  // cannot beat the champion prefix
            if (row > best[pos]) {
                best[pos] = row;
                for (int i = pos + 1; i < n; ++i) best[i] = -1;
            }
            used[v] = 1;
            placed.push_back(v);
            rec(pos + 1);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

Graph graph_from_code(int n, const std::vector<int>& rows) {
    Graph g(n);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (rows[i] >> (i - 1 - j) & 1) g.add_edge(i, j);
    return g;
}

std::string pack_code(int n, const std::vector<int>& rows) {
    std::string s;
    s.push_back(char(n));
    for (int i = 1; i < n; ++i) {
        s.push_back(char(rows[i] & 0xff));
        s.push_back(char((rows[i] >> 8) & 0xff));
    }
    return s;
}

std::vector<int> unpack_code(const std::string& s, int& n) {
    n = int(static_cast<unsigned char>(s[0]));
    std::vector<int> rows(n, 0);
    for (int i = 1; i < n; ++i)
        rows[i] = int(static_cast<unsigned char>(s[1 + 2 * (i - 1)])) |
                  (int(static_cast<unsigned char>(s[2 + 2 * (i - 1)])) << 8);
    return rows;
}

// independence number by subset scan; fine at the n <= 10 cap
int tiny_alpha(const Graph& g) {
    int n = g.order();
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1)
            if (adj[std::countr_zero(rest)] & mask) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace

std::string canonical_code(const Graph& g) {
    CodeSearch search(g);
    search.rec(0);
    return pack_code(g.order(), search.best);
}

RtResult rt_exact(const RtQuery& q, std::int64_t node_budget) {
    q.spec.validate();
    if (q.n < 1 || q.n > 10)
        throw std::invalid_argument("rt_exact: order must lie in [1, 10]");
    if (q.alpha_cap < 1) throw std::invalid_argument("rt_exact: alpha cap must be >= 1");

    RtResult out;
    std::int64_t budget = node_budget;

    // level-by-level augmentation, one canonical representative per class
    std::unordered_set<std::string> level;
    level.insert(canonical_code(Graph(1)));
    for (int k = 2; k <= q.n && budget > 0; ++k) {
        std::unordered_set<std::string> next;
        for (const auto& code : level) {
            int kn = 0;
            auto rows = unpack_code(code, kn);
            Graph parent = graph_from_code(kn, rows);
            for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
                Graph h(k);
                for (auto [u, v] : parent.edges()) h.add_edge(u, v);
                for (int j = 0; j < k - 1; ++j)
                    if (mask >> j & 1) h.add_edge(k - 1, j);
                if (tiny_alpha(h) > q.alpha_cap) continue;  // monotone cap
                CodeSearch cs(h);
                cs.rec(0);
                budget -= cs.nodes;
                out.nodes += cs.nodes;
                next.insert(pack_code(k, cs.best));
                if (budget <= 0) break;
            }
            if (budget <= 0) break;
        }
        level = std::move(next);
    }

    if (budget <= 0) {
        out.kind = RtResult::Kind::incomplete;
        return out;
    }

    // candidates in decreasing size so budget exhaustion keeps the best
    std::vector<std::string> candidates(level.begin(), level.end());
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        int na = 0, nb = 0;
        auto ra = unpack_code(a, na), rb = unpack_code(b, nb);
        auto edge_count = [](const std::vector<int>& rows) {
            int e = 0;
            for (int r : rows) e += std::popcount(unsigned(r));
            return e;
        };
        int ea = edge_count(ra), eb = edge_count(rb);
        return ea != eb ? ea > eb : a < b;
    });
    out.candidates = std::int64_t(candidates.size());

    for (const auto& code : candidates) {
        int kn = 0;
        auto rows = unpack_code(code, kn);
        Graph g = graph_from_code(kn, rows);
        if (g.size() <= out.max_edges) break;  // sorted by edges
        auto res = freeness_search(g, q.spec, budget);
        budget -= res.nodes;
        out.nodes += res.nodes;
        if (res.found()) {
            out.kind = RtResult::Kind::solved;
            out.max_edges = g.size();
            out.witness = g;
            out.witness_coloring = res.coloring;
        } else if (!res.proven_none()) {
            out.kind = RtResult::Kind::incomplete;
            return out;
        }
        if (budget <= 0 && &code != &candidates.back()) {
            out.kind = RtResult::Kind::incomplete;
            return out;
        }
    }
    if (out.max_edges < 0) out.kind = RtResult::Kind::infeasible;
    return out;
}

}  // namespace rtf
