#include "rtf/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rtf/rng.hpp"

namespace rtf {

namespace {

// Branch and bound maximum clique (greedy-coloring bound, candidates kept in
// a static degree-descending order, lowest index breaking ties).
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::int64_t budget, int stop_at)
        : g_(g), n_(g.order()), budget_(budget), stop_at_(stop_at) {}

    // returns best clique found over the candidate set
    void run(const std::vector<int>& cand) {
        std::vector<int> p = cand;
        std::sort(p.begin(), p.end(), [&](int a, int b) {
            int da = g_.degree(a), db = g_.degree(b);
            return da != db ? da > db : a < b;
        });
        expand(p);
    }

    int best = 0;
    std::vector<int> best_clique;
    std::int64_t nodes = 0;
    bool aborted = false;

private:
    bool done() const { return aborted || (stop_at_ > 0 && best >= stop_at_); }

    void color_sort(const std::vector<int>& p, std::vector<int>& ordered,
                    std::vector<int>& bound) {
        ordered.clear();
        bound.clear();
        std::vector<char> colored(p.size(), 0);
        std::size_t left = p.size();
        int c = 0;
        while (left) {
            ++c;
            VertexSet members(n_);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (colored[i]) continue;
                if (g_.neighbors(p[i]).intersects(members)) continue;
                members.set(p[i]);
                colored[i] = 1;
                ordered.push_back(p[i]);
                bound.push_back(c);
                --left;
            }
        }
    }

    void expand(std::vector<int>& p) {
        if (done()) return;
        if (++nodes > budget_) {
            aborted = true;
            return;
        }
        std::vector<int> ordered, bound;
        color_sort(p, ordered, bound);
        for (int i = int(ordered.size()) - 1; i >= 0; --i) {
            if (done()) return;
            if (int(cur_.size()) + bound[i] <= best) return;
            int v = ordered[i];
            cur_.push_back(v);
            std::vector<int> next;
            next.reserve(i);
            for (int j = 0; j < i; ++j)
                if (g_.has_edge(ordered[j], v)) next.push_back(ordered[j]);
            if (next.empty()) {
                if (int(cur_.size()) > best) {
                    best = int(cur_.size());
                    best_clique = cur_;
                }
            } else {
                expand(next);
            }
            cur_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::int64_t budget_;
    int stop_at_;
    std::vector<int> cur_;
};

VertexSet to_set(int n, const std::vector<int>& v) {
    VertexSet s(n);
    for (int x : v) s.set(x);
    return s;
}

// greedy clique partition; the class count bounds alpha from above
int clique_cover_bound(const Graph& g, const VertexSet& within) {
    VertexSet left = within;
    int cliques = 0;
    while (!left.empty()) {
        int v = left.first();
        VertexSet cand = g.neighbors(v) & left;
        left.reset(v);
        while (!cand.empty()) {
            int u = cand.first();
            left.reset(u);
            cand.reset(u);
            cand &= g.neighbors(u);
        }
        ++cliques;
    }
    return cliques;
}

std::vector<int> greedy_independent_set(const Graph& g, Rng* rng) {
    int n = g.order();
    VertexSet alive = VertexSet::full(n);
    std::vector<int> picked;
    while (!alive.empty()) {
        int best_v = -1, best_d = n + 1;
        std::vector<int> ties;
        alive.for_each([&](int v) {
            int d = g.degree_in(v, alive);
            if (d < best_d) {
                best_d = d;
                ties.clear();
                ties.push_back(v);
            } else if (d == best_d) {
                ties.push_back(v);
            }
        });
        best_v = (rng && ties.size() > 1) ? ties[rng->below(int(ties.size()))] : ties.front();
        picked.push_back(best_v);
        alive.reset(best_v);
        alive -= g.neighbors(best_v);
    }
    return picked;
}

// (0,1)-additions plus (1,2)-swaps until a pass makes no progress
void improve_independent_set(const Graph& g, VertexSet& ind, int max_passes = 12) {
    int n = g.order();
    for (int pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
            if (ind.test(u)) continue;
            if (!g.neighbors(u).intersects(ind)) {
                ind.set(u);
                changed = true;
            }
        }
        // candidates whose sole neighbor in the set is w
        std::vector<std::vector<int>> lonely(n);
        for (int u = 0; u < n; ++u) {
            if (ind.test(u)) continue;
            if (g.degree_in(u, ind) == 1) lonely[(g.neighbors(u) & ind).first()].push_back(u);
        }
        for (int w = 0; w < n && !changed; ++w) {
            if (!ind.test(w) || lonely[w].size() < 2) continue;
            const auto& c = lonely[w];
            for (std::size_t i = 0; i < c.size() && !changed; ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (!g.has_edge(c[i], c[j])) {
                        ind.reset(w);
                        ind.set(c[i]);
                        ind.set(c[j]);
                        changed = true;
                        break;
                    }
        }
        if (!changed) break;
    }
}

}  // namespace

CliqueCertificate max_clique(const Graph& g, const SolverLimits& lim) {
    CliqueCertificate out;
    out.witness = VertexSet(g.order());
    std::int64_t budget = lim.node_budget;
    for (const auto& comp : g.components()) {
        if (comp.count() <= out.size) continue;
        CliqueSearch search(g, budget, /*stop_at=*/0);
        search.best = out.size;  // carry the bound across components
        search.best_clique.clear();
        search.run(comp.to_vector());
        out.nodes += search.nodes;
        budget -= search.nodes;
        if (!search.best_clique.empty() && search.best > out.size) {
            out.size = search.best;
            out.witness = to_set(g.order(), search.best_clique);
        }
        if (search.aborted) {
            out.status = SolveStatus::incomplete;
            break;
        }
    }
    if (out.size == 0 && g.order() > 0) {
        out.size = 1;
        out.witness.set(0);
    }
    return out;
}

std::optional<VertexSet> find_clique(const Graph& g, int k, std::int64_t node_budget,
                                     SolveStatus* status) {
    if (status) *status = SolveStatus::exact;
    if (k <= 0) return VertexSet(g.order());
    if (k == 1)
        return g.order() ? std::optional<VertexSet>(to_set(g.order(), {0})) : std::nullopt;
    std::int64_t budget = node_budget;
    for (const auto& comp : g.components()) {
        if (comp.count() < k) continue;
        CliqueSearch search(g, budget, k);
        search.best = k - 1;  // only report cliques of size >= k
        search.run(comp.to_vector());
        budget -= search.nodes;
        if (search.best >= k) {
            std::vector<int> w(search.best_clique.begin(), search.best_clique.begin() + k);
            return to_set(g.order(), w);
        }
        if (search.aborted) {
            if (status) *status = SolveStatus::incomplete;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

AlphaCertificate alpha(const Graph& g, const AlphaOptions& opts) {
    int n = g.order();
    AlphaCertificate out;
    out.witness = VertexSet(n);
    if (n == 0) return out;

    if (opts.mode == AlphaMode::exact) {
        if (opts.node_budget == 0 && n > opts.exact_cap)
            throw std::invalid_argument(
                "alpha: exact mode requires n <= cap or an explicit node budget");
        std::int64_t budget = opts.node_budget ? opts.node_budget : SolverLimits{}.node_budget;
        // independent sets split over components; each component is solved as
        // a clique problem on its complement
        for (const auto& comp : g.components()) {
            std::vector<int> old_of;
            Graph h = g.induced(comp, &old_of);
            Graph hc = h.complement();
            SolverLimits lim;
            lim.node_budget = budget;
            CliqueCertificate c = max_clique(hc, lim);
            out.nodes += c.nodes;
            budget -= c.nodes;
            c.witness.for_each([&](int v) { out.witness.set(old_of[v]); });
            out.lower += c.size;
            if (c.status == SolveStatus::incomplete || budget <= 0) {
                out.status = SolveStatus::incomplete;
                break;
            }
        }
        if (out.status == SolveStatus::exact) {
            out.upper = out.lower;
        } else {
            out.upper = clique_cover_bound(g, g.vertices());
        }
        return out;
    }

    // bound mode: multistart greedy + local improvement, clique-cover upper
    VertexSet best(n);
    for (int s = 0; s < std::max(1, opts.starts); ++s) {
        Rng rng(opts.seed + std::uint64_t(s) * 0x9e3779b97f4a7c15ULL);
        VertexSet ind = to_set(n, greedy_independent_set(g, s == 0 ? nullptr : &rng));
        improve_independent_set(g, ind);
        if (ind.count() > best.count()) best = ind;
    }
    out.witness = best;
    out.lower = best.count();
    out.upper = std::max(out.lower, clique_cover_bound(g, g.vertices()));
    out.status = (out.lower == out.upper) ? SolveStatus::exact : SolveStatus::incomplete;
    return out;
}

std::vector<std::array<int, 3>> enumerate_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> tris;
    int n = g.order();
    for (int u = 0; u < n; ++u)
        g.neighbors(u).for_each([&](int v) {
            if (v <= u) return;
            VertexSet common = g.neighbors(u) & g.neighbors(v);
            common.for_each([&](int w) {
                if (w > v) tris.push_back({u, v, w});
            });
        });
    return tris;
}

namespace {

// Element branching over the triangle hypergraph: pick the lowest-indexed
// edge still carrying a usable triangle, then either dedicate it to one of
// its triangles or bar it from the packing. Bound: a packing of the usable
// remainder needs 3 supported edges per triangle.
struct PackingSearch {
    const std::vector<std::array<int, 3>>& tri_edges;   // edge ids per triangle
    const std::vector<std::vector<int>>& tris_of_edge;  // triangle ids through an edge
    std::vector<char> blocked;                          // used or barred, by edge id
    std::vector<char> mark;                             // scratch, by edge id
    std::int64_t budget;
    std::int64_t nodes = 0;
    bool aborted = false;
    int best = 0;
    std::vector<int> chosen{}, best_chosen{};

    bool usable(int t) const {
        const auto& e = tri_edges[t];
        return !blocked[e[0]] && !blocked[e[1]] && !blocked[e[2]];
    }

    void rec(int count) {
        if (aborted) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (count > best) {
            best = count;
            best_chosen = chosen;
        }
        // one sweep: usable triangle count, supported-edge count, branch edge
        int usable_tris = 0, supported = 0, edge = -1;
        std::vector<int> touched;
        for (std::size_t t = 0; t < tri_edges.size(); ++t) {
            if (!usable(int(t))) continue;
            ++usable_tris;
            for (int k : tri_edges[t])
                if (!mark[k]) {
                    mark[k] = 1;
                    touched.push_back(k);
                    ++supported;
                    if (edge < 0 || k < edge) edge = k;
                }
        }
        for (int k : touched) mark[k] = 0;
        if (edge < 0) return;
        if (count + std::min(usable_tris, supported / 3) <= best) return;

        for (int t : tris_of_edge[edge]) {
            if (!usable(t)) continue;
            const auto& e = tri_edges[t];
            for (int k : e) blocked[k] = 1;
            chosen.push_back(t);
            rec(count + 1);
            chosen.pop_back();
            for (int k : e) blocked[k] = 0;
            if (aborted) return;
        }
        blocked[edge] = 1;  // packing leaves this edge uncovered
        rec(count);
        blocked[edge] = 0;
    }
};

}  // namespace

TrianglePacking triangle_packing(const Graph& g, PackingMode mode, int triangle_cap,
                                 std::int64_t node_budget) {
    auto tris = enumerate_triangles(g);
    TrianglePacking out;
    if (tris.empty()) return out;

    int n = g.order();
    auto edge_id = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return u * n + v;
    };
    std::vector<std::array<int, 3>> tri_edges;
    tri_edges.reserve(tris.size());
    for (const auto& t : tris)
        tri_edges.push_back({edge_id(t[0], t[1]), edge_id(t[0], t[2]), edge_id(t[1], t[2])});

    std::vector<char> used(std::size_t(n) * n, 0);

    if (mode == PackingMode::greedy) {
        for (std::size_t i = 0; i < tris.size(); ++i) {
            const auto& e = tri_edges[i];
            if (used[e[0]] || used[e[1]] || used[e[2]]) continue;
            for (int k : e) used[k] = 1;
            out.triangles.push_back(tris[i]);
        }
        return out;
    }

    if (int(tris.size()) > triangle_cap)
        throw std::invalid_argument("triangle_packing: exact mode triangle cap exceeded");

    // greedy seed gives the initial bound
    std::vector<int> seed;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto& e = tri_edges[i];
        if (used[e[0]] || used[e[1]] || used[e[2]]) continue;
        for (int k : e) used[k] = 1;
        seed.push_back(int(i));
    }
    std::fill(used.begin(), used.end(), 0);

    std::vector<std::vector<int>> tris_of_edge(std::size_t(n) * n);
    for (std::size_t t = 0; t < tris.size(); ++t)
        for (int k : tri_edges[t]) tris_of_edge[k].push_back(int(t));

    PackingSearch search{tri_edges, tris_of_edge,
                         std::vector<char>(std::size_t(n) * n, 0),
                         std::vector<char>(std::size_t(n) * n, 0), node_budget};
    search.best = int(seed.size());
    search.best_chosen = seed;
    search.rec(0);

    for (int i : search.best_chosen) out.triangles.push_back(tris[i]);
    out.nodes = search.nodes;
    out.status = search.aborted ? SolveStatus::incomplete : SolveStatus::exact;
    return out;
}

namespace {

std::int64_t cut_value(const Graph& g, const Partition& p) { return crossing_edges(g, p); }

// first-improvement single-vertex moves in vertex order
void local_search_cut(const Graph& g, Partition& parts) {
    int n = g.order(), p = parts.block_count();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            int cur = parts.block_of(v);
            int d_cur = g.degree_in(v, parts.block(cur));
            for (int j = 0; j < p; ++j) {
                if (j == cur) continue;
                if (g.degree_in(v, parts.block(j)) < d_cur) {
                    parts.move_vertex(v, j);
                    moved = true;
                    break;
                }
            }
        }
    }
}

Partition random_partition(int n, int p, Rng& rng) {
    std::vector<VertexSet> blocks(p, VertexSet(n));
    for (int v = 0; v < n; ++v) blocks[rng.below(p)].set(v);
    return Partition(n, std::move(blocks));
}

struct ExactCutSearch {
    const Graph& g;
    int n, p;
    std::vector<std::int64_t> suffix;  // edges whose larger endpoint is >= v
    std::vector<int> assign, best_assign;
    std::vector<VertexSet> blocks;
    std::int64_t best;

    ExactCutSearch(const Graph& g_, int p_, std::int64_t seed_value,
                   const std::vector<int>& seed_assign)
        : g(g_), n(g_.order()), p(p_), assign(n, -1), best_assign(seed_assign),
          blocks(p_, VertexSet(g_.order())), best(seed_value) {
        suffix.assign(n + 1, 0);
        for (auto [u, v] : g.edges()) ++suffix[std::max(u, v)];
        for (int v = n - 1; v >= 0; --v) suffix[v] += suffix[v + 1];
    }

    void rec(int v, std::int64_t crossing, int used_blocks) {
        if (crossing + suffix[v] <= best) return;  // can't beat the incumbent
        if (v == n) {
            best = crossing;
            best_assign = assign;
            return;
        }
        int limit = std::min(p - 1, used_blocks);  // unused blocks are interchangeable
        for (int b = 0; b <= limit; ++b) {
            std::int64_t gain = 0;
            for (int j = 0; j < used_blocks; ++j)
                if (j != b) gain += g.degree_in(v, blocks[j]);
            assign[v] = b;
            blocks[b].set(v);
            rec(v + 1, crossing + gain, std::max(used_blocks, b + 1));
            blocks[b].reset(v);
            assign[v] = -1;
        }
    }
};

}  // namespace

CutResult max_cut_partition(const Graph& g, int p, CutMode mode, const CutOptions& opts) {
    if (p < 1) throw std::invalid_argument("max_cut: need p >= 1");
    int n = g.order();

    Partition best_parts = Partition::round_robin(n, p);
    local_search_cut(g, best_parts);
    std::int64_t best_val = cut_value(g, best_parts);
    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng(opts.seed + std::uint64_t(r) * 0x9e3779b97f4a7c15ULL);
        Partition cand = random_partition(n, p, rng);
        local_search_cut(g, cand);
        std::int64_t val = cut_value(g, cand);
        if (val > best_val) {
            best_val = val;
            best_parts = cand;
        }
    }
    if (mode == CutMode::local) return {best_parts, best_val, SolveStatus::exact};

    if (n > opts.exact_cap)
        throw std::invalid_argument("max_cut: exact mode infeasible beyond cap");
    std::vector<int> seed_assign(n);
    for (int v = 0; v < n; ++v) seed_assign[v] = best_parts.block_of(v);
    ExactCutSearch search(g, p, best_val - 1, seed_assign);
    search.rec(0, 0, 0);
    std::vector<VertexSet> blocks(p, VertexSet(n));
    for (int v = 0; v < n; ++v) blocks[search.best_assign[v]].set(v);
    Partition parts(n, std::move(blocks));
    return {parts, cut_value(g, parts), SolveStatus::exact};
}

bool is_cut_local_optimum(const Graph& g, const Partition& parts) {
    for (int v = 0; v < g.order(); ++v) {
        int cur = parts.block_of(v);
        int d_cur = g.degree_in(v, parts.block(cur));
        for (int j = 0; j < parts.block_count(); ++j)
            if (j != cur && g.degree_in(v, parts.block(j)) < d_cur) return false;
    }
    return true;
}

std::int64_t p_partite_cost(const Graph& g, const Partition& parts) {
    std::int64_t cost = inner_edges(g, parts);
    for (int i = 0; i < parts.block_count(); ++i)
        for (int j = i + 1; j < parts.block_count(); ++j) {
            std::int64_t full =
                std::int64_t(parts.block(i).count()) * parts.block(j).count();
            cost += full - g.edges_between(parts.block(i), parts.block(j));
        }
    return cost;
}

namespace {

void local_search_distance(const Graph& g, Partition& parts) {
    int n = g.order(), p = parts.block_count();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            int cur = parts.block_of(v);
            for (int j = 0; j < p; ++j) {
                if (j == cur) continue;
                // cost delta of moving v from block cur to block j
                std::int64_t delta = 2 * (g.degree_in(v, parts.block(j)) -
                                          g.degree_in(v, parts.block(cur))) +
                                     parts.block(cur).count() - parts.block(j).count() - 1;
                if (delta < 0) {
                    parts.move_vertex(v, j);
                    moved = true;
                    break;
                }
            }
        }
    }
}

struct ExactDistanceSearch {
    const Graph& g;
    int n, p;
    std::vector<int> assign, best_assign;
    std::vector<VertexSet> blocks;
    std::int64_t best;

    ExactDistanceSearch(const Graph& g_, int p_, std::int64_t seed_value,
                        const std::vector<int>& seed_assign)
        : g(g_), n(g_.order()), p(p_), assign(n, -1), best_assign(seed_assign),
          blocks(p_, VertexSet(g_.order())), best(seed_value) {}

    void rec(int v, std::int64_t cost, int used_blocks) {
        if (cost >= best) return;  // cost only grows
        if (v == n) {
            best = cost;
            best_assign = assign;
            return;
        }
        int limit = std::min(p - 1, used_blocks);
        for (int b = 0; b <= limit; ++b) {
            std::int64_t added = g.degree_in(v, blocks[b]);  // inner edges
            for (int j = 0; j < used_blocks; ++j)
                if (j != b) added += blocks[j].count() - g.degree_in(v, blocks[j]);
            assign[v] = b;
            blocks[b].set(v);
            rec(v + 1, cost + added, std::max(used_blocks, b + 1));
            blocks[b].reset(v);
            assign[v] = -1;
        }
    }
};

}  // namespace

PPartiteDistance p_partite_distance(const Graph& g, int p, CutMode mode,
                                    const CutOptions& opts) {
    if (p < 1) throw std::invalid_argument("p_partite_distance: need p >= 1");
    int n = g.order();

    Partition best_parts = Partition::round_robin(n, p);
    local_search_distance(g, best_parts);
    std::int64_t best_val = p_partite_cost(g, best_parts);
    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng(opts.seed + std::uint64_t(r) * 0x9e3779b97f4a7c15ULL);
        Partition cand = random_partition(n, p, rng);
        local_search_distance(g, cand);
        std::int64_t val = p_partite_cost(g, cand);
        if (val < best_val) {
            best_val = val;
            best_parts = cand;
        }
    }
    if (mode == CutMode::local) return {best_parts, best_val, SolveStatus::exact};

    if (n > opts.exact_cap)
        throw std::invalid_argument("p_partite_distance: exact mode infeasible beyond cap");
    std::vector<int> seed_assign(n);
    for (int v = 0; v < n; ++v) seed_assign[v] = best_parts.block_of(v);
    ExactDistanceSearch search(g, p, best_val + 1, seed_assign);
    search.rec(0, 0, 0);
    std::vector<VertexSet> blocks(p, VertexSet(n));
    for (int v = 0; v < n; ++v) blocks[search.best_assign[v]].set(v);
    Partition parts(n, std::move(blocks));
    return {parts, p_partite_cost(g, parts), SolveStatus::exact};
}

ShearerVerdict shearer_check(const Graph& g, const SolverLimits& lim) {
    ShearerVerdict v;
    if (g.order() < 1) return v;
    if (find_clique(g, 3, lim.node_budget).has_value()) return v;  // inapplicable
    v.applicable = true;
    v.k = 1;  // k = 1 needs nothing
    for (int k = 2; k <= g.order(); ++k) {
        if (2.0 * k * k / std::log(double(k)) <= double(g.order()))
            v.k = k;
        else
            break;
    }
    AlphaOptions opts;
    opts.node_budget = lim.node_budget;
    v.alpha_value = alpha(g, opts).value();
    v.holds = v.alpha_value >= v.k;
    return v;
}

namespace naive {

namespace {
std::vector<std::uint32_t> adj_masks(const Graph& g) {
    std::vector<std::uint32_t> m(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        m[u] |= 1u << v;
        m[v] |= 1u << u;
    }
    return m;
}
}  // namespace

int alpha(const Graph& g) {
    int n = g.order();
    if (n > 24) throw std::invalid_argument("naive alpha: n too large");
    auto adj = adj_masks(g);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1)
            if (adj[std::countr_zero(rest)] & mask) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

int max_clique(const Graph& g) {
    int n = g.order();
    if (n > 24) throw std::invalid_argument("naive clique: n too large");
    auto adj = adj_masks(g);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if ((adj[v] & mask) != (mask & ~(1u << v))) ok = false;
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

namespace {
// plain include/exclude over the triangle list; prunes only on the two
// obvious counts (triangles left, free edges / 3)
void packing_dfs(const std::vector<std::array<int, 3>>& tri_edges, std::vector<char>& used,
                 int free_edges, std::size_t i, int count, int& best) {
    best = std::max(best, count);
    if (i >= tri_edges.size()) return;
    if (count + std::min<int>(int(tri_edges.size() - i), free_edges / 3) <= best) return;
    const auto& e = tri_edges[i];
    if (!used[e[0]] && !used[e[1]] && !used[e[2]]) {
        for (int k : e) used[k] = 1;
        packing_dfs(tri_edges, used, free_edges - 3, i + 1, count + 1, best);
        for (int k : e) used[k] = 0;
    }
    packing_dfs(tri_edges, used, free_edges, i + 1, count, best);
}
}  // namespace

int triangle_packing(const Graph& g) {
    auto tris = enumerate_triangles(g);
    int n = g.order();
    std::vector<std::array<int, 3>> tri_edges;
    for (const auto& t : tris)
        tri_edges.push_back({t[0] * n + t[1], t[0] * n + t[2], t[1] * n + t[2]});
    std::vector<char> used(std::size_t(n) * n, 0);
    std::vector<char> seen(std::size_t(n) * n, 0);
    int covered = 0;
    for (const auto& e : tri_edges)
        for (int k : e)
            if (!seen[k]) {
                seen[k] = 1;
                ++covered;
            }
    int best = 0;
    packing_dfs(tri_edges, used, covered, 0, 0, best);
    return best;
}

namespace {
template <class Eval>
void all_assignments(const Graph& g, int p, int v, std::vector<int>& assign, Eval&& eval) {
    if (v == g.order()) {
        eval(assign);
        return;
    }
    for (int b = 0; b < p; ++b) {
        assign[v] = b;
        all_assignments(g, p, v + 1, assign, eval);
    }
}
}  // namespace

std::int64_t max_cut(const Graph& g, int p) {
    auto edges = g.edges();
    std::vector<int> assign(g.order());
    std::int64_t best = 0;
    all_assignments(g, p, 0, assign, [&](const std::vector<int>& a) {
        std::int64_t c = 0;
        for (auto [u, v] : edges) c += a[u] != a[v];
        best = std::max(best, c);
    });
    return best;
}

std::int64_t p_partite_distance(const Graph& g, int p) {
    auto edges = g.edges();
    int n = g.order();
    std::vector<int> assign(n);
    std::int64_t best = std::int64_t(n) * n;
    all_assignments(g, p, 0, assign, [&](const std::vector<int>& a) {
        std::int64_t inner = 0;
        for (auto [u, v] : edges) inner += a[u] == a[v];
        std::vector<int> sizes(p, 0);
        for (int v = 0; v < n; ++v) ++sizes[a[v]];
        std::int64_t cross_pairs = 0;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) cross_pairs += std::int64_t(sizes[i]) * sizes[j];
        std::int64_t cross_edges = std::int64_t(edges.size()) - inner;
        best = std::min(best, inner + (cross_pairs - cross_edges));
    });
    return best;
}

}  // namespace naive

}  // namespace rtf
