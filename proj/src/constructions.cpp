#include "rtf/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "rtf/generators.hpp"
#include "rtf/rng.hpp"

namespace rtf {

namespace {

AlphaCertificate certify_alpha(const Graph& g, std::int64_t budget) {
    AlphaOptions opts;
    opts.node_budget = budget;
    return alpha(g, opts);
}

FndGraph certify_fnd(Graph g, int d, std::string source, std::int64_t alpha_budget) {
    if (g.order() && (g.min_degree() != d || g.max_degree() != d))
        throw std::runtime_error("fnd_provider: graph is not regular at the target degree");
    if (!is_triangle_free(g)) throw std::runtime_error("fnd_provider: triangle found");
    FndGraph f;
    f.alpha_cert = certify_alpha(g, alpha_budget);
    f.graph = std::move(g);
    f.d = d;
    f.source = std::move(source);
    return f;
}

// circulant with the given positive differences (folded modulo n)
Graph circulant(int n, const std::vector<int>& diffs) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int d : diffs) g.add_edge(v, (v + d) % n);
    return g;
}

// difference set whose circulant is d-regular and triangle-free: no
// a + b = c over the symmetrized set. Differences below n/2 weigh 2,
// the half-point weighs 1. Backtracking over ascending differences.
std::vector<std::vector<int>> sum_free_difference_sets(int n, int d, int limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    std::vector<char> in_set(n, 0);  // symmetrized membership
    auto sum_free = [&] {
        for (int a = 1; a < n; ++a) {
            if (!in_set[a]) continue;
            for (int b = a; b < n; ++b) {
                if (!in_set[b]) continue;
                if (in_set[(a + b) % n]) return false;
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, int from, int need) -> void {
        if (int(out.size()) >= limit) return;
        if (need == 0) {
            out.push_back(chosen);
            return;
        }
        for (int cand = from; cand <= n / 2; ++cand) {
            int weight = (2 * cand == n) ? 1 : 2;
            if (weight > need) continue;
            in_set[cand] = in_set[n - cand] = 1;
            if (sum_free()) {
                chosen.push_back(cand);
                self(self, cand + 1, need - weight);
                chosen.pop_back();
            }
            in_set[cand] = in_set[n - cand] = 0;
            if (int(out.size()) >= limit) return;
        }
    };
    rec(rec, 1, d);
    return out;
}

}  // namespace

FndGraph fnd_provider(int n, int d_target, const FndOptions& opts) {
    switch (opts.strategy) {
        case FndStrategy::c5_blowup: {
            if (n % 5 != 0)
                throw std::invalid_argument("fnd_provider: c5_blowup needs 5 | n");
            int t = n / 5;
            if (2 * t != d_target)
                throw std::invalid_argument("fnd_provider: c5_blowup gives d = 2n/5");
            return certify_fnd(blow_up(cycle_graph(5), t), d_target, "c5_blowup",
                               opts.alpha_budget);
        }
        case FndStrategy::andrasfai_blowup: {
            int t = 3 * d_target - n;
            if (t < 1 || n % t != 0 || d_target % t != 0)
                throw std::invalid_argument(
                    "fnd_provider: no Andrasfai blow-up matches (n, d)");
            int k = d_target / t;
            if ((3 * k - 1) * t != n)
                throw std::invalid_argument(
                    "fnd_provider: no Andrasfai blow-up matches (n, d)");
            return certify_fnd(blow_up(andrasfai_graph(k), t), d_target, "andrasfai_blowup",
                               opts.alpha_budget);
        }
        case FndStrategy::annealed:
            break;
    }

    // annealed: triangle-free regular circulant seeds first, then seeded
    // triangle-rejecting double-edge swaps chasing alpha == d
    if (d_target < 1 || d_target >= n)
        throw std::invalid_argument("fnd_provider: bad degree");
    auto seeds = sum_free_difference_sets(n, d_target, 64);
    if (seeds.empty())
        throw std::invalid_argument("fnd_provider: no triangle-free regular circulant seed");
    int target_alpha = opts.alpha_cap > 0 ? opts.alpha_cap : d_target;

    Graph g;
    int g_alpha = n + 1;
    for (const auto& diffs : seeds) {
        Graph cand = circulant(n, diffs);
        auto cert = certify_alpha(cand, opts.alpha_budget);
        if (cert.exact() && cert.value() <= target_alpha)
            return certify_fnd(cand, d_target, "annealed", opts.alpha_budget);
        if (cert.lower < g_alpha) {
            g_alpha = cert.lower;
            g = std::move(cand);
        }
    }

    Rng rng(opts.seed);
    auto edges = g.edges();
    for (int it = 0; it < opts.swap_budget; ++it) {
        // double-edge swap: (a,b),(c,d) -> (a,c),(b,d)
        auto [a, b] = edges[rng.below(int(edges.size()))];
        auto [c, d] = edges[rng.below(int(edges.size()))];
        if (a == c || a == d || b == c || b == d) continue;
        if (g.has_edge(a, c) || g.has_edge(b, d)) continue;
        Graph h(n);
        for (auto [u, v] : g.edges())
            if (!((u == a && v == b) || (u == std::min(c, d) && v == std::max(c, d))))
                h.add_edge(u, v);
        h.add_edge(a, c);
        h.add_edge(b, d);
        if (!is_triangle_free(h)) continue;
        auto cert = certify_alpha(h, opts.alpha_budget);
        if (!cert.exact() || cert.value() > g_alpha) continue;
        g = std::move(h);
        g_alpha = cert.value();
        edges = g.edges();
        if (g_alpha <= target_alpha)
            return certify_fnd(g, d_target, "annealed", opts.alpha_budget);
    }
    throw std::runtime_error("fnd_provider: annealing budget exhausted (best alpha " +
                             std::to_string(g_alpha) + ")");
}

namespace {

struct Assembly {
    Graph graph;
    EdgeColoring coloring;

    Assembly(int n, int k) : graph(n), coloring(n, k) {}

    void edge(int u, int v, int color) {
        graph.add_edge(u, v);
        coloring.set(u, v, color);
    }

    void overlay_colored(const Graph& h, int offset, int color) {
        for (auto [u, v] : h.edges()) edge(offset + u, offset + v, color);
    }

    void join_ranges(int a0, int a1, int b0, int b1, int color) {
        for (int u = a0; u < a1; ++u)
            for (int v = b0; v < b1; ++v) edge(u, v, color);
    }
};

ConstructionReport finish(std::string family, Assembly&& asmb, Partition parts,
                          FreenessSpec target, std::int64_t predicted, int inner_degree,
                          const BuildOptions& opts) {
    ConstructionReport r;
    r.family = std::move(family);
    r.graph = std::move(asmb.graph);
    r.coloring = std::move(asmb.coloring);
    r.parts = std::move(parts);
    r.target = std::move(target);
    r.predicted_edges = predicted;
    r.actual_edges = r.graph.size();
    r.inner_degree = inner_degree;
    if (opts.verify_freeness)
        r.freeness_violation = mono_clique(r.graph, r.coloring, r.target, opts.node_budget);
    if (opts.verify_alpha) r.alpha_cert = certify_alpha(r.graph, opts.node_budget);
    return r;
}

}  // namespace

ConstructionReport build_k3k3(int n, const FndGraph& side1, const FndGraph& side2,
                              const BuildOptions& opts) {
    if (n % 2 != 0) throw std::invalid_argument("build_k3k3: need 2 | n");
    int half = n / 2;
    if (side1.order() != half || side2.order() != half)
        throw std::invalid_argument("build_k3k3: inner graphs must have n/2 vertices");

    Assembly a(n, 2);
    a.overlay_colored(side1.graph, 0, 1);
    a.overlay_colored(side2.graph, half, 1);
    a.join_ranges(0, half, half, n, 2);

    std::int64_t predicted =
        std::int64_t(n) * n / 4 + side1.graph.size() + side2.graph.size();
    int d = side1.d == side2.d ? side1.d : 0;
    return finish("k3k3", std::move(a), Partition::contiguous(n, {half, half}),
                  FreenessSpec{{3, 3}}, predicted, d, opts);
}

ConstructionReport build_k3k5(int n, const std::vector<FndGraph>& fs,
                              const BuildOptions& opts) {
    if (n % 5 != 0) throw std::invalid_argument("build_k3k5: need 5 | n");
    if (fs.size() != 5) throw std::invalid_argument("build_k3k5: need five inner graphs");
    int part = n / 5;
    for (const auto& f : fs)
        if (f.order() != part)
            throw std::invalid_argument("build_k3k5: inner graphs must have n/5 vertices");

    Assembly a(n, 2);
    std::int64_t inner = 0;
    for (int i = 0; i < 5; ++i) {
        a.overlay_colored(fs[i].graph, i * part, 2);
        inner += fs[i].graph.size();
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            int gap = j - i;
            int color = (gap == 1 || gap == 4) ? 2 : 1;  // cyclic neighbors red
            a.join_ranges(i * part, (i + 1) * part, j * part, (j + 1) * part, color);
        }

    std::int64_t predicted = 2 * std::int64_t(n) * n / 5 + inner;
    int d = fs[0].d;
    for (const auto& f : fs)
        if (f.d != d) d = 0;
    return finish("k3k5", std::move(a),
                  Partition::contiguous(n, std::vector<int>(5, part)), FreenessSpec{{3, 5}},
                  predicted, d, opts);
}

ConstructionReport build_k3k4(int n, const FndGraph& f1, const FndGraph& f2,
                              const VertexSet& b_set, const BuildOptions& opts) {
    if (n % 3 != 0) throw std::invalid_argument("build_k3k4: need 3 | n");
    int part = n / 3;
    if (f1.order() != part)
        throw std::invalid_argument("build_k3k4: f1 must have n/3 vertices");
    int v2 = f2.order();
    int d2 = b_set.count();
    if (b_set.universe() != v2)
        throw std::invalid_argument("build_k3k4: B must live in f2");
    b_set.for_each([&](int u) {
        if (f2.graph.neighbors(u).intersects(b_set))
            throw std::invalid_argument("build_k3k4: B is not independent in f2");
    });
    int pad = part - v2 - d2;
    if (pad < 0) throw std::invalid_argument("build_k3k4: f2 plus clones exceed the part");

    // part one: f2 on [0,v2), clones A on [v2, v2+d2), padding after
    std::vector<int> b_verts = b_set.to_vector();
    Assembly a(n, 2);
    a.overlay_colored(f2.graph, 0, 1);
    for (int i = 0; i < d2; ++i) {
        int clone = v2 + i;
        f2.graph.neighbors(b_verts[i]).for_each([&](int w) { a.edge(clone, w, 1); });
    }
    for (int i = 0; i < d2; ++i)
        for (int b : b_verts) a.edge(v2 + i, b, 2);  // the [A,B] join

    int x2 = part, x3 = 2 * part;
    a.overlay_colored(f1.graph, x2, 2);
    a.overlay_colored(f1.graph, x3, 2);

    // crossing edges: [A,X2], [B,X3] and [X2,X3] carry color 1
    for (int u = 0; u < part; ++u) {
        bool in_a = u >= v2 && u < v2 + d2;
        a.join_ranges(u, u + 1, x2, x3, in_a ? 1 : 2);
        bool in_b = u < v2 && b_set.test(u);
        a.join_ranges(u, u + 1, x3, n, in_b ? 1 : 2);
    }
    a.join_ranges(x2, x3, x3, n, 1);

    std::int64_t predicted = 3 * std::int64_t(part) * part + 2 * f1.graph.size() +
                             f2.graph.size() + 2 * std::int64_t(d2) * d2;
    return finish("k3k4", std::move(a), Partition::contiguous(n, {part, part, part}),
                  FreenessSpec{{3, 4}}, predicted, f1.d, opts);
}

ConstructionReport build_k3k6(int n, const FndGraph& f1, const FndGraph& f2,
                              const VertexSet& i_set, const BuildOptions& opts) {
    if (n % 6 != 0) throw std::invalid_argument("build_k3k6: need 6 | n");
    int part = n / 6;
    if (f1.order() != part)
        throw std::invalid_argument("build_k3k6: f1 must have n/6 vertices");
    int v2 = f2.order();
    int d2 = i_set.count();
    if (d2 % 2 != 0) throw std::invalid_argument("build_k3k6: |I| must be even");
    if (i_set.universe() != v2)
        throw std::invalid_argument("build_k3k6: I must live in f2");
    i_set.for_each([&](int u) {
        if (f2.graph.neighbors(u).intersects(i_set))
            throw std::invalid_argument("build_k3k6: I is not independent in f2");
    });
    int half = d2 / 2;
    int pad = part - v2 - 3 * half;
    if (pad < 0) throw std::invalid_argument("build_k3k6: f2 plus clones exceed the part");

    int x6 = 5 * part;  // the special part sits last
    std::vector<int> i_verts = i_set.to_vector();

    // I-blocks in global labels: I1/I2 split the chosen set, I3..I5 clone I1
    std::vector<std::vector<int>> blocks(5);
    for (int i = 0; i < half; ++i) blocks[0].push_back(x6 + i_verts[i]);
    for (int i = 0; i < half; ++i) blocks[1].push_back(x6 + i_verts[half + i]);
    for (int s = 0; s < 3; ++s)
        for (int i = 0; i < half; ++i) blocks[2 + s].push_back(x6 + v2 + s * half + i);

    Assembly a(n, 2);
    for (int i = 0; i < 5; ++i) a.overlay_colored(f1.graph, i * part, 2);
    a.overlay_colored(f2.graph, x6, 1);
    for (int s = 0; s < 3; ++s)
        for (int i = 0; i < half; ++i) {
            int clone = x6 + v2 + s * half + i;
            f2.graph.neighbors(i_verts[i]).for_each([&](int w) { a.edge(clone, x6 + w, 1); });
        }
    for (int i = 0; i < 5; ++i) {  // pentagon over the I-blocks
        int j = (i + 2) % 5;
        for (int u : blocks[i])
            for (int v : blocks[j])
                if (u < v) a.edge(u, v, 2);
                else a.edge(v, u, 2);
    }

    // crossing pairs among the first five parts
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            int gap = j - i;
            int color = (gap == 2 || gap == 3) ? 1 : 2;
            a.join_ranges(i * part, (i + 1) * part, j * part, (j + 1) * part, color);
        }

    // [X6, X_i]: members of I-block i keep color 1 toward X_i and X_{i+1}
    std::vector<int> block_of(n, -1);
    for (int i = 0; i < 5; ++i)
        for (int v : blocks[i]) block_of[v] = i;
    for (int u = x6; u < n; ++u)
        for (int i = 0; i < 5; ++i) {
            int b = block_of[u];
            bool exempt = b >= 0 && (i == b || i == (b + 1) % 5);
            a.join_ranges(i * part, (i + 1) * part, u, u + 1, exempt ? 1 : 2);
        }

    std::int64_t predicted = 15 * std::int64_t(part) * part + 5 * f1.graph.size() +
                             f2.graph.size() + 3 * std::int64_t(d2) * d2 / 2 +
                             5 * std::int64_t(half) * half;
    return finish("k3k6", std::move(a),
                  Partition::contiguous(n, std::vector<int>(6, part)), FreenessSpec{{3, 6}},
                  predicted, f1.d, opts);
}

int ramsey_r3(int s) {
    switch (s) {
        case 2: return 3;
        case 3: return 6;
        case 4: return 9;
        case 5: return 14;
        default: throw std::invalid_argument("ramsey_r3: table covers s in [2,5]");
    }
}

namespace {

// (K3,K5)-free coloring of K13: class 1 is the cyclic graph with
// differences {1,5}; used when the plain search cannot reach a witness
std::optional<EdgeColoring> known_base_coloring(int t, int s) {
    if (t != 13 || s != 5) return std::nullopt;
    EdgeColoring c(13, 2);
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) {
            int d = (v - u) % 13;
            if (d > 13 - d) d = 13 - d;
            c.set(u, v, (d == 1 || d == 5) ? 1 : 2);
        }
    return c;
}

EdgeColoring base_coloring(int t, int s, std::int64_t budget) {
    FreenessSpec spec{{3, s}};
    auto res = freeness_search(complete_graph(t), spec, budget);
    if (res.found()) return *res.coloring;
    if (res.proven_none())
        throw std::runtime_error("build_thm12_lower: no base coloring exists");
    if (auto known = known_base_coloring(t, s)) {
        if (!mono_clique(complete_graph(t), *known, spec)) return *known;
    }
    throw std::runtime_error("build_thm12_lower: base coloring search exhausted its budget");
}

}  // namespace

ConstructionReport build_thm12_lower(int n, int s, TargetParity parity, const HProvider& h,
                                     std::uint64_t seed, const BuildOptions& opts) {
    int r = ramsey_r3(s);
    int t = parity == TargetParity::odd ? r - 1 : r;
    if (n % t != 0) throw std::invalid_argument("build_thm12_lower: need t | n");
    int part = n / t;
    int base_order = parity == TargetParity::odd ? t : t - 1;
    // base colorings are cheap to find except (3,5) on K13, kept tight here
    EdgeColoring base = base_coloring(base_order, s, t <= 9 ? 200'000'000 : 50'000'000);

    Assembly a(n, 2);
    std::int64_t inner = 0;
    for (int i = 0; i < t; ++i) {
        Graph hi = h(part, seed + std::uint64_t(i));
        if (hi.order() != part)
            throw std::invalid_argument("build_thm12_lower: inner graph has wrong order");
        if (!is_triangle_free(hi))
            throw std::invalid_argument("build_thm12_lower: inner graph has a triangle");
        bool last_even = parity == TargetParity::even && i == t - 1;
        a.overlay_colored(hi, i * part, last_even ? 1 : 2);
        inner += hi.size();
    }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            int color;
            if (parity == TargetParity::even && j == t - 1)
                color = 2;
            else
                color = base.color(i, j);
            a.join_ranges(i * part, (i + 1) * part, j * part, (j + 1) * part, color);
        }

    std::int64_t predicted =
        std::int64_t(t) * (t - 1) / 2 * std::int64_t(part) * part + inner;
    int target_clique = parity == TargetParity::odd ? 2 * s - 1 : 2 * s;
    auto report = finish(parity == TargetParity::odd ? "thm12_odd" : "thm12_even",
                         std::move(a), Partition::contiguous(n, std::vector<int>(t, part)),
                         FreenessSpec{{3, target_clique}}, predicted, 0, opts);
    report.s_param = s;
    return report;
}

}  // namespace rtf
