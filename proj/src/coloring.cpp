#include "rtf/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rtf {

bool EdgeColoring::covers(const Graph& g) const {
    if (g.order() != n_) return false;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            int c = color(u, v);
            if (g.has_edge(u, v) ? (c < 1 || c > k_) : c != 0) return false;
        }
    return true;
}

Graph EdgeColoring::class_graph(int c) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (color(u, v) == c) g.add_edge(u, v);
    return g;
}

std::int64_t EdgeColoring::class_size(int c) const {
    std::int64_t count = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (color(u, v) == c) ++count;
    return count;
}

void EdgeColoring::relabel(int a, int b) {
    for (auto& c : color_) {
        if (c == a)
            c = std::uint8_t(b);
        else if (c == b)
            c = std::uint8_t(a);
    }
}

std::string EdgeColoring::to_text() const {
    std::ostringstream os;
    os << n_ << ' ' << k_ << '\n';
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (int c = color(u, v)) os << u << ' ' << v << ' ' << c << '\n';
    return os.str();
}

EdgeColoring EdgeColoring::from_text(const std::string& text) {
    std::istringstream is(text);
    int n, k;
    if (!(is >> n >> k) || n < 0 || k < 1) throw std::invalid_argument("coloring: bad header");
    EdgeColoring col(n, k);
    int u, v, c;
    while (is >> u >> v >> c) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v || c < 1 || c > k)
            throw std::invalid_argument("coloring: bad edge line");
        col.set(u, v, c);
    }
    return col;
}

void FreenessSpec::validate() const {
    if (sizes.empty()) throw std::invalid_argument("spec: need at least one color");
    for (int s : sizes)
        if (s < 2) throw std::invalid_argument("spec: sizes must be >= 2");
}

std::string FreenessSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sizes[i]);
    }
    return out;
}

FreenessSpec FreenessSpec::parse(const std::string& text) {
    FreenessSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) spec.sizes.push_back(std::stoi(item));
    spec.validate();
    return spec;
}

std::optional<MonoCliqueWitness> mono_clique(const Graph& g, const EdgeColoring& c,
                                             const FreenessSpec& spec,
                                             std::int64_t node_budget) {
    spec.validate();
    if (spec.colors() != c.colors())
        throw std::invalid_argument("mono_clique: spec/coloring arity mismatch");
    if (!c.covers(g)) throw std::invalid_argument("mono_clique: coloring does not cover host");
    for (int i = 1; i <= spec.colors(); ++i) {
        Graph cls = c.class_graph(i);
        SolveStatus status;
        auto clique = find_clique(cls, spec.sizes[i - 1], node_budget, &status);
        if (status != SolveStatus::exact)
            throw std::runtime_error("mono_clique: clique budget exhausted");
        if (clique) return MonoCliqueWitness{i, *clique};
    }
    return std::nullopt;
}

namespace {

// Backtracking core shared by the freeness search and the star-coloring
// search. Colors are tracked as per-color adjacency bitsets; an assignment
// that finishes a forbidden clique is never made.
struct ColorSearch {
    const std::vector<int>& sizes;
    int n;
    std::vector<std::vector<VertexSet>> adjc;  // [color-1][vertex]
    std::int64_t budget;
    std::int64_t nodes = 0;
    bool aborted = false;

    ColorSearch(const std::vector<int>& sizes_, int n_, std::int64_t budget_)
        : sizes(sizes_), n(n_),
          adjc(sizes_.size(), std::vector<VertexSet>(n_, VertexSet(n_))), budget(budget_) {}

    // would coloring uv with c complete a K_{s_c}? (looks for K_{s-2} in the
    // common c-neighborhood)
    bool completes(int c, int u, int v) {
        int need = sizes[c - 1] - 2;
        if (need < 0) return false;
        VertexSet cand = adjc[c - 1][u] & adjc[c - 1][v];
        return has_subclique(c, cand, need);
    }

    bool has_subclique(int c, const VertexSet& cand, int need) {
        if (need <= 0) return true;
        if (need == 1) return !cand.empty();
        if (cand.count() < need) return false;
        bool found = false;
        cand.for_each([&](int w) {
            if (found) return;
            VertexSet next = cand & adjc[c - 1][w];
            // only extend upward to avoid revisits
            for (int x = 0; x <= w; ++x)
                if (next.test(x)) next.reset(x);
            if (has_subclique(c, next, need - 1)) found = true;
        });
        return found;
    }

    void assign(int c, int u, int v) {
        adjc[c - 1][u].set(v);
        adjc[c - 1][v].set(u);
    }
    void retract(int c, int u, int v) {
        adjc[c - 1][u].reset(v);
        adjc[c - 1][v].reset(u);
    }
};

}  // namespace

FreenessResult freeness_search(const Graph& g, const FreenessSpec& spec,
                               std::int64_t node_budget) {
    spec.validate();
    int n = g.order();
    int k = spec.colors();

    // edges in lexicographic (min,max) order
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());

    // colors with equal clique targets are interchangeable: within each
    // group, a fresh color may be used only in ascending order
    std::vector<int> group_head(k + 1, 0);  // smallest color of the group
    for (int c = 1; c <= k; ++c) {
        group_head[c] = c;
        for (int d = 1; d < c; ++d)
            if (spec.sizes[d - 1] == spec.sizes[c - 1]) {
                group_head[c] = d;
                break;
            }
    }

    ColorSearch search(spec.sizes, n, node_budget);
    EdgeColoring col(n, k);
    std::vector<std::int64_t> used(k + 1, 0);

    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (search.aborted) return false;
        if (i == edges.size()) return true;
        if (++search.nodes > search.budget) {
            search.aborted = true;
            return false;
        }
        auto [u, v] = edges[i];
        for (int c = 1; c <= k; ++c) {
            if (used[c] == 0) {
                // first use within the group must be its lowest unused color
                bool earlier_unused = false;
                for (int d = group_head[c]; d < c; ++d)
                    if (spec.sizes[d - 1] == spec.sizes[c - 1] && used[d] == 0)
                        earlier_unused = true;
                if (earlier_unused) continue;
            }
            if (search.completes(c, u, v)) continue;
            search.assign(c, u, v);
            col.set(u, v, c);
            ++used[c];
            if (self(self, i + 1)) return true;
            --used[c];
            col.unset(u, v);
            search.retract(c, u, v);
        }
        return false;
    };

    FreenessResult out;
    bool found = dfs(dfs, 0);
    out.nodes = search.nodes;
    if (found) {
        out.coloring = col;
        out.status = SolveStatus::exact;
    } else {
        out.status = search.aborted ? SolveStatus::incomplete : SolveStatus::exact;
    }
    return out;
}

namespace {

struct SplitState {
    VertexSet side1;
    int a1 = 0, a2 = 0;
    VertexSet w1, w2;  // witnesses inside side1 / side2
    int objective_max() const { return std::max(a1, a2); }
    int objective_sum() const { return a1 + a2; }
};

SplitState eval_split(const Graph& g1, const Graph& g2, const VertexSet& side1) {
    SplitState st;
    st.side1 = side1;
    VertexSet side2 = side1.complement_in(g1.order());
    std::vector<int> old1, old2;
    AlphaOptions opts;
    opts.node_budget = 100'000'000;
    auto c1 = alpha(g1.induced(side1, &old1), opts);
    auto c2 = alpha(g2.induced(side2, &old2), opts);
    st.a1 = c1.value();
    st.a2 = c2.value();
    st.w1 = VertexSet(g1.order());
    st.w2 = VertexSet(g1.order());
    c1.witness.for_each([&](int v) { st.w1.set(old1[v]); });
    c2.witness.for_each([&](int v) { st.w2.set(old2[v]); });
    return st;
}

bool better(const SplitState& a, const SplitState& b) {
    if (a.objective_max() != b.objective_max()) return a.objective_max() < b.objective_max();
    return a.objective_sum() < b.objective_sum();
}

}  // namespace

SplitResult split_partition(const Graph& g, const EdgeColoring& c, int target_alpha_cap,
                            int max_rounds) {
    if (c.colors() != 2) throw std::invalid_argument("split_partition: needs a 2-coloring");
    if (!c.covers(g)) throw std::invalid_argument("split_partition: coloring mismatch");
    int n = g.order();
    Graph g1 = c.class_graph(1);
    Graph g2 = c.class_graph(2);

    // candidate starts: everything on one side, and a color-degree split
    VertexSet all = VertexSet::full(n);
    VertexSet by_degree(n);
    for (int v = 0; v < n; ++v)
        if (g1.degree(v) >= g2.degree(v)) by_degree.set(v);

    SplitState best = eval_split(g1, g2, all);
    for (const VertexSet& start : {VertexSet(n), by_degree}) {
        SplitState st = eval_split(g1, g2, start);
        if (better(st, best)) best = st;
    }

    int moves = 0;
    for (int round = 0; round < max_rounds; ++round) {
        if (best.objective_max() == 0) break;
        bool improved = false;
        // move the binding side's witness (whole, then half, then singles)
        bool side1_binds = best.a1 >= best.a2;
        VertexSet witness = side1_binds ? best.w1 : best.w2;
        std::vector<int> verts = witness.to_vector();

        auto apply = [&](const std::vector<int>& subset) {
            VertexSet cand = best.side1;
            for (int v : subset) {
                if (side1_binds)
                    cand.reset(v);
                else
                    cand.set(v);
            }
            return eval_split(g1, g2, cand);
        };

        std::vector<std::vector<int>> attempts;
        attempts.push_back(verts);
        if (verts.size() > 1)
            attempts.emplace_back(verts.begin(), verts.begin() + verts.size() / 2);
        for (int v : verts) attempts.push_back({v});
        for (const auto& subset : attempts) {
            SplitState st = apply(subset);
            if (better(st, best)) {
                best = st;
                moves += int(subset.size());
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }

    SplitResult out;
    out.side1 = best.side1;
    out.side2 = best.side1.complement_in(n);
    out.alpha1 = best.a1;
    out.alpha2 = best.a2;
    out.target = target_alpha_cap;
    out.target_met = best.objective_max() <= target_alpha_cap;
    out.moves = moves;
    return out;
}

bool StarColoring::respects_vertex_rule() const {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = edge_color.color(u, v);
            if (c == 0) return false;  // host is complete
            if (c == vertex_color[u] || c == vertex_color[v]) return false;
        }
    return true;
}

std::string StarColoring::to_text() const {
    std::ostringstream os;
    os << "vertexcolors";
    for (int c : vertex_color) os << ' ' << c;
    os << '\n' << edge_color.to_text();
    return os.str();
}

StarColoring StarColoring::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    if (!(is >> tag) || tag != "vertexcolors")
        throw std::invalid_argument("star coloring: missing vertex block");
    std::string rest;
    std::getline(is, rest);
    StarColoring sc;
    std::istringstream vs(rest);
    int c;
    while (vs >> c) sc.vertex_color.push_back(c);
    sc.n = int(sc.vertex_color.size());
    std::ostringstream tail;
    tail << is.rdbuf();
    sc.edge_color = EdgeColoring::from_text(tail.str());
    if (sc.edge_color.order() != sc.n)
        throw std::invalid_argument("star coloring: size mismatch");
    return sc;
}

namespace {

// all count vectors (n_1,...,n_k) with sum N; counts within groups of equal
// clique targets are kept non-increasing (colors there are interchangeable)
void count_vectors(int k, int N, const std::vector<int>& sizes, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == k) {
        int sum = 0;
        for (int x : cur) sum += x;
        if (sum == N) out.push_back(cur);
        return;
    }
    int idx = int(cur.size());
    int limit = N;
    for (int d = 0; d < idx; ++d)
        if (sizes[d] == sizes[idx]) limit = std::min(limit, cur[d]);
    for (int c = 0; c <= limit; ++c) {
        cur.push_back(c);
        count_vectors(k, N, sizes, cur, out);
        cur.pop_back();
    }
}

}  // namespace

RStarResult r_star_search(int k, const std::vector<int>& sizes, int cap,
                          std::int64_t node_budget) {
    if (k < 2 || int(sizes.size()) != k)
        throw std::invalid_argument("r_star_search: need k >= 2 matching sizes");
    for (int s : sizes)
        if (s < 2) throw std::invalid_argument("r_star_search: sizes must be >= 2");

    RStarResult out;
    std::int64_t nodes_left = node_budget;

    auto feasible = [&](int N, StarColoring& witness) -> std::optional<bool> {
        std::vector<std::vector<int>> vectors;
        std::vector<int> cur;
        count_vectors(k, N, sizes, cur, vectors);
        for (const auto& counts : vectors) {
            // vertices are interchangeable: color by contiguous blocks
            std::vector<int> vc;
            for (int c = 0; c < k; ++c) vc.insert(vc.end(), counts[c], c + 1);

            ColorSearch search(sizes, N, nodes_left);
            EdgeColoring col(N, k);
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < N; ++u)
                for (int v = u + 1; v < N; ++v) edges.emplace_back(u, v);

            auto dfs = [&](auto&& self, std::size_t i) -> bool {
                if (search.aborted) return false;
                if (i == edges.size()) return true;
                if (++search.nodes > search.budget) {
                    search.aborted = true;
                    return false;
                }
                auto [u, v] = edges[i];
                for (int c = 1; c <= k; ++c) {
                    if (c == vc[u] || c == vc[v]) continue;  // endpoint rule
                    if (search.completes(c, u, v)) continue;
                    search.assign(c, u, v);
                    col.set(u, v, c);
                    if (self(self, i + 1)) return true;
                    col.unset(u, v);
                    search.retract(c, u, v);
                }
                return false;
            };

            bool found = dfs(dfs, 0);
            out.nodes += search.nodes;
            nodes_left -= search.nodes;
            if (found) {
                witness.n = N;
                witness.vertex_color = vc;
                witness.edge_color = col;
                return true;
            }
            if (search.aborted || nodes_left <= 0) return std::nullopt;  // budget out
        }
        return false;
    };

    StarColoring last_witness;
    for (int N = 1; N <= cap; ++N) {
        StarColoring witness;
        auto ok = feasible(N, witness);
        if (!ok.has_value()) {  // inconclusive at N
            out.status = SolveStatus::incomplete;
            break;
        }
        if (!*ok) {
            out.status = SolveStatus::exact;  // first failure pins the value
            out.value = N - 1;
            if (N > 1) out.witness = last_witness;
            return out;
        }
        last_witness = witness;
        out.value = N;
        if (N == cap) out.status = SolveStatus::incomplete;  // cap, not proof
    }
    out.witness = last_witness;
    return out;
}

namespace naive {

bool freeness_by_enumeration(const Graph& g, const FreenessSpec& spec) {
    spec.validate();
    auto edges = g.edges();
    int k = spec.colors();
    std::size_t m = edges.size();
    if (m > 20) throw std::invalid_argument("freeness_by_enumeration: too many edges");
    std::vector<int> assign(m, 0);
    while (true) {
        bool ok = true;
        for (int c = 0; c < k && ok; ++c) {
            Graph cls(g.order());
            for (std::size_t i = 0; i < m; ++i)
                if (assign[i] == c) cls.add_edge(edges[i].first, edges[i].second);
            if (naive::max_clique(cls) >= spec.sizes[c]) ok = false;
        }
        if (ok) return true;
        // next assignment in base k
        std::size_t pos = 0;
        while (pos < m && ++assign[pos] == k) assign[pos++] = 0;
        if (pos == m) return false;
    }
}

}  // namespace naive

}  // namespace rtf
