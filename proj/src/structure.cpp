#include "rtf/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rtf/rng.hpp"
#include "rtf/threads.hpp"

namespace rtf {

void TripartiteHost::validate() const {
    int n = graph.order();
    int b = z1.count();
    if (z2.count() != b || z3.count() != b)
        throw std::invalid_argument("tripartite host: blocks must have equal size");
    VertexSet all = z1 | z2 | z3;
    if (all != VertexSet::full(n) || z1.intersects(z2) || z1.intersects(z3) ||
        z2.intersects(z3))
        throw std::invalid_argument("tripartite host: blocks must partition the vertices");
    if (!(gamma > 0 && gamma < 1))
        throw std::invalid_argument("tripartite host: gamma must lie in (0,1)");
    for (int v = 0; v < n; ++v) {
        const VertexSet& own = z1.test(v) ? z1 : z2.test(v) ? z2 : z3;
        if (graph.neighbors(v).intersects(own))
            throw std::invalid_argument("tripartite host: edge inside a block");
    }
}

namespace {
std::array<VertexSet, 3> make_blocks(int block) {
    int n = 3 * block;
    std::array<VertexSet, 3> z{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int i = 0; i < 3; ++i)
        for (int v = 0; v < block; ++v) z[i].set(i * block + v);
    return z;
}
}  // namespace

TripartiteHost TripartiteHost::complete(int block, double gamma) {
    auto z = make_blocks(block);
    Graph g(3 * block);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int u = 0; u < block; ++u)
                for (int v = 0; v < block; ++v) g.add_edge(i * block + u, j * block + v);
    TripartiteHost host{std::move(g), z[0], z[1], z[2], gamma};
    host.validate();
    return host;
}

TripartiteHost TripartiteHost::random_density(int block, double density, double gamma,
                                              std::uint64_t seed) {
    auto z = make_blocks(block);
    Graph g(3 * block);
    Rng rng(seed);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int u = 0; u < block; ++u)
                for (int v = 0; v < block; ++v)
                    if (rng.unit() < density) g.add_edge(i * block + u, j * block + v);
    TripartiteHost host{std::move(g), z[0], z[1], z[2], gamma};
    host.validate();
    return host;
}

int drc_sample_count(int block, double gamma) {
    if (block < 2) return 1;
    double ratio = std::log(double(block)) / (6.0 * std::log(1.0 / gamma));
    return std::max(1, int(std::ceil(ratio - 1e-9)));
}

namespace {

void check_drc_precondition(const TripartiteHost& host) {
    host.validate();
    int b = host.block_size();
    double floor = host.gamma * b;
    for (const VertexSet* far : {&host.z2, &host.z3}) {
        bool ok = true;
        host.z1.for_each([&](int v) {
            if (double(host.graph.degree_in(v, *far)) < floor) ok = false;
        });
        if (!ok)
            throw std::invalid_argument(
                "drc: min-degree precondition violated (some vertex of block one has "
                "degree below gamma * block)");
    }
}

struct SampleRound {
    std::vector<int> q2, q3;
    VertexSet s_prime;
    std::int64_t bad_pairs = 0;
    VertexSet s;
};

SampleRound one_round(const TripartiteHost& host, int q, Rng& rng) {
    int n = host.graph.order();
    int b = host.block_size();
    std::vector<int> z2 = host.z2.to_vector(), z3 = host.z3.to_vector();

    SampleRound round;
    for (int i = 0; i < q; ++i) round.q2.push_back(z2[rng.below(b)]);
    for (int i = 0; i < q; ++i) round.q3.push_back(z3[rng.below(b)]);

    round.s_prime = host.z1;
    for (int w : round.q2) round.s_prime &= host.graph.neighbors(w);
    for (int w : round.q3) round.s_prime &= host.graph.neighbors(w);

    double threshold = std::pow(host.gamma, 9) * b;
    auto pair_bad = [&](int u, int v) {
        VertexSet common = host.graph.neighbors(u) & host.graph.neighbors(v);
        return double(common.count_and(host.z2)) < threshold ||
               double(common.count_and(host.z3)) < threshold;
    };

    std::vector<int> members = round.s_prime.to_vector();
    round.s = round.s_prime;
    std::vector<char> alive(n, 0);
    for (int v : members) alive[v] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!pair_bad(members[i], members[j])) continue;
            ++round.bad_pairs;
            if (alive[members[i]] && alive[members[j]]) {
                alive[members[j]] = 0;  // drop the higher-indexed endpoint
                round.s.reset(members[j]);
            }
        }
    return round;
}

}  // namespace

DrcOutcome drc_sample(const TripartiteHost& host, std::uint64_t seed, int max_retries) {
    check_drc_precondition(host);
    int b = host.block_size();
    int q = drc_sample_count(b, host.gamma);

    DrcOutcome best;
    best.q = q;
    best.target = 0.5 * std::pow(double(b), 2.0 / 3.0);
    for (int attempt = 0; attempt < std::max(1, max_retries); ++attempt) {
        Rng rng(seed + std::uint64_t(attempt) * 0x9e3779b97f4a7c15ULL);
        SampleRound round = one_round(host, q, rng);
        best.attempts = attempt + 1;
        if (attempt == 0 || round.s.count() > best.s.count()) {
            best.q2 = round.q2;
            best.q3 = round.q3;
            best.s_prime = round.s_prime;
            best.bad_pairs = round.bad_pairs;
            best.s = round.s;
        }
        if (double(best.s.count()) >= best.target) break;
    }
    best.target_met = double(best.s.count()) >= best.target;
    return best;
}

bool drc_pairs_ok(const TripartiteHost& host, const VertexSet& s) {
    int b = host.block_size();
    double threshold = std::pow(host.gamma, 9) * b;
    auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            VertexSet common =
                host.graph.neighbors(members[i]) & host.graph.neighbors(members[j]);
            if (double(common.count_and(host.z2)) < threshold) return false;
            if (double(common.count_and(host.z3)) < threshold) return false;
        }
    return true;
}

DrcExpectation drc_expectation_mc(const TripartiteHost& host, int replicas,
                                  std::uint64_t seed) {
    check_drc_precondition(host);
    int b = host.block_size();
    DrcExpectation out;
    out.q = drc_sample_count(b, host.gamma);
    out.replicas = replicas;

    std::vector<double> sprimes(replicas), bads(replicas);
    parallel_for(replicas, [&](int i) {
        Rng rng(seed + std::uint64_t(i) * 0x9e3779b97f4a7c15ULL);
        SampleRound round = one_round(host, out.q, rng);
        sprimes[i] = double(round.s_prime.count());
        bads[i] = double(round.bad_pairs);
    });

    auto mean_se = [&](const std::vector<double>& xs, double& mean, double& se) {
        mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
        double var = 0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var = xs.size() > 1 ? var / (xs.size() - 1) : 0;
        se = std::sqrt(var / xs.size());
    };
    mean_se(sprimes, out.mean_sprime, out.se_sprime);
    mean_se(bads, out.mean_bad, out.se_bad);

    double min_ratio = 1.0;
    out.exact_sprime = 0;
    host.z1.for_each([&](int v) {
        double r2 = double(host.graph.degree_in(v, host.z2)) / b;
        double r3 = double(host.graph.degree_in(v, host.z3)) / b;
        min_ratio = std::min({min_ratio, r2, r3});
        out.exact_sprime += std::pow(r2, out.q) * std::pow(r3, out.q);
    });
    out.min_ratio_bound = b * std::pow(min_ratio, 2 * out.q);

    double slack = 3 * out.se_sprime + 1e-9;
    out.sprime_within_3se = std::abs(out.mean_sprime - out.exact_sprime) <= slack;
    out.lower_bound_ok = out.mean_sprime + slack >= out.min_ratio_bound;
    return out;
}

Graph triangle_free_process(int n, std::uint64_t seed) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    Rng rng(seed);
    rng.shuffle(pairs);
    Graph g(n);
    for (auto [u, v] : pairs)
        if (!g.neighbors(u).intersects(g.neighbors(v))) g.add_edge(u, v);
    return g;
}

ExtractTrace min_degree_extract(const Graph& g, Ratio d) {
    if (d.num <= 0 || d.num > d.den)
        throw std::invalid_argument("min_degree_extract: need 0 < d <= 1");
    int n = g.order();
    VertexSet alive = VertexSet::full(n);
    std::vector<int> deleted;
    int order = n;
    bool again = true;
    while (again && order > 0) {
        again = false;
        for (int v = 0; v < n; ++v) {
            if (!alive.test(v)) continue;
            // delete when degree <= d * order, compared exactly
            if (std::int64_t(g.degree_in(v, alive)) * d.den <= d.num * std::int64_t(order)) {
                alive.reset(v);
                deleted.push_back(v);
                --order;
                again = true;
                break;  // restart at the lowest index
            }
        }
    }
    ExtractTrace out;
    out.kept = alive;
    out.deleted = std::move(deleted);
    out.subgraph = g.induced(alive);
    return out;
}

RefineResult refine_partition(const Graph& g, Partition parts, Ratio threshold,
                              std::int64_t move_cap) {
    if (parts.block_count() < 2)
        throw std::invalid_argument("refine_partition: need at least two blocks");
    int n = g.order();
    if (move_cap <= 0) move_cap = 10LL * n;

    RefineResult out;
    std::int64_t moves = 0;
    bool stable = false;
    while (!stable && moves < move_cap) {
        stable = true;
        for (int v = 0; v < n && moves < move_cap; ++v) {
            int from = parts.block_of(v);
            for (int j = 0; j < parts.block_count(); ++j) {
                if (j == from) continue;
                if (std::int64_t(g.degree_in(v, parts.block(j))) * threshold.den <=
                    threshold.num * std::int64_t(n)) {
                    RefineMove mv;
                    mv.v = v;
                    mv.from = from;
                    mv.to = j;
                    mv.inner_before = inner_edges(g, parts);
                    parts.move_vertex(v, j);
                    mv.inner_after = inner_edges(g, parts);
                    out.trace.push_back(mv);
                    ++moves;
                    stable = false;
                    break;
                }
            }
        }
    }
    out.completed = stable;
    out.min_cross_degree = min_crossing_degree(g, parts);
    out.parts = std::move(parts);
    return out;
}

WeightedReducedGraph reduced_coloring(const Graph& g, const EdgeColoring& c,
                                      const Partition& parts, Ratio gamma,
                                      const std::vector<int>& vertex_tags) {
    if (c.colors() != 2) throw std::invalid_argument("reduced_coloring: needs a 2-coloring");
    if (!c.covers(g)) throw std::invalid_argument("reduced_coloring: coloring mismatch");
    int m = parts.block_count();
    if (int(vertex_tags.size()) != m)
        throw std::invalid_argument("reduced_coloring: one tag per block required");
    for (int tag : vertex_tags)
        if (tag != 1 && tag != 2)
            throw std::invalid_argument("reduced_coloring: tags must be 1 or 2");
    for (const auto& b : parts.blocks())
        if (b.empty()) throw std::invalid_argument("reduced_coloring: empty block");

    Graph g1 = c.class_graph(1);
    Graph g2 = c.class_graph(2);

    WeightedReducedGraph r;
    r.m = m;
    r.vertex_color = vertex_tags;
    r.edge_color.assign(std::size_t(m) * m, 0);
    r.weight_num.assign(std::size_t(m) * m, 0);
    r.weight_den.assign(std::size_t(m) * m, 1);

    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) {
            long long prod =
                (long long)(parts.block(p).count()) * parts.block(q).count();
            long long e1 = g1.edges_between(parts.block(p), parts.block(q));
            long long e2 = g2.edges_between(parts.block(p), parts.block(q));
            int color = 0;
            long long num = 0;
            // class one has priority at the density floor
            if (e1 * gamma.den >= gamma.num * prod) {
                color = 1;
                num = e1;
            } else if (e2 * gamma.den >= gamma.num * prod) {
                color = 2;
                num = e2;
            }
            if (color) {
                auto set_cell = [&](int a, int b) {
                    r.edge_color[std::size_t(a) * m + b] = color;
                    r.weight_num[std::size_t(a) * m + b] = num;
                    r.weight_den[std::size_t(a) * m + b] = prod;
                };
                set_cell(p, q);
                set_cell(q, p);
            }
        }
    return r;
}

namespace {

void collect_gen_cliques(const WeightedReducedGraph& r, const GeneralizedCliqueQuery& query,
                         std::vector<int>& x, int next,
                         std::vector<GeneralizedCliqueWitness>& found) {
    int want_y = query.t - int(x.size());
    if (want_y >= 0 && want_y <= int(x.size())) {
        // choose Y as an ascending |Y|-subset of X with the color and weight rules
        std::vector<int> eligible;
        for (int v : x)
            if (r.vertex_color[v] == query.color) eligible.push_back(v);
        std::vector<int> y;
        auto pick = [&](auto&& self, std::size_t from) -> void {
            if (int(y.size()) == want_y) {
                for (std::size_t i = 0; i < y.size(); ++i)
                    for (std::size_t j = i + 1; j < y.size(); ++j)
                        if (!r.heavy(y[i], y[j], query.gamma)) return;
                found.push_back({x, y});
                return;
            }
            for (std::size_t i = from; i < eligible.size(); ++i) {
                y.push_back(eligible[i]);
                self(self, i + 1);
                y.pop_back();
            }
        };
        pick(pick, 0);
    }
    if (int(x.size()) >= query.t) return;
    for (int v = next; v < r.m; ++v) {
        bool ok = true;
        for (int u : x)
            if (!r.has_edge(u, v) || r.color(u, v) != query.color) ok = false;
        if (!ok) continue;
        x.push_back(v);
        collect_gen_cliques(r, query, x, v + 1, found);
        x.pop_back();
    }
}

}  // namespace

std::optional<GeneralizedCliqueWitness> find_generalized_clique(
    const WeightedReducedGraph& r, const GeneralizedCliqueQuery& query) {
    if (query.t < 2) throw std::invalid_argument("generalized clique: need t >= 2");
    std::vector<GeneralizedCliqueWitness> found;
    std::vector<int> x;
    collect_gen_cliques(r, query, x, 0, found);
    if (found.empty()) return std::nullopt;
    auto least = std::min_element(found.begin(), found.end(),
                                  [](const auto& a, const auto& b) {
                                      if (a.x != b.x) return a.x < b.x;
                                      return a.y < b.y;
                                  });
    return *least;
}

namespace {

int argmax_degree(const Graph& g, const VertexSet& within, const VertexSet& counted) {
    int best = -1, best_d = -1;
    within.for_each([&](int v) {
        int d = g.degree_in(v, counted);
        if (d > best_d) {
            best_d = d;
            best = v;
        }
    });
    return best;
}

VertexSet greedy_then_local_cut(const Graph& g) {
    int n = g.order();
    auto improve = [&](VertexSet side) {
        bool moved = true;
        while (moved) {
            moved = false;
            VertexSet other = side.complement_in(n);
            for (int v = 0; v < n; ++v) {
                bool in_side = side.test(v);
                const VertexSet& own = in_side ? side : other;
                const VertexSet& opp = in_side ? other : side;
                if (g.degree_in(v, own) > g.degree_in(v, opp)) {
                    if (in_side) {
                        side.reset(v);
                        other.set(v);
                    } else {
                        other.reset(v);
                        side.set(v);
                    }
                    moved = true;
                }
            }
        }
        return side;
    };
    auto cut_of = [&](const VertexSet& side) {
        return g.edges_between(side, side.complement_in(n));
    };

    // sequential greedy: each vertex joins the side gaining more cut edges
    VertexSet greedy(n), other(n);
    for (int v = 0; v < n; ++v) {
        if (g.degree_in(v, other) >= g.degree_in(v, greedy))
            greedy.set(v);
        else
            other.set(v);
    }
    VertexSet best = improve(greedy);
    std::int64_t best_cut = cut_of(best);

    VertexSet rr(n);
    for (int v = 0; v < n; v += 2) rr.set(v);
    VertexSet cand = improve(rr);
    if (cut_of(cand) > best_cut) {
        best = cand;
        best_cut = cut_of(cand);
    }
    for (int restart = 0; restart < 4; ++restart) {
        Rng rng(0x5eedULL + restart);
        VertexSet start(n);
        for (int v = 0; v < n; ++v)
            if (rng.unit() < 0.5) start.set(v);
        cand = improve(start);
        if (cut_of(cand) > best_cut) {
            best = cand;
            best_cut = cut_of(cand);
        }
    }
    return best;
}

}  // namespace

ExtractorResult k3k3_extract(const Graph& g, const EdgeColoring& c, bool check_pair_fact,
                             std::int64_t node_budget) {
    if (c.colors() != 2) throw std::invalid_argument("k3k3_extract: needs a 2-coloring");
    if (mono_clique(g, c, FreenessSpec{{3, 3}}, node_budget))
        throw std::invalid_argument("k3k3_extract: coloring is not triangle-free per class");

    int n = g.order();
    Graph g1 = c.class_graph(1);
    Graph g2 = c.class_graph(2);
    ExtractorResult out;
    // class one must be the larger class; ties resolved on the edge lists so
    // that swapping the input labels cannot change the outcome
    bool swap = g1.size() < g2.size() || (g1.size() == g2.size() && g2.edges() < g1.edges());
    if (swap) std::swap(g1, g2);
    out.relabelled = swap;

    VertexSet everyone = VertexSet::full(n);
    out.x = argmax_degree(g1, everyone, everyone);
    out.big_x = out.x >= 0 ? g1.neighbors(out.x) : VertexSet(n);
    out.y = argmax_degree(g1, out.big_x, everyone);
    out.big_y = out.y >= 0 ? g1.neighbors(out.y) : VertexSet(n);
    out.z = everyone - (out.big_x | out.big_y);
    out.alpha_hat = n ? double(out.z.count()) / n : 0;

    out.x_prime = argmax_degree(g2, out.z, out.z);
    out.x_prime_nbhd = out.x_prime >= 0 ? g2.neighbors(out.x_prime) & out.z : VertexSet(n);
    out.beta_hat = n ? double(out.x_prime_nbhd.count()) / n : 0;
    out.y_prime = argmax_degree(g2, out.x_prime_nbhd, out.z);
    out.y_prime_nbhd = out.y_prime >= 0 ? g2.neighbors(out.y_prime) & out.z : VertexSet(n);

    if (check_pair_fact) {
        AlphaOptions opts;
        opts.node_budget = node_budget;
        int a = alpha(g, opts).value();
        for (int u = 0; u < n && out.fact_check_ok; ++u)
            for (int v = 0; v < n; ++v)
                if (g1.neighbors(u).count_and(g2.neighbors(v)) > a) {
                    out.fact_check_ok = false;
                    break;
                }
    }

    VertexSet side = greedy_then_local_cut(g1);
    if (n > 0 && !side.test(0)) side = side.complement_in(n);  // canonical orientation
    out.side_a = side;
    out.side_b = side.complement_in(n);
    out.cut_edges = g1.edges_between(out.side_a, out.side_b);
    out.e_g2 = g2.size();
    int mind = n;
    for (int v = 0; v < n; ++v) {
        const VertexSet& opp = side.test(v) ? out.side_b : out.side_a;
        mind = std::min(mind, g1.degree_in(v, opp));
    }
    out.cross_min_degree = n ? mind : 0;
    return out;
}

}  // namespace rtf
