#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rtf/constructions.hpp"
#include "rtf/generators.hpp"
#include "rtf/rng.hpp"
#include "rtf/structure.hpp"

using namespace rtf;

TEST_CASE("ratio parsing") {
    CHECK(Ratio::parse("1/10").num == 1);
    CHECK(Ratio::parse("1/10").den == 10);
    CHECK(Ratio::parse("0.1").num == 1);
    CHECK(Ratio::parse("0.1").den == 10);
    CHECK(Ratio::parse("2").num == 2);
    CHECK(Ratio::parse("0.25").den == 4);
    CHECK_THROWS(Ratio::parse("1/0"));
}

TEST_CASE("drc sample count formula") {
    CHECK(drc_sample_count(4096, 0.5) == 2);  // log 4096 / (6 log 2)
    CHECK(drc_sample_count(64, 0.5) == 1);
    CHECK(drc_sample_count(65, 0.5) == 2);    // just past the boundary
    CHECK(drc_sample_count(512, 0.5) == 2);   // 9/6 rounds up
}

TEST_CASE("drc on a complete host: full common neighborhood, no bad pairs") {
    auto host = TripartiteHost::complete(64, 0.5);
    auto out = drc_sample(host, 42);
    CHECK(out.q == 1);
    CHECK(out.s_prime == host.z1);
    CHECK(out.bad_pairs == 0);
    CHECK(out.s == host.z1);
    CHECK(out.target_met);
    CHECK(drc_pairs_ok(host, out.s));
}

TEST_CASE("drc precondition failure on an isolated vertex") {
    auto host = TripartiteHost::complete(8, 0.5);
    Graph g = host.graph;
    Graph stripped(g.order());
    for (auto [u, v] : g.edges())
        if (u != 0 && v != 0) stripped.add_edge(u, v);  // vertex 0 isolated
    host.graph = stripped;
    CHECK_THROWS_AS(drc_sample(host, 1), std::invalid_argument);
}

TEST_CASE("drc returned sets always pass the pair-degree check") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto host = TripartiteHost::random_density(48, 0.75, 0.5, seed);
        auto out = drc_sample(host, seed * 977);
        CHECK(drc_pairs_ok(host, out.s));
        CHECK(out.s.is_subset_of(out.s_prime));
        CHECK(out.s_prime.is_subset_of(host.z1));
    }
}

TEST_CASE("drc expectation study on a complete host is exact") {
    auto host = TripartiteHost::complete(32, 0.5);
    auto est = drc_expectation_mc(host, 16, 7);
    CHECK(est.exact_sprime == doctest::Approx(32.0));
    CHECK(est.mean_sprime == doctest::Approx(32.0));
    CHECK(est.mean_bad == doctest::Approx(0.0));
    CHECK(est.sprime_within_3se);
    CHECK(est.lower_bound_ok);
}

TEST_CASE("drc expectation study tracks the exact sum on random hosts") {
    int hits = 0;
    const int seeds = 12;
    for (int s = 0; s < seeds; ++s) {
        auto host = TripartiteHost::random_density(64, 0.75, 0.5, 100 + s);
        auto est = drc_expectation_mc(host, 48, 1000 + s);
        if (est.sprime_within_3se) ++hits;
        CHECK(est.lower_bound_ok);
    }
    CHECK(hits >= seeds - 1);  // 3-sigma band, occasional miss tolerated
}

TEST_CASE("triangle-free process tiny cases") {
    CHECK(triangle_free_process(2, 1) == complete_graph(2));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = triangle_free_process(4, seed);
        // the only maximal triangle-free graphs on 4 vertices
        bool is_c4 = g.size() == 4 && g.min_degree() == 2 && g.max_degree() == 2;
        bool is_star = g.size() == 3 && g.max_degree() == 3;
        CHECK((is_c4 || is_star));
    }
}

TEST_CASE("triangle-free process output is triangle-free and maximal") {
    for (std::uint64_t seed : {5ULL, 6ULL}) {
        Graph g = triangle_free_process(40, seed);
        CHECK(is_triangle_free(g));
        for (int u = 0; u < 40; ++u)
            for (int v = u + 1; v < 40; ++v)
                if (!g.has_edge(u, v))
                    CHECK(g.neighbors(u).intersects(g.neighbors(v)));
    }
}

TEST_CASE("min degree extraction") {
    Graph c4 = cycle_graph(4);
    auto r = min_degree_extract(c4, Ratio{2, 5});
    CHECK(r.subgraph == c4);  // degree 2 > 1.6 everywhere
    CHECK(r.deleted.empty());

    auto star = complete_bipartite(1, 5);
    auto rs = min_degree_extract(star, Ratio{1, 2});
    CHECK(rs.subgraph.order() == 0);  // full cascade
    CHECK(rs.deleted.size() == 6);

    Graph k5 = complete_graph(5);
    auto rk = min_degree_extract(k5, Ratio{1, 2});
    CHECK(rk.subgraph.order() == 5);
}

TEST_CASE("min degree extraction conclusions on random dense graphs") {
    Rng rng(13);
    for (int it = 0; it < 25; ++it) {
        int n = 30 + rng.below(80);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < 0.75) g.add_edge(u, v);
        // d = 1/2; eps from the actual edge count: e >= (d + eps) n^2 / 2
        std::int64_t e = g.size();
        if (4 * e <= std::int64_t(n) * n) continue;
        auto r = min_degree_extract(g, Ratio{1, 2});
        std::int64_t np = r.subgraph.order();
        std::int64_t ep = r.subgraph.size();
        CHECK(8 * np * np >= 4 * e - std::int64_t(n) * n);  // n' >= sqrt(eps) n / 2
        if (np > 0) CHECK(2 * r.subgraph.min_degree() >= np);
        CHECK(4 * ep >= np * np + 4 * e - std::int64_t(n) * n - n + np);
    }
}

TEST_CASE("partition refinement") {
    auto [t3, parts] = turan_graph(9, 3);
    auto r = refine_partition(t3, parts);
    CHECK(r.completed);
    CHECK(r.trace.empty());

    // one vertex misplaced: a single move restores the Turan partition
    Partition bad = parts;
    bad.move_vertex(0, 1);
    auto r2 = refine_partition(t3, bad, Ratio{1, 10});
    CHECK(r2.completed);
    CHECK(r2.trace.size() == 1);
    CHECK(r2.trace[0].v == 0);
    CHECK(r2.trace[0].to == 0);
    CHECK(r2.parts.block(0) == parts.block(0));

    // empty graph: every vertex qualifies everywhere, the cap governs
    Graph none(6);
    auto r3 = refine_partition(none, Partition::round_robin(6, 2));
    CHECK(!r3.completed);
    CHECK(std::int64_t(r3.trace.size()) == 60);
}

TEST_CASE("refinement moves strictly cut inner edges under high min degree") {
    // Turan-like host with min degree 2n/3 and a few misplaced vertices
    auto [g, parts] = turan_graph(30, 3);
    Partition noisy = parts;
    noisy.move_vertex(0, 1);
    noisy.move_vertex(10, 2);
    noisy.move_vertex(20, 0);
    auto r = refine_partition(g, noisy, Ratio{1, 10});
    CHECK(r.completed);
    CHECK(!r.trace.empty());
    for (const auto& mv : r.trace) CHECK(mv.inner_after < mv.inner_before);
    CHECK(r.min_cross_degree == 10);
}

TEST_CASE("reduced coloring densities and priority") {
    // complete bipartite host, all edges color 2
    Graph g = complete_bipartite(4, 4);
    EdgeColoring c(8, 2);
    for (auto [u, v] : g.edges()) c.set(u, v, 2);
    Partition parts = Partition::contiguous(8, {4, 4});
    auto r = reduced_coloring(g, c, parts, Ratio{1, 10}, {1, 2});
    CHECK(r.m == 2);
    CHECK(r.has_edge(0, 1));
    CHECK(r.color(0, 1) == 2);
    CHECK(r.weight(0, 1) == doctest::Approx(1.0));

    // both classes at density 1/2: color 1 wins and carries its own weight
    Graph h = complete_bipartite(2, 2);
    EdgeColoring hc(4, 2);
    hc.set(0, 2, 1);
    hc.set(0, 3, 1);
    hc.set(1, 2, 2);
    hc.set(1, 3, 2);
    auto rh = reduced_coloring(h, hc, Partition::contiguous(4, {2, 2}), Ratio{1, 10}, {1, 1});
    CHECK(rh.color(0, 1) == 1);
    CHECK(rh.weight(0, 1) == doctest::Approx(0.5));

    Partition degenerate(4, {VertexSet(4), VertexSet::full(4)});
    CHECK_THROWS_AS(reduced_coloring(h, hc, degenerate, Ratio{1, 10}, {1, 1}),
                    std::invalid_argument);
}

TEST_CASE("reduced coloring of an assembled three-part instance") {
    // the clone-set instance on 12 vertices reduces to a triangle whose
    // pair of special parts keeps color 1 while both pairs into the clone
    // part drop to color 2
    FndGraph f1;
    f1.graph = cycle_graph(4);
    f1.d = 2;
    f1.alpha_cert = alpha(f1.graph);
    FndGraph f2;
    f2.graph = complete_graph(2);
    f2.d = 1;
    f2.alpha_cert = alpha(f2.graph);
    VertexSet b(2);
    b.set(0);
    auto report = build_k3k4(12, f1, f2, b);
    REQUIRE(report.freeness_ok());

    auto r = reduced_coloring(report.graph, report.coloring, report.parts, Ratio{3, 10},
                              {1, 2, 2});
    REQUIRE(r.m == 3);
    CHECK(r.color(1, 2) == 1);  // [X2,X3] is entirely color 1
    CHECK(r.weight(1, 2) == doctest::Approx(1.0));
    CHECK(r.color(0, 1) == 2);  // color-1 density [A,X2] = 1/4 misses the floor
    CHECK(r.color(0, 2) == 2);
    CHECK(r.weight(0, 1) == doctest::Approx(0.75));
    CHECK(r.vertex_color == std::vector<int>{1, 2, 2});
}

TEST_CASE("generalized clique search basics") {
    // single color-1 edge of weight 1, both endpoints color 1
    WeightedReducedGraph r;
    r.m = 2;
    r.vertex_color = {1, 1};
    r.edge_color = {0, 1, 1, 0};
    r.weight_num = {0, 1, 1, 0};
    r.weight_den = {1, 1, 1, 1};
    auto w = find_generalized_clique(r, GeneralizedCliqueQuery{3, Ratio{1, 10}, 1});
    REQUIRE(w.has_value());
    CHECK(w->x == std::vector<int>{0, 1});
    CHECK(w->y == std::vector<int>{0});

    // weights at exactly 1/2 + gamma fail the strict threshold
    WeightedReducedGraph r2 = r;
    r2.weight_num = {0, 3, 3, 0};
    r2.weight_den = {1, 4, 4, 1};
    auto w2 = find_generalized_clique(r2, GeneralizedCliqueQuery{4, Ratio{1, 4}, 1});
    CHECK(!w2.has_value());
}

namespace {

// direct enumeration over all (X, Y) pairs
std::optional<GeneralizedCliqueWitness> gen_clique_brute(const WeightedReducedGraph& r,
                                                         const GeneralizedCliqueQuery& q) {
    std::vector<GeneralizedCliqueWitness> all;
    for (int xm = 0; xm < (1 << r.m); ++xm) {
        std::vector<int> x;
        for (int v = 0; v < r.m; ++v)
            if (xm >> v & 1) x.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < x.size() && clique; ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (!r.has_edge(x[i], x[j]) || r.color(x[i], x[j]) != q.color) clique = false;
        if (!clique) continue;
        for (int ym = 0; ym < (1 << r.m); ++ym) {
            if ((ym & xm) != ym) continue;
            std::vector<int> y;
            for (int v = 0; v < r.m; ++v)
                if (ym >> v & 1) y.push_back(v);
            if (int(x.size() + y.size()) != q.t) continue;
            bool ok = true;
            for (int v : y)
                if (r.vertex_color[v] != q.color) ok = false;
            for (std::size_t i = 0; i < y.size() && ok; ++i)
                for (std::size_t j = i + 1; j < y.size(); ++j)
                    if (!r.heavy(y[i], y[j], q.gamma)) ok = false;
            if (ok) all.push_back({x, y});
        }
    }
    if (all.empty()) return std::nullopt;
    return *std::min_element(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
}

}  // namespace

TEST_CASE("generalized clique search agrees with brute force") {
    Rng rng(71);
    for (int it = 0; it < 60; ++it) {
        int m = 3 + rng.below(5);  // up to 7
        WeightedReducedGraph r;
        r.m = m;
        r.vertex_color.resize(m);
        for (auto& c : r.vertex_color) c = 1 + rng.below(2);
        r.edge_color.assign(m * m, 0);
        r.weight_num.assign(m * m, 0);
        r.weight_den.assign(m * m, 1);
        for (int p = 0; p < m; ++p)
            for (int q = p + 1; q < m; ++q) {
                if (rng.unit() < 0.3) continue;
                int color = 1 + rng.below(2);
                long long num = rng.below(10) + 1, den = 10;
                for (int a : {p * m + q, q * m + p}) {
                    r.edge_color[a] = color;
                    r.weight_num[a] = num;
                    r.weight_den[a] = den;
                }
            }
        for (int t = 2; t <= 6; ++t)
            for (int color = 1; color <= 2; ++color) {
                GeneralizedCliqueQuery q{t, Ratio{1, 10}, color};
                auto mine = find_generalized_clique(r, q);
                auto ref = gen_clique_brute(r, q);
                REQUIRE(mine.has_value() == ref.has_value());
                if (mine) {
                    CHECK(mine->x == ref->x);
                    CHECK(mine->y == ref->y);
                }
            }
    }
}

TEST_CASE("k3k3 extractor on a small assembled instance") {
    auto c5 = fnd_provider(5, 2);
    auto report = build_k3k3(10, c5, c5);
    auto ex = k3k3_extract(report.graph, report.coloring);
    CHECK(ex.relabelled);  // crossing class is the larger one
    CHECK(ex.side_a == report.parts.block(0));
    CHECK(ex.side_b == report.parts.block(1));
    CHECK(ex.cross_min_degree == 5);
    CHECK(ex.cut_edges == 25);
    CHECK(ex.e_g2 == 10);
    CHECK(ex.fact_check_ok);

    // swapping the labels leaves the split unchanged
    EdgeColoring swapped = report.coloring;
    swapped.relabel(1, 2);
    auto ex2 = k3k3_extract(report.graph, swapped);
    CHECK(ex2.side_a == ex.side_a);
    CHECK(ex2.side_b == ex.side_b);
}

TEST_CASE("k3k3 extractor degenerate inputs") {
    Graph c5 = cycle_graph(5);
    EdgeColoring all1(5, 2);
    for (auto [u, v] : c5.edges()) all1.set(u, v, 1);
    auto ex = k3k3_extract(c5, all1);
    CHECK(ex.e_g2 == 0);
    CHECK(ex.cut_edges >= 4);  // best bipartition of a 5-cycle

    Graph kmm = complete_bipartite(4, 4);
    EdgeColoring cross1(8, 2);
    for (auto [u, v] : kmm.edges()) cross1.set(u, v, 1);
    auto ex2 = k3k3_extract(kmm, cross1);
    CHECK(ex2.cut_edges == 16);
    CHECK(ex2.e_g2 == 0);

    Graph k3 = complete_graph(3);
    EdgeColoring mono(3, 2);
    for (auto [u, v] : k3.edges()) mono.set(u, v, 1);
    CHECK_THROWS_AS(k3k3_extract(k3, mono), std::invalid_argument);
}
