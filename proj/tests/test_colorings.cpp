#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rtf/coloring.hpp"
#include "rtf/constructions.hpp"
#include "rtf/generators.hpp"
#include "rtf/rng.hpp"
#include "rtf/solvers.hpp"

using namespace rtf;

namespace {

Graph random_graph(int n, double density, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < density) g.add_edge(u, v);
    return g;
}

// K5 decomposed into the 5-cycle (color 1) and its diagonals (color 2)
EdgeColoring pentagon_pentagram() {
    EdgeColoring c(5, 2);
    for (int i = 0; i < 5; ++i) {
        c.set(i, (i + 1) % 5, 1);
        c.set(i, (i + 2) % 5, 2);
    }
    return c;
}

}  // namespace

TEST_CASE("edge coloring text round trip") {
    EdgeColoring c = pentagon_pentagram();
    EdgeColoring back = EdgeColoring::from_text(c.to_text());
    CHECK(back == c);
    CHECK(back.colors() == 2);
    CHECK(back.class_size(1) == 5);
    CHECK(back.class_size(2) == 5);
    CHECK_THROWS_AS(EdgeColoring::from_text("3"), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoring::from_text("3 1\n0 0 1\n"), std::invalid_argument);
}

TEST_CASE("mono_clique on the pentagon/pentagram coloring of K5") {
    Graph k5 = complete_graph(5);
    auto witness = mono_clique(k5, pentagon_pentagram(), FreenessSpec{{3, 3}});
    CHECK(!witness.has_value());
}

TEST_CASE("mono_clique finds a one-color triangle") {
    Graph k3 = complete_graph(3);
    EdgeColoring c(3, 2);
    for (auto [u, v] : k3.edges()) c.set(u, v, 1);
    auto witness = mono_clique(k3, c, FreenessSpec{{3, 3}});
    REQUIRE(witness.has_value());
    CHECK(witness->color == 1);
    CHECK(witness->clique.count() == 3);
}

TEST_CASE("mono_clique validates inputs") {
    Graph k3 = complete_graph(3);
    EdgeColoring c(3, 2);
    for (auto [u, v] : k3.edges()) c.set(u, v, 1);
    CHECK_THROWS_AS(mono_clique(k3, c, FreenessSpec{{3}}), std::invalid_argument);
    EdgeColoring partial(3, 2);
    partial.set(0, 1, 1);
    CHECK_THROWS_AS(mono_clique(k3, partial, FreenessSpec{{3, 3}}), std::invalid_argument);
}

TEST_CASE("freeness_search on complete hosts: classical anchors at small size") {
    auto r5 = freeness_search(complete_graph(5), FreenessSpec{{3, 3}});
    REQUIRE(r5.found());
    CHECK(!mono_clique(complete_graph(5), *r5.coloring, FreenessSpec{{3, 3}}));

    auto r6 = freeness_search(complete_graph(6), FreenessSpec{{3, 3}});
    CHECK(r6.proven_none());
}

TEST_CASE("freeness_search is sound and complete on small random graphs") {
    Rng rng(23);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + rng.below(4);  // up to 6
        Graph g = random_graph(n, 0.3 + 0.6 * rng.unit(), rng);
        FreenessSpec spec{{3, 3}};
        if (it % 3 == 0) spec = FreenessSpec{{3, 4}};
        auto res = freeness_search(g, spec);
        REQUIRE(res.status == SolveStatus::exact);
        CHECK(res.found() == naive::freeness_by_enumeration(g, spec));
        if (res.found()) {
            CHECK(res.coloring->covers(g));
            CHECK(!mono_clique(g, *res.coloring, spec));
        }
    }
}

TEST_CASE("freeness_search budget exhaustion is reported") {
    auto res = freeness_search(complete_graph(6), FreenessSpec{{3, 3}}, /*budget=*/5);
    CHECK(res.status == SolveStatus::incomplete);
    CHECK(!res.found());
    CHECK(!res.proven_none());
}

TEST_CASE("freeness_search with a barred color (size 2)") {
    // color 1 unusable: host must be K3-free in color 2 alone
    auto yes = freeness_search(cycle_graph(5), FreenessSpec{{2, 3}});
    CHECK(yes.found());
    auto no = freeness_search(complete_graph(3), FreenessSpec{{2, 3}});
    CHECK(no.proven_none());
}

TEST_CASE("split_partition trivial cases") {
    Graph g = cycle_graph(6);
    EdgeColoring all1(6, 2);
    for (auto [u, v] : g.edges()) all1.set(u, v, 1);
    auto res = split_partition(g, all1, alpha(g).value());
    CHECK(res.target_met);
    CHECK(res.alpha1 <= alpha(g).value());
    CHECK(res.alpha2 == 0);

    Graph edgeless(5);
    EdgeColoring none(5, 2);
    auto res2 = split_partition(edgeless, none, 5);
    CHECK(res2.target_met);
    CHECK(res2.alpha1 + res2.alpha2 <= 5 + 5);
}

TEST_CASE("freeness on complete hosts flips exactly at order six") {
    for (int n = 2; n <= 6; ++n) {
        auto res = freeness_search(complete_graph(n), FreenessSpec{{3, 3}});
        REQUIRE(res.status == SolveStatus::exact);
        CHECK(res.found() == (n <= 5));
    }
}

TEST_CASE("split_partition meets the guaranteed cap on the flagship instance") {
    // alpha(G) = 24 on 120 vertices; a split with both class alphas at most
    // floor(sqrt(alpha * n)) = 53 is guaranteed to exist
    auto f = fnd_provider(60, 24);
    auto report = build_k3k3(120, f, f);
    int target = int(std::sqrt(24.0 * 120.0));
    auto res = split_partition(report.graph, report.coloring, target);
    CHECK(res.target_met);
    CHECK(std::max(res.alpha1, res.alpha2) <= target);
    // re-verify the reported values with the exact solver
    Graph g1 = report.coloring.class_graph(1);
    Graph g2 = report.coloring.class_graph(2);
    AlphaOptions opts;
    opts.node_budget = 100'000'000;
    CHECK(alpha(g1.induced(res.side1), opts).value() == res.alpha1);
    CHECK(alpha(g2.induced(res.side2), opts).value() == res.alpha2);
}

TEST_CASE("r_star anchors") {
    auto r33 = r_star_search(2, {3, 3});
    CHECK(r33.status == SolveStatus::exact);
    CHECK(r33.value == 2);
    REQUIRE(r33.witness.has_value());
    CHECK(r33.witness->respects_vertex_rule());

    auto r22 = r_star_search(2, {2, 2});
    CHECK(r22.value == 1);

    auto r23 = r_star_search(2, {2, 3});
    CHECK(r23.status == SolveStatus::exact);
    CHECK(r23.value == 2);
}

TEST_CASE("r_star witness satisfies the endpoint rule exactly") {
    auto r = r_star_search(3, {3, 3, 3}, /*cap=*/6);
    CHECK(r.status == SolveStatus::exact);
    CHECK(r.value == 5);
    REQUIRE(r.witness.has_value());
    const StarColoring& w = *r.witness;
    CHECK(w.n == 5);
    CHECK(w.respects_vertex_rule());
    for (int u = 0; u < w.n; ++u)
        for (int v = u + 1; v < w.n; ++v) {
            int c = w.edge_color.color(u, v);
            CHECK(c != w.vertex_color[u]);
            CHECK(c != w.vertex_color[v]);
        }
    // no edge-monochromatic triangle in any class
    for (int c = 1; c <= 3; ++c)
        CHECK(!find_clique(w.edge_color.class_graph(c), 3));
}

TEST_CASE("star coloring text round trip") {
    auto r = r_star_search(3, {3, 3, 3}, 6);
    REQUIRE(r.witness.has_value());
    StarColoring back = StarColoring::from_text(r.witness->to_text());
    CHECK(back.n == r.witness->n);
    CHECK(back.vertex_color == r.witness->vertex_color);
    CHECK(back.edge_color == r.witness->edge_color);
}
