#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

Graph octahedron() {
    // K_{2,2,2}
    auto [g, parts] = turan_graph(6, 3);
    return g;
}

Graph bowtie() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    return g;
}

}  // namespace

TEST_CASE("alpha on small named graphs") {
    CHECK(alpha(cycle_graph(5)).value() == 2);
    CHECK(alpha(complete_bipartite(3, 3)).value() == 3);

    Graph pet = petersen_graph();
    CHECK(naive::alpha(pet) == 4);
    auto cert = alpha(pet);
    CHECK(cert.exact());
    CHECK(cert.value() == 4);
    CHECK(cert.witness.count() == 4);

    CHECK(alpha(Graph(0)).value() == 0);
    CHECK(alpha(empty_graph(7)).value() == 7);
}

TEST_CASE("alpha witness is independent and exact mode is gated") {
    Rng rng(5);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(4 + rng.below(9), rng.unit(), rng);
        auto cert = alpha(g);
        REQUIRE(cert.exact());
        CHECK(cert.witness.count() == cert.value());
        auto verts = cert.witness.to_vector();
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                CHECK(!g.has_edge(verts[i], verts[j]));
    }
    AlphaOptions opts;
    opts.exact_cap = 10;
    CHECK_THROWS_AS(alpha(complete_graph(11), opts), std::invalid_argument);
    opts.node_budget = 1000;  // explicit budget lifts the cap
    CHECK(alpha(complete_graph(11), opts).value() == 1);
}

TEST_CASE("alpha bound mode returns a sandwich") {
    Rng rng(17);
    Graph g = random_graph(40, 0.2, rng);
    AlphaOptions opts;
    opts.mode = AlphaMode::bound;
    auto bound = alpha(g, opts);
    auto exact_cert = alpha(g);
    CHECK(bound.lower <= exact_cert.value());
    CHECK(bound.upper >= exact_cert.value());
    CHECK(bound.witness.count() == bound.lower);
}

TEST_CASE("max_clique on small named graphs") {
    auto [t39, p] = turan_graph(9, 3);
    CHECK(max_clique(t39).size == 3);
    CHECK(max_clique(cycle_graph(5)).size == 2);
    CHECK(naive::max_clique(octahedron()) == 3);
    CHECK(max_clique(octahedron()).size == 3);
}

TEST_CASE("triangle packing on small named graphs") {
    CHECK(triangle_packing(cycle_graph(6), PackingMode::exact).size() == 0);
    CHECK(triangle_packing(bowtie(), PackingMode::exact).size() == 2);
    CHECK(naive::triangle_packing(octahedron()) == 4);
    auto pk = triangle_packing(octahedron(), PackingMode::exact);
    CHECK(pk.size() == 4);

    // packings are edge-disjoint triangles of the host
    Graph g = octahedron();
    std::vector<char> used(36, 0);
    for (auto [a, b, c] : pk.triangles) {
        CHECK(g.has_edge(a, b));
        CHECK(g.has_edge(a, c));
        CHECK(g.has_edge(b, c));
        for (auto [u, v] : {std::pair{a, b}, {a, c}, {b, c}}) {
            CHECK(!used[u * 6 + v]);
            used[u * 6 + v] = 1;
        }
    }
}

TEST_CASE("greedy packing is maximal") {
    Rng rng(29);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(5 + rng.below(8), 0.5, rng);
        auto pk = triangle_packing(g, PackingMode::greedy);
        std::vector<char> used(std::size_t(g.order()) * g.order(), 0);
        auto eid = [&](int u, int v) { return std::min(u, v) * g.order() + std::max(u, v); };
        for (auto [a, b, c] : pk.triangles)
            used[eid(a, b)] = used[eid(a, c)] = used[eid(b, c)] = 1;
        for (auto t : enumerate_triangles(g))
            CHECK((used[eid(t[0], t[1])] || used[eid(t[0], t[2])] || used[eid(t[1], t[2])]));
    }
}

TEST_CASE("max cut on small named graphs") {
    CHECK(max_cut_partition(cycle_graph(4), 2, CutMode::exact).crossing == 4);
    CHECK(naive::max_cut(cycle_graph(4), 2) == 4);
    CHECK(max_cut_partition(complete_graph(3), 2, CutMode::exact).crossing == 2);
    auto [t36, parts] = turan_graph(6, 3);
    CHECK(max_cut_partition(t36, 3, CutMode::exact).crossing == 12);
}

TEST_CASE("local max cut ends in a local optimum") {
    Rng rng(31);
    for (int it = 0; it < 25; ++it) {
        Graph g = random_graph(6 + rng.below(20), 0.4, rng);
        for (int p = 2; p <= 3; ++p) {
            CutOptions opts;
            opts.restarts = 2;
            auto cut = max_cut_partition(g, p, CutMode::local, opts);
            CHECK(is_cut_local_optimum(g, cut.parts));
            CHECK(cut.crossing == crossing_edges(g, cut.parts));
        }
    }
}

TEST_CASE("p-partite distance on small named graphs") {
    auto [t39, parts] = turan_graph(9, 3);
    CHECK(p_partite_distance(t39, 3, CutMode::exact).distance == 0);

    Graph t39_minus = t39;  // removing one cross edge costs exactly one addition
    {
        Graph h(9);
        bool skipped = false;
        for (auto [u, v] : t39.edges()) {
            if (!skipped) {
                skipped = true;
                continue;
            }
            h.add_edge(u, v);
        }
        t39_minus = h;
    }
    CHECK(p_partite_distance(t39_minus, 3, CutMode::exact).distance == 1);

    CHECK(p_partite_distance(cycle_graph(5), 2, CutMode::exact).distance ==
          naive::p_partite_distance(cycle_graph(5), 2));
}

TEST_CASE("shearer verdicts") {
    Graph g20 = blow_up(cycle_graph(5), 4);  // triangle-free on 20 vertices
    auto v = shearer_check(g20);
    CHECK(v.applicable);
    CHECK(v.k == 3);  // 2*9/ln 3 <= 20 < 2*16/ln 4
    CHECK(v.holds);

    auto c5 = shearer_check(cycle_graph(5));
    CHECK(c5.applicable);
    CHECK(c5.k == 1);
    CHECK(c5.holds);

    CHECK(!shearer_check(complete_graph(3)).applicable);
}

TEST_CASE("solvers agree with naive enumeration on random graphs") {
    Rng rng(101);
    for (int it = 0; it < 60; ++it) {
        int n = 4 + rng.below(9);
        double density = 0.15 + (n >= 11 ? 0.45 : 0.55) * rng.unit();
        Graph g = random_graph(n, density, rng);

        int a = alpha(g).value();
        CHECK(a == naive::alpha(g));
        CHECK(max_clique(g).size == naive::max_clique(g));
        CHECK(a == max_clique(g.complement()).size);  // alpha(G) = omega(complement)
        CHECK(triangle_packing(g, PackingMode::exact).size() == naive::triangle_packing(g));
        for (int p = 2; p <= 3; ++p) {
            CHECK(max_cut_partition(g, p, CutMode::exact).crossing == naive::max_cut(g, p));
            CHECK(p_partite_distance(g, p, CutMode::exact).distance ==
                  naive::p_partite_distance(g, p));
        }
    }
}

TEST_CASE("incomplete verdicts are reported, never silent") {
    Rng rng(41);
    Graph g = random_graph(60, 0.5, rng);
    AlphaOptions opts;
    opts.node_budget = 2;  // guaranteed to run out
    auto cert = alpha(g, opts);
    CHECK(cert.status == SolveStatus::incomplete);
    CHECK(cert.lower <= cert.upper);

    SolverLimits lim;
    lim.node_budget = 2;
    CHECK(max_clique(g, lim).status == SolveStatus::incomplete);
}
