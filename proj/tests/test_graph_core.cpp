#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtf/generators.hpp"
#include "rtf/graph6.hpp"
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

Graph random_triangle_free(int n, Rng& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    rng.shuffle(pairs);
    Graph g(n);
    for (auto [u, v] : pairs) {
        if (rng.unit() < 0.4) continue;
        if (!g.neighbors(u).intersects(g.neighbors(v))) g.add_edge(u, v);
    }
    return g;
}

}  // namespace

TEST_CASE("turan graph shapes and counts") {
    auto [k22, p22] = turan_graph(4, 2);
    CHECK(k22.size() == 4);
    CHECK(p22.sizes() == std::vector<int>{2, 2});

    auto [t3, p3] = turan_graph(10, 3);
    CHECK(p3.sizes() == std::vector<int>{4, 3, 3});
    CHECK(t3.size() == 33);

    auto [t39, p39] = turan_graph(9, 3);
    CHECK(t39.size() == 27);
    CHECK(alpha(t39).value() == 3);

    CHECK_THROWS_AS(turan_graph(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(turan_graph(3, 0), std::invalid_argument);
}

TEST_CASE("turan edge count matches the closed form and alpha = ceil(n/p)") {
    for (int n = 1; n <= 14; ++n)
        for (int p = 1; p <= n; ++p) {
            auto [g, parts] = turan_graph(n, p);
            CHECK(g.is_consistent());
            std::int64_t predicted = 0;
            auto sz = parts.sizes();
            for (std::size_t i = 0; i < sz.size(); ++i)
                for (std::size_t j = i + 1; j < sz.size(); ++j)
                    predicted += std::int64_t(sz[i]) * sz[j];
            CHECK(g.size() == predicted);
            CHECK(alpha(g).value() == (n + p - 1) / p);
        }
}

TEST_CASE("blow_up basics") {
    Graph c5 = cycle_graph(5);
    CHECK(blow_up(c5, 1) == c5);

    Graph b = blow_up(c5, 3);
    CHECK(b.order() == 15);
    CHECK(b.min_degree() == 6);
    CHECK(b.max_degree() == 6);
    CHECK(is_triangle_free(b));
    CHECK(alpha(b).value() == 6);

    Graph k2 = complete_graph(2);
    CHECK(blow_up(k2, 4) == complete_bipartite(4, 4));
}

TEST_CASE("blow_up multiplies alpha of odd cycles") {
    Graph c5 = cycle_graph(5);
    for (int t = 1; t <= 5; ++t) {
        Graph b = blow_up(c5, t);
        CHECK(is_triangle_free(b));
        CHECK(alpha(b).value() == 2 * t);
    }
}

TEST_CASE("clone_vertices") {
    Graph k2 = complete_graph(2);
    VertexSet s(2);
    s.set(0);
    auto r = clone_vertices(k2, s);
    CHECK(r.graph.order() == 3);
    CHECK(r.graph.size() == 2);
    CHECK(r.graph.has_edge(2, 1));
    CHECK(!r.graph.has_edge(2, 0));

    Graph c5 = cycle_graph(5);
    VertexSet one(5);
    one.set(0);
    auto rc = clone_vertices(c5, one);
    CHECK(rc.graph.order() == 6);
    CHECK(rc.graph.size() == 7);
    CHECK(is_triangle_free(rc.graph));
}

TEST_CASE("clones keep triangle-free graphs triangle-free") {
    Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        int n = 5 + rng.below(10);  // up to 14
        Graph g = random_triangle_free(n, rng);
        REQUIRE(is_triangle_free(g));
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng.unit() < 0.3) s.set(v);
        auto r = clone_vertices(g, s);
        CHECK(r.graph.is_consistent());
        CHECK(is_triangle_free(r.graph));
    }
}

TEST_CASE("andrasfai family") {
    for (int k = 2; k <= 5; ++k) {
        Graph a = andrasfai_graph(k);
        CHECK(a.order() == 3 * k - 1);
        CHECK(a.min_degree() == k);
        CHECK(a.max_degree() == k);
        CHECK(is_triangle_free(a));
        CHECK(alpha(a).value() == k);
    }
}

TEST_CASE("graph6 decode of the canonical 5-cycle bytes") {
    Graph g = graph6_decode("DUW");
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    CHECK(g.min_degree() == 2);
    CHECK(g.max_degree() == 2);
    CHECK(is_triangle_free(g));
    CHECK(alpha(g).value() == 2);
    CHECK(graph6_encode(g) == "DUW");
}

TEST_CASE("graph6 corner cases") {
    CHECK(graph6_decode("@").order() == 1);
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(Graph(0)) == "?");

    CHECK_THROWS_AS(graph6_decode(""), graph6_error);
    CHECK_THROWS_AS(graph6_decode("DUWW"), graph6_error);  // trailing bytes
    CHECK_THROWS_AS(graph6_decode("D"), graph6_error);     // missing body
    CHECK_THROWS_AS(graph6_decode("~"), graph6_error);     // truncated long header
    CHECK_THROWS_AS(graph6_decode("D\x07W"), graph6_error);
}

TEST_CASE("graph6 header switches to 4 bytes at n = 63") {
    Graph g(63);
    g.add_edge(0, 62);
    std::string s = graph6_encode(g);
    CHECK(s.size() == std::size_t(4 + (63 * 62 / 2 + 5) / 6));
    CHECK(s[0] == 126);
    Graph h = graph6_decode(s);
    CHECK(h == g);
}

TEST_CASE("graph6 round trip is the identity on random graphs") {
    Rng rng(11);
    for (int it = 0; it < 120; ++it) {
        int n = rng.below(30);
        Graph g = random_graph(n, rng.unit(), rng);
        Graph h = graph6_decode(graph6_encode(g));
        CHECK(h == g);
        CHECK(graph6_encode(h) == graph6_encode(g));
    }
}

TEST_CASE("adjacency dump format") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    CHECK(adjacency_dump(g) == "0: 1 2\n1: 0\n2: 0\n");
}

TEST_CASE("generators emit consistent graphs") {
    Rng rng(3);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + rng.below(12);
        CHECK(cycle_graph(n).is_consistent());
        CHECK(complete_graph(n).is_consistent());
        CHECK(blow_up(random_graph(n, 0.5, rng), 1 + rng.below(3)).is_consistent());
    }
    CHECK(petersen_graph().is_consistent());
    CHECK(petersen_graph().size() == 15);
}
