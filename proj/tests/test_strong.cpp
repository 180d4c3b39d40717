#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "strongcolor/graph.hpp"
#include "strongcolor/rng.hpp"
#include "strongcolor/strong.hpp"
#include "test_util.hpp"

using namespace strongcolor;

namespace {

Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph octahedron() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) edges.push_back({u, v});
    return Graph(6, edges);
}

Graph cube() {
    // vertices are 3-bit strings, edges flip one bit
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            Vertex v = u ^ (1 << b);
            if (u < v) edges.push_back({u, v});
        }
    return Graph(8, edges);
}

} // namespace

TEST_CASE("edge distance matches the definitional oracle") {
    for (const Graph& g : {make_petersen(), make_gnp(9, 0.35, 31), make_gnp(8, 0.6, 32),
                           prism(), make_star(5)}) {
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f = 0; f < g.edge_count(); ++f)
                CHECK(edge_distance_le1(g, e, f) == testutil::edges_close(g, e, f));
    }
}

TEST_CASE("strong neighborhood is the oracle's list, sorted, without e") {
    for (const Graph& g : {make_cycle(7), make_petersen(), make_gnp(9, 0.4, 77)}) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto got = strong_neighborhood(g, e);
            CHECK(std::is_sorted(got.begin(), got.end()));
            CHECK(got == testutil::strong_neighborhood_oracle(g, e));
        }
    }
    CHECK_THROWS_AS(strong_neighborhood(make_cycle(3), 5), std::invalid_argument);
}

TEST_CASE("square_linegraph maps edge ids to vertices") {
    Graph sq = square_linegraph(make_cycle(5));
    CHECK(sq == make_complete(5)); // all five edges pairwise within distance 1

    Graph two_matchings = square_linegraph(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(two_matchings.vertex_count() == 2);
    CHECK(two_matchings.edge_count() == 0);

    CHECK(square_linegraph(make_star(3)) == make_complete(3));

    Graph p6 = square_linegraph(make_cycle(6));
    CHECK(p6.vertex_count() == 6);
    for (EdgeId e = 0; e < 6; ++e) {
        CHECK(p6.degree(e) == 4); // all but the opposite edge
        CHECK_FALSE(p6.has_edge(e, (e + 3) % 6));
    }
}

TEST_CASE("strong stats on worked instances") {
    SUBCASE("complete graph on four vertices") {
        StrongStats s = strong_stats(make_complete(4), 0);
        CHECK(s.u == 0);
        CHECK(s.v == 1);
        CHECK(s.delta == 3);
        CHECK(s.ds == 5);
        CHECK(s.me == 10); // the other five edges are pairwise close
        CHECK(s.common == 2);
        CHECK(s.ex_count == 1);   // X = {2,3}, one edge inside
        CHECK(s.beta_count == 4); // two ordered 4-cycle configs + two one-end triangles
        CHECK(s.x_size == 2);
        CHECK(s.y_size == 0);
        CHECK(s.mxy == 0);
        CHECK(s.c4xy == 0);
        CHECK(s.alpha == doctest::Approx(2.0 / 3.0));
        CHECK(s.beta_x == doctest::Approx(1.0 / 9.0));
        BoundCheck bc = verify_bounds(make_complete(4), 0);
        CHECK(bc.ds_ok);
        CHECK(bc.me_ok);
        CHECK(bc.regular);
        CHECK(bc.ds_equality);
        CHECK(bc.ds_bound == 5);
    }
    SUBCASE("five cycle") {
        StrongStats s = strong_stats(make_cycle(5), 0);
        CHECK(s.delta == 2);
        CHECK(s.ds == 4);
        CHECK(s.me == 6);
        CHECK(s.common == 0);
        CHECK(s.x_size == 2);
        CHECK(s.y_size == 1);
        CHECK(s.mxy == 2);
        CHECK(s.gamma_num == 0); // the one Y vertex sees all of X
        CHECK(s.c4xy == 0);
    }
    SUBCASE("seven cycle") {
        StrongStats s = strong_stats(make_cycle(7), 0);
        CHECK(s.ds == 4);
        CHECK(s.y_size == 2);
        CHECK(s.mxy == 2);
        CHECK(s.gamma_num == 2); // two Y vertices, each seeing half of X
        CHECK(s.gamma_e == doctest::Approx(2.0 / 8.0));
    }
    SUBCASE("petersen") {
        StrongStats s = strong_stats(make_petersen(), 0);
        CHECK(s.delta == 3);
        CHECK(s.ds == 12);
        CHECK(s.common == 0);
        CHECK(s.ex_count == 0);
        BoundCheck bc = verify_bounds(make_petersen(), 0);
        CHECK(bc.ds_equality);
        CHECK(bc.ds_bound == 12);
    }
    SUBCASE("crafted four-cycle through the X-Y boundary") {
        // u,v plus one private neighbor each; two Y vertices complete to both privates
        Graph g(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
        StrongStats s = strong_stats(g, 0);
        CHECK(s.x_size == 2);
        CHECK(s.y_size == 2);
        CHECK(s.mxy == 4);
        CHECK(s.c4xy == 1); // x-pair {2,3} shares the Y-pair {4,5}
        CHECK(s.gamma_num == 4);
    }
}

TEST_CASE("stats consistency invariants on sampled graphs") {
    Rng rng(424242);
    std::vector<Graph> pool = {make_petersen(), prism(), octahedron(), make_complete_bipartite(3, 4)};
    for (int i = 0; i < 6; ++i)
        pool.push_back(make_gnp(8 + (i % 2), 0.25 + 0.1 * i, derive_seed(5150, i)));
    for (const Graph& g : pool) {
        Graph sq = square_linegraph(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            StrongStats s = strong_stats(g, e);
            auto ns = strong_neighborhood(g, e);
            CHECK(s.ds == static_cast<long long>(ns.size()));
            CHECK(s.me == testutil::me_oracle(g, e));
            // twice me equals the inner degree sum over the neighborhood
            long long inner = 0;
            for (EdgeId f : ns)
                for (EdgeId h : ns)
                    if (f != h && sq.has_edge(f, h)) ++inner;
            CHECK(2 * s.me == inner);
            BoundCheck bc = verify_bounds(g, e);
            CHECK(bc.ds_ok);
            CHECK(bc.me_ok);
            if (g.regular_degree()) CHECK(bc.ds_equality);
        }
    }
}

TEST_CASE("closed form for the X-Y edge count on regular graphs") {
    std::vector<Graph> regs = {make_complete(4), make_complete(5), make_cycle(5),
                               make_cycle(6),    make_cycle(7),    make_petersen(),
                               make_complete_bipartite(3, 3), make_blowup_c5(2),
                               prism(), octahedron(), cube(), make_random_regular(16, 4, 808)};
    for (const Graph& g : regs) {
        REQUIRE(g.regular_degree().has_value());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            StrongStats s = strong_stats(g, e);
            CHECK(s.mxy == regular_mxy_closed_form(s));
        }
    }
}

TEST_CASE("stats_csv byte format") {
    CHECK(stats_csv(make_complete(3)) ==
          "edge,u,v,delta,ds,me,alpha,beta,beta_x,gamma,mxy,c4xy,bound_ds_ok,bound_me_ok\n"
          "0,0,1,2,2,1,0.5,0,0,0,0,0,1,1\n"
          "1,0,2,2,2,1,0.5,0,0,0,0,0,1,1\n"
          "2,1,2,2,2,1,0.5,0,0,0,0,0,1,1\n");
    CHECK(stats_csv(Graph(3, {})) ==
          "edge,u,v,delta,ds,me,alpha,beta,beta_x,gamma,mxy,c4xy,bound_ds_ok,bound_me_ok\n");
}

TEST_CASE("exact strong cliques against the subset oracle") {
    std::vector<Graph> pool = {make_cycle(5),  make_cycle(6), make_star(4),
                               make_complete(4), Graph(4, {{0, 1}, {2, 3}}),
                               Graph(2, {}),   make_cycle(8)};
    for (int i = 0; i < 8; ++i) pool.push_back(make_gnp(7, 0.35, derive_seed(62, i)));
    for (const Graph& g : pool) {
        if (g.edge_count() > 12) continue;
        CliqueResult res = strong_clique_exact(g);
        CHECK(res.optimal);
        CHECK(res.size == testutil::max_clique_oracle(square_linegraph(g)));
        CHECK(static_cast<int>(res.witness.size()) == res.size);
        for (std::size_t i = 0; i < res.witness.size(); ++i)
            for (std::size_t j = i + 1; j < res.witness.size(); ++j)
                CHECK(testutil::edges_close(g, res.witness[i], res.witness[j]));
    }
    CHECK(strong_clique_exact(make_cycle(5)).size == 5);
    CHECK(strong_clique_exact(make_complete(4)).size == 6);
    CHECK(strong_clique_exact(Graph(3, {})).size == 0);
}

TEST_CASE("clique search under a node budget still returns a valid witness") {
    // Host whose optimum (10) is not certifiable at the root: the greedy
    // incumbent starts at 8 and closing the gap takes 16 nodes.
    const Graph g = make_random_regular(18, 4, 5);
    CliqueResult res = strong_clique_exact(g, 3);
    CHECK_FALSE(res.optimal);
    CHECK(res.size >= 1);
    CHECK(res.size < strong_clique_exact(g).size);
    for (std::size_t i = 0; i < res.witness.size(); ++i)
        for (std::size_t j = i + 1; j < res.witness.size(); ++j)
            CHECK(testutil::edges_close(g, res.witness[i], res.witness[j]));
}

TEST_CASE("clique bound values") {
    CHECK(clique_bound_value(400) == doctest::Approx(1.7392620881178755).epsilon(1e-12));
    CHECK(clique_bound_value(400) < 1.74);
    CHECK(clique_bound_value(1) == doctest::Approx(5.405124837953327).epsilon(1e-12));
    CHECK(clique_bound_value(1e9) == doctest::Approx(1.7320508075688772).epsilon(1e-6));
    // decreasing toward the limit
    CHECK(clique_bound_value(10) > clique_bound_value(100));
    CHECK(clique_bound_value(100) > clique_bound_value(1000));
    CHECK_THROWS_AS(clique_bound_value(0), std::invalid_argument);
}
