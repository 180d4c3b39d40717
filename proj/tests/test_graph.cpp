#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "strongcolor/graph.hpp"
#include "test_util.hpp"

using namespace strongcolor;

TEST_CASE("graph construction basics") {
    Graph g(4, {{0, 1}, {2, 1}, {3, 0}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    // edge ids follow input order, endpoints normalized to u < v
    CHECK(g.edge(0) == std::pair<Vertex, Vertex>{0, 1});
    CHECK(g.edge(1) == std::pair<Vertex, Vertex>{1, 2});
    CHECK(g.edge(2) == std::pair<Vertex, Vertex>{0, 3});
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 0));
    CHECK(g.edge_id(2, 1) == 1);
    CHECK(g.edge_id(2, 3) == -1);
    CHECK(std::is_sorted(g.neighbors(0).begin(), g.neighbors(0).end()));
}

TEST_CASE("incident edge ids align with the adjacency list") {
    Graph g = make_petersen();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& adj = g.neighbors(v);
        const auto& inc = g.incident(v);
        REQUIRE(adj.size() == inc.size());
        for (std::size_t i = 0; i < adj.size(); ++i) {
            auto [a, b] = g.edge(inc[i]);
            CHECK(((a == v && b == adj[i]) || (b == v && a == adj[i])));
        }
    }
}

TEST_CASE("graph constructor rejects bad input") {
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("regular degree detection") {
    CHECK(make_cycle(7).regular_degree() == 2);
    CHECK(make_complete(5).regular_degree() == 4);
    CHECK_FALSE(make_star(3).regular_degree().has_value());
    CHECK(Graph(0, {}).regular_degree() == 0);
    CHECK(Graph(3, {}).regular_degree() == 0);
}

TEST_CASE("write_graph emits the documented byte format") {
    CHECK(write_graph(make_complete(3)) == "3 3\n0 1\n0 2\n1 2\n");
    CHECK(write_graph(Graph(0, {})) == "0 0\n");
    CHECK(write_graph(Graph(2, {})) == "2 0\n");
}

TEST_CASE("parse_graph round-trips every generator") {
    for (const Graph& g : {make_cycle(6), make_complete(5), make_complete_bipartite(3, 4),
                           make_star(5), make_petersen(), make_blowup_c5(2),
                           make_random_regular(12, 3, 99), make_gnp(9, 0.4, 7)}) {
        Graph back = parse_graph(write_graph(g));
        CHECK(back == g);
    }
}

TEST_CASE("parse_graph accepts comments, blank lines, and CRLF") {
    Graph g = parse_graph("# seed=42\n\n3 2\r\n0 1\n# middle note\n1 2\n\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("parse_graph error taxonomy") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        throw std::logic_error("expected a parse failure");
    };
    CHECK(kind_of("") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("3\n") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("3 x\n") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("3 1\n0 1 2\n") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("3 2\n0 1\n") == ParseError::Kind::MalformedLine); // missing edge line
    CHECK(kind_of("3 1\n0 3\n") == ParseError::Kind::VertexOutOfRange);
    CHECK(kind_of("3 1\n1 1\n") == ParseError::Kind::SelfLoop);
    CHECK(kind_of("3 2\n0 1\n1 0\n") == ParseError::Kind::DuplicateEdge);

    try {
        parse_graph("# header\n3 1\n# note\n0 9\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::VertexOutOfRange);
        CHECK(e.line() == 4); // line numbers count raw lines, comments included
    }
}

TEST_CASE("generator shapes") {
    Graph c3 = make_cycle(3);
    CHECK(c3.edge_count() == 3);
    CHECK(testutil::triangles_oracle(c3) == 1);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);

    Graph k5 = make_complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.regular_degree() == 4);

    Graph k34 = make_complete_bipartite(3, 4);
    CHECK(k34.edge_count() == 12);
    CHECK(testutil::triangles_oracle(k34) == 0);

    Graph star = make_star(4);
    CHECK(star.vertex_count() == 5);
    CHECK(star.degree(0) == 4); // vertex 0 is the center
    CHECK(star.edge_count() == 4);

    Graph pet = make_petersen();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.regular_degree() == 3);
    CHECK(testutil::triangles_oracle(pet) == 0);
    CHECK(pet.has_edge(0, 5)); // spoke
    CHECK(pet.has_edge(5, 7)); // pentagram step
    CHECK_FALSE(pet.has_edge(5, 6));

    Graph b1 = make_blowup_c5(1);
    CHECK(b1 == make_cycle(5));
    Graph b2 = make_blowup_c5(2);
    CHECK(b2.vertex_count() == 10);
    CHECK(b2.edge_count() == 20);
    CHECK(b2.regular_degree() == 4);
    CHECK_FALSE(b2.has_edge(0, 1)); // inside one part
    CHECK(b2.has_edge(0, 2));       // consecutive parts
    CHECK_FALSE(b2.has_edge(0, 4)); // parts two apart
}

TEST_CASE("random regular generator") {
    Graph g = make_random_regular(24, 6, 2024);
    CHECK(g.vertex_count() == 24);
    CHECK(g.edge_count() == 72);
    CHECK(g.regular_degree() == 6);
    CHECK(g == make_random_regular(24, 6, 2024));
    CHECK_FALSE(g == make_random_regular(24, 6, 2025));
    CHECK_THROWS_AS(make_random_regular(5, 3, 1), std::invalid_argument); // odd sum
    CHECK_THROWS_AS(make_random_regular(4, 4, 1), std::invalid_argument); // r >= n
    CHECK(make_random_regular(5, 0, 1).edge_count() == 0);
}

TEST_CASE("gnp generator") {
    CHECK(make_gnp(20, 0.0, 5).edge_count() == 0);
    CHECK(make_gnp(20, 1.0, 5).edge_count() == 190);
    Graph g = make_gnp(16, 0.37, 11);
    CHECK(g == make_gnp(16, 0.37, 11));
    CHECK_FALSE(g == make_gnp(16, 0.37, 12));
    CHECK_THROWS_AS(make_gnp(5, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_gnp(5, 1.1, 1), std::invalid_argument);
}

TEST_CASE("embed_regular completes a host to the target degree") {
    Graph p3(3, {{0, 1}, {1, 2}});
    Graph host = embed_regular(p3, 2);
    CHECK(host.regular_degree() == 2);
    CHECK(host.vertex_count() == 6);
    // originals keep their labels and their edges
    CHECK(host.has_edge(0, 1));
    CHECK(host.has_edge(1, 2));

    Graph single = embed_regular(Graph(1, {}), 2);
    CHECK(single.regular_degree() == 2);
    CHECK(single.vertex_count() == 4);
    CHECK(single.edge_count() == 4);

    Graph same = embed_regular(make_cycle(5), 2);
    CHECK(same == make_cycle(5)); // already regular, untouched

    CHECK_THROWS_AS(embed_regular(make_star(4), 3), std::invalid_argument);
}

TEST_CASE("local density around a vertex") {
    LocalDensity clique = local_density(make_complete(5), 0, 4);
    CHECK(clique.inside_edges == 6);
    CHECK(clique.delta == doctest::Approx(0.0));

    LocalDensity star = local_density(make_star(4), 0, 4);
    CHECK(star.inside_edges == 0);
    CHECK(star.delta == doctest::Approx(1.0));

    LocalDensity pet = local_density(make_petersen(), 0, 3);
    CHECK(pet.inside_edges == 0);
    CHECK(pet.delta == doctest::Approx(1.0));

    // slack r: C5 vertex seen as if it had degree 4
    LocalDensity slack = local_density(make_cycle(5), 0, 4);
    CHECK(slack.inside_edges == 0);
    CHECK(slack.delta == doctest::Approx(1.0));

    CHECK(local_density(make_complete(2), 0, 1).delta == doctest::Approx(1.0));
    CHECK_THROWS_AS(local_density(make_cycle(5), 7, 2), std::invalid_argument);
    CHECK_THROWS_AS(local_density(make_cycle(5), 0, 1), std::invalid_argument); // r < degree
}
