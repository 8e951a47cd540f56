#include "oracles.hh"

#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/graph6.hh>
#include <fodef/names.hh>
#include <fodef/operations.hh>
#include <fodef/random.hh>
#include <fodef/structure.hh>

#include <doctest.h>

#include <sstream>

using namespace fodef;

TEST_CASE("constructors have the expected sizes")
{
    CHECK(complete(4).edge_count() == 6);
    CHECK(empty_graph(5).edge_count() == 0);
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(star(3) == claw());
    CHECK(paw().edge_count() == 4);
    CHECK(diamond().edge_count() == 5);
    CHECK(rook(3).size() == 9);
    CHECK(rook(3).edge_count() == 18);
    CHECK(hypercube(3).size() == 8);
    CHECK(hypercube(3).edge_count() == 12);
    CHECK(turan(3, 2).edge_count() == 12);
    CHECK(paley(13).edge_count() == 39);
    CHECK_THROWS_AS(paley(15), InvalidArgument);
    CHECK_THROWS_AS(paley(7), InvalidArgument);
}

TEST_CASE("every constructed graph is well formed")
{
    for (auto & g : {complete(7), path(9), cycle(70), rook(4), paley(29), hypercube(6), turan_random(3, 30, 5), gnp(100, 0.3, 9)}) {
        CHECK(g.well_formed());
        for (int v = 0; v < g.size(); ++v)
            CHECK(! g.adjacent(v, v));
    }
}

TEST_CASE("random constructors are reproducible")
{
    CHECK(gnp(40, 0.5, 123) == gnp(40, 0.5, 123));
    CHECK(gnp(40, 0.5, 123) != gnp(40, 0.5, 124));
    CHECK(turan_random(3, 10, 8) == turan_random(3, 10, 8));
    CHECK(stream_seed(1, 2) != stream_seed(2, 1));
    CHECK(gnp(10, 0.0, 1).edge_count() == 0);
    CHECK(gnp(10, 1.0, 1).edge_count() == 45);
}

TEST_CASE("random Turan subgraphs keep the parts independent")
{
    auto g = turan_random(3, 12, 77);
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            if (u / 12 == v / 12)
                CHECK(! g.adjacent(u, v));
}

TEST_CASE("graph6 matches reference encodings")
{
    // Encodings produced by networkx.to_graph6_bytes.
    CHECK(graph6_encode(complete(1)) == "@");
    CHECK(graph6_encode(complete(2)) == "A_");
    CHECK(graph6_encode(complete(3)) == "Bw");
    CHECK(graph6_encode(path(4)) == "Ch");
    CHECK(graph6_encode(cycle(5)) == "Dhc");
    CHECK(graph6_decode(">>graph6<<Dhc\n") == cycle(5));
}

TEST_CASE("graph6 round trips labeled graphs")
{
    for (int n = 0; n <= 5; ++n)
        for (auto & g : oracle::all_graphs(n))
            CHECK(graph6_decode(graph6_encode(g)) == g);
    for (int n : {62, 63, 64, 65, 200})
        CHECK(graph6_decode(graph6_encode(gnp(n, 0.5, static_cast<std::uint64_t>(n)))) == gnp(n, 0.5, static_cast<std::uint64_t>(n)));

    std::istringstream in("A_\n\nBw\n");
    auto all = graph6_read_all(in);
    REQUIRE(all.size() == 2);
    CHECK(all[1] == complete(3));
}

TEST_CASE("graph6 errors carry the byte offset")
{
    try {
        graph6_decode("C\x01");
        FAIL("expected Graph6Error");
    }
    catch (const Graph6Error & e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(graph6_decode("C"), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("Chh"), Graph6Error);
}

TEST_CASE("graph algebra uses the documented indexing")
{
    auto u = disjoint_union(complete(2), path(3));
    CHECK(u.size() == 5);
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(2, 3));
    CHECK(! u.adjacent(1, 2));

    CHECK(join(complete(1), complete(1)) == complete(2));
    CHECK(oracle::isomorphic(join(empty_graph(2), empty_graph(2)), cycle(4)));

    // Vertex (a, b) of A . B has index a * |B| + b.
    auto l = lex_product(path(3), empty_graph(2));
    CHECK(l.size() == 6);
    CHECK(l.adjacent(0, 2));
    CHECK(l.adjacent(1, 3));
    CHECK(! l.adjacent(0, 1));
    CHECK(! l.adjacent(0, 4));

    CHECK(power(complete(1), 1) == complete(1));
    CHECK(power(complete(1), 2) == complete(2));
    CHECK(oracle::isomorphic(power(complete(1), 3), cycle(4)));
    CHECK(power(path(3), 3).size() == 12);
    CHECK(multiple(3, complete(2)).edge_count() == 3);
    CHECK(oracle::isomorphic(complement(multiple(2, complete(2))), cycle(4)));
    CHECK(complement(complement(paley(13))) == paley(13));
}

TEST_CASE("distance profiles")
{
    CHECK(is_distance_regular(hypercube(3)));
    CHECK(is_distance_regular(cycle(6)));
    CHECK(is_distance_regular(paley(13)));
    CHECK(! is_distance_regular(path(4)));
    CHECK(! is_distance_regular(disjoint_union(cycle(3), cycle(3))));
    CHECK(similar(hypercube(3), cycle(6)));
    CHECK(! similar(cycle(6), cycle(5)));
    CHECK_THROWS_AS(similar(path(4), cycle(4)), NotDistanceRegular);

    auto p = distance_profile(cycle(6));
    REQUIRE(p.well_defined());
    CHECK(p.diameter() == 3);
    CHECK(p.f(1, 1, 2) == 1);
    CHECK(p.f(2, 2, 2) == 1);
    CHECK(p.f(3, 1, 2) == 1);
    CHECK(p.f(3, 3, 2) == 0);
    long long total = 0;
    for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j)
            total += p.f(i, j, 1);
    CHECK(total == 6);
}

TEST_CASE("strongly regular parameters")
{
    auto c5 = is_strongly_regular(cycle(5));
    REQUIRE(c5);
    CHECK(*c5 == SrgParams{5, 2, 0, 1});
    auto p13 = is_strongly_regular(paley(13));
    REQUIRE(p13);
    CHECK(*p13 == SrgParams{13, 6, 2, 3});
    CHECK(p13->nontrivial());
    CHECK(p13->feasible());
    CHECK(! is_strongly_regular(path(3)));
    auto k4 = is_strongly_regular(complete(4));
    REQUIRE(k4);
    CHECK(k4->degenerate());
    CHECK(! k4->nontrivial());
}

TEST_CASE("vertex connectivity")
{
    CHECK(vertex_connectivity(complete(5)) == 4);
    CHECK(vertex_connectivity(cycle(7)) == 2);
    CHECK(vertex_connectivity(path(4)) == 1);
    CHECK(vertex_connectivity(empty_graph(3)) == 0);
    CHECK(vertex_connectivity(hypercube(3)) == 3);
    CHECK(vertex_connectivity(rook(4)) == 6);
    CHECK(is_s_connected(hypercube(4), 4));
    CHECK(! is_s_connected(hypercube(4), 5));
}

TEST_CASE("chromatic number, twins and automorphisms")
{
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(complete(6)) == 6);
    CHECK(chromatic_number(empty_graph(4)) == 1);
    CHECK(chromatic_number(paley(13)) == 5);
    CHECK(chromatic_number(rook(3)) == 3);

    auto t = twins(path(3));
    REQUIRE(t.size() == 1);
    CHECK(t[0] == TwinPair{0, 2, false});
    CHECK(twins(complete(3)).size() == 3);
    CHECK(twins(cycle(5)).empty());

    CHECK(automorphism_exists(cycle(6), {{0, 3}}));
    CHECK(! automorphism_exists(path(3), {{0, 1}}));
    CHECK(find_isomorphism(hypercube(3), hypercube(3)).has_value());
    CHECK(isomorphic(complement(cycle(5)), cycle(5)));
    CHECK(! isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
}

TEST_CASE("isomorphism agrees with brute force on small graphs")
{
    auto graphs = oracle::all_graphs(4);
    for (std::size_t i = 0; i < graphs.size(); i += 3)
        for (std::size_t j = 0; j < graphs.size(); j += 5)
            CHECK(isomorphic(graphs[i], graphs[j]) == oracle::isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("names resolve to constructors")
{
    CHECK(graph_from_name("rook:3") == rook(3));
    CHECK(graph_from_name("gnp:20,0.5,12345") == gnp(20, 0.5, 12345));
    CHECK(graph_from_name("H:3").size() == 4);
    CHECK(resolve_graph("Bw") == complete(3));
    CHECK(resolve_graph("claw") == claw());
    CHECK_THROWS_AS(graph_from_name("nosuch:3"), InvalidArgument);
    CHECK_THROWS(resolve_graph("nosuch:3"));
    CHECK(! constructor_names().empty());
}
