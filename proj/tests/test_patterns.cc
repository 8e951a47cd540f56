#include "oracles.hh"

#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/lab.hh>
#include <fodef/operations.hh>
#include <fodef/patterns.hh>
#include <fodef/random.hh>

#include <doctest.h>

#include <set>

using namespace fodef;

namespace
{
    auto small_patterns() -> std::vector<Graph>
    {
        return {complete(1), empty_graph(2), path(3), complete(3), paw(), claw(), diamond(), cycle(4), path(4),
            multiple(2, complete(2)), complete(4), cycle(5)};
    }

    auto is_induced_image(const Graph & g, const Graph & f, const std::vector<int> & image) -> bool
    {
        if (static_cast<int>(image.size()) != f.size())
            return false;
        std::set<int> distinct(image.begin(), image.end());
        if (static_cast<int>(distinct.size()) != f.size())
            return false;
        for (int i = 0; i < f.size(); ++i)
            for (int j = i + 1; j < f.size(); ++j)
                if (f.adjacent(i, j) != g.adjacent(image[i], image[j]))
                    return false;
        return true;
    }
}

TEST_CASE("induced search agrees with brute force")
{
    auto patterns = small_patterns();
    for (int n = 0; n <= 5; ++n)
        for (auto & g : oracle::all_graphs(n))
            for (auto & f : patterns) {
                auto image = contains_induced(g, f);
                REQUIRE(image.has_value() == oracle::induced(g, f));
                if (image)
                    CHECK(is_induced_image(g, f, *image));
            }
}

TEST_CASE("induced search on larger random graphs")
{
    Rng rng(17);
    auto patterns = small_patterns();
    for (int i = 0; i < 60; ++i) {
        auto g = gnp(8 + static_cast<int>(rng.below(5)), rng.uniform(), rng.next());
        for (auto & f : patterns) {
            auto image = contains_induced(g, f);
            CHECK(image.has_value() == oracle::induced(g, f));
            if (image)
                CHECK(is_induced_image(g, f, *image));
        }
    }
    CHECK(! contains_induced(paley(13), complete(4)));
    CHECK(contains_induced(paley(13), path(4)));
}

TEST_CASE("specialised detectors agree with brute force on six vertices")
{
    for (auto & g : oracle::all_graphs(6)) {
        CHECK(has_induced_paw(g) == oracle::induced(g, paw()));
        CHECK(is_paw_free(g) == ! oracle::induced(g, paw()));
        CHECK(has_induced_claw(g) == oracle::induced(g, claw()));
        CHECK(has_induced_diamond(g) == oracle::induced(g, diamond()));
        CHECK(has_induced_p4(g) == oracle::induced(g, path(4)));
        CHECK(find_triangle(g).has_value() == oracle::induced(g, complete(3)));
    }
}

TEST_CASE("triangles are reported sorted")
{
    auto t = find_triangle(complete(5));
    REQUIRE(t);
    CHECK((*t)[0] < (*t)[1]);
    CHECK((*t)[1] < (*t)[2]);
    CHECK(! find_triangle(hypercube(4)));
}

TEST_CASE("cograph recognition agrees with the recursive definition")
{
    for (int n = 0; n <= 6; ++n)
        for (auto & g : oracle::all_graphs(n)) {
            bool cograph = oracle::cograph(g);
            CHECK(is_cograph(g) == cograph);
            if (cograph && n >= 2)
                CHECK(oracle::has_twins(g));
        }
}

TEST_CASE("cocomponents")
{
    auto co = cocomponents(join(path(3), complete(2)));
    CHECK(co.size() == 5);
    CHECK(cocomponents(join(cycle(5), complete(1))).size() == 2);
    CHECK(cocomponents(cycle(5)).size() == 1);
    CHECK(split_block(cycle(4), {0, 1, 2, 3}, true).size() == 2);
    CHECK(split_block(cycle(4), {0, 1, 2, 3}, false).size() == 1);
}

TEST_CASE("decomposition of graph powers")
{
    for (int i = 1; i <= 6; ++i) {
        auto h = build_H(i);
        auto dec = decomposition(h);
        CHECK(dec.partition(0).size() == 1);
        CHECK(static_cast<int>(dec.partition(dec.stabilization_depth()).size()) == h.size());
        // Clamped beyond the last level.
        CHECK(dec.env(dec.stabilization_depth() + 5, h.size() - 1) == dec.env(dec.stabilization_depth(), h.size() - 1));
    }
    auto dec = decomposition(disjoint_union(cycle(5), complete(2)));
    CHECK(dec.partition(0).size() == 2);
    CHECK(dec.stabilization_depth() >= 1);
}

TEST_CASE("metric table")
{
    auto h = build_H(4);
    auto table = metric_table(h, 3);
    CHECK(table.size() == 8);
    CHECK(table.t() == 3);
    for (int x = 0; x < 8; ++x) {
        CHECK(table.d(x, x) == 0);
        for (int y = 0; y < 8; ++y) {
            CHECK(table.d(x, y) == table.d(y, x));
            CHECK(table.dbar(x, y) == 3 - table.d(x, y));
        }
    }
    CHECK_THROWS_AS(metric_table(cycle(5), 2), InvalidArgument);
}
