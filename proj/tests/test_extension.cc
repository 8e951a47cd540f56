#include "oracles.hh"

#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/extension.hh>
#include <fodef/operations.hh>
#include <fodef/random.hh>

#include <doctest.h>

using namespace fodef;

namespace
{
    // No vertex outside X and Y sees all of X and none of Y.
    auto is_counterexample(const Graph & g, const std::vector<int> & x, const std::vector<int> & y) -> bool
    {
        for (int z = 0; z < g.size(); ++z) {
            bool ok = true;
            for (int u : x)
                ok = ok && u != z && g.adjacent(z, u);
            for (int u : y)
                ok = ok && u != z && ! g.adjacent(z, u);
            if (ok)
                return false;
        }
        return true;
    }
}

TEST_CASE("check_ea agrees with brute force on all small graphs")
{
    for (int n = 0; n <= 5; ++n)
        for (auto & g : oracle::all_graphs(n))
            for (int k = 1; k <= 3; ++k) {
                bool expected = oracle::ea(g, k);
                auto report = check_ea(g, k);
                CHECK(report.holds == expected);
                CHECK(check_ea_reference(g, k) == expected);
                if (! report.holds) {
                    REQUIRE(report.counterexample);
                    auto & [x, y] = *report.counterexample;
                    CHECK(static_cast<int>(x.size() + y.size()) < k);
                    CHECK(is_counterexample(g, x, y));
                }
            }
}

TEST_CASE("check_ea agrees with brute force on random graphs")
{
    Rng rng(8);
    for (int i = 0; i < 40; ++i) {
        auto g = gnp(7 + static_cast<int>(rng.below(6)), 0.5, rng.next());
        for (int k = 2; k <= 4; ++k) {
            auto serial = check_ea(g, k, Execution::Serial);
            auto parallel = check_ea(g, k, Execution::Parallel);
            CHECK(serial.holds == oracle::ea(g, k));
            CHECK(serial.holds == parallel.holds);
            CHECK(serial.counterexample == parallel.counterexample);
        }
    }
}

TEST_CASE("extension axioms of named graphs")
{
    CHECK(check_ea(paley(13), 3).holds);
    CHECK(! check_ea(paley(13), 4).holds);
    CHECK(check_ea(rook(3), 3).holds);
    CHECK(check_ea(cycle(4), 2).holds);
    CHECK(check_ea(multiple(2, complete(2)), 2).holds);
    CHECK(! check_ea(complete(4), 2).holds);
    CHECK(check_ea(complete(1), 1).holds);
    auto empty = check_ea(Graph(0), 1);
    CHECK(! empty.holds);
    REQUIRE(empty.counterexample);
    CHECK(empty.counterexample->first.empty());
    CHECK_THROWS_AS(check_ea(paley(13), 0), InvalidArgument);
    CHECK_THROWS_AS(check_ea(gnp(500, 0.5, 1), 5), GuardExceeded);
}

TEST_CASE("certificates")
{
    auto good = certify_extension_lower(complete(3), 3, cycle(4));
    CHECK(good.valid());
    CHECK(good.failure().empty());

    auto contains = certify_extension_lower(path(3), 3, cycle(5));
    CHECK(! contains.f_free());
    CHECK(! contains.valid());
    CHECK(! contains.failure().empty());

    auto weak = certify_extension_lower(complete(3), 4, cycle(4));
    CHECK(! weak.ea_holds());
    CHECK(! weak.valid());

    CHECK(certify_extension_lower(complete(2), 1, empty_graph(1)).valid());
}

TEST_CASE("exhaustive witness search")
{
    auto k3 = search_witness(complete(3), 3, {});
    REQUIRE(k3.certificate);
    CHECK(k3.certificate->valid());
    CHECK(oracle::isomorphic(k3.certificate->h, multiple(2, complete(2))));
    CHECK(k3.description == "n=4 edges=2 mask=12");

    auto k2 = search_witness(complete(2), 2, {});
    REQUIRE(k2.certificate);
    CHECK(k2.certificate->h == empty_graph(2));

    WitnessSearch tiny;
    tiny.budget = 3;
    auto exhausted = search_witness(complete(4), 4, tiny);
    CHECK(! exhausted.certificate);
    CHECK(exhausted.examined == 3);
}

TEST_CASE("sampled witness search is reproducible")
{
    WitnessSearch search;
    search.strategy = WitnessStrategy::TuranRandomSampling;
    search.budget = 60;
    search.seed = 7;
    auto a = search_witness(complete(4), 4, search);
    auto b = search_witness(complete(4), 4, search);
    REQUIRE(a.certificate);
    CHECK(a.certificate->valid());
    CHECK(a.description == b.description);
    CHECK(a.certificate->h == b.certificate->h);

    search.strategy = WitnessStrategy::GnpSampling;
    search.sizes = {4};
    auto gnp_search = search_witness(complete(3), 3, search);
    REQUIRE(gnp_search.certificate);
    CHECK(gnp_search.certificate->valid());
}

TEST_CASE("chromatic lower bound and random rates")
{
    CHECK(chi_lower(complete(5)) == 5);
    CHECK(chi_lower(cycle(5)) == 3);
    CHECK(chi_lower(paw()) == 3);
    CHECK(empirical_ea_rate(64, 3, 30, 12345) == empirical_ea_rate(64, 3, 30, 12345, Execution::Serial));
    CHECK(empirical_ea_rate(3, 3, 20, 1) == 0.0);
}
