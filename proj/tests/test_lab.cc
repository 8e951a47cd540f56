#include "oracles.hh"

#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/lab.hh>
#include <fodef/operations.hh>
#include <fodef/patterns.hh>

#include <doctest.h>

#include <fstream>
#include <set>

using namespace fodef;

TEST_CASE("graph powers H_i")
{
    for (int i = 1; i <= 8; ++i)
        CHECK(build_H(i).size() == 1 << (i - 1));
    CHECK(oracle::isomorphic(build_H(3), cycle(4)));
    for (int i = 1; i <= 6; ++i)
        CHECK(oracle::cograph(build_H(i)));
    CHECK_THROWS_AS(build_H(9), GuardExceeded);
    CHECK_THROWS_AS(build_H(0), InvalidArgument);
}

TEST_CASE("build_G checks its preconditions")
{
    auto a = paley(13);
    auto g = build_G(3, a);
    CHECK(g.size() == 208);
    CHECK(has_induced_p4(g));
    CHECK(g == lex_product(build_H(3), lex_product(a, build_H(3))));
    CHECK(build_G(1, a) == a);
    CHECK_THROWS_AS(build_G(2, a), InvalidArgument);
    CHECK_THROWS_AS(build_G(3, path(4)), InvalidArgument);
    try {
        build_G(3, cycle(5));
        FAIL("expected InvalidArgument");
    }
    catch (const InvalidArgument & e) {
        CHECK(std::string(e.what()).find("ea_3") != std::string::npos);
    }
}

TEST_CASE("profile names")
{
    for (auto p : {Profile::Quick, Profile::Default, Profile::Deep})
        CHECK(parse_profile(to_string(p)) == p);
    CHECK_THROWS_AS(parse_profile("fast"), InvalidArgument);
}

TEST_CASE("registry ids are sorted and unique")
{
    auto & registry = check_registry();
    std::set<std::string> ids;
    std::string previous;
    for (auto & check : registry) {
        CHECK(check.id > previous);
        previous = check.id;
        ids.insert(check.id);
        CHECK(! check.anchor.empty());
        CHECK(check.run);
    }
    CHECK(ids.size() == registry.size());
}

TEST_CASE("registry matches the checked-in manifest")
{
    std::ifstream in(FODEF_CHECK_MANIFEST);
    REQUIRE(in);
    std::vector<std::string> manifest;
    for (std::string line; std::getline(in, line);)
        if (! line.empty())
            manifest.push_back(line);
    std::vector<std::string> ids;
    for (auto & check : check_registry())
        ids.push_back(check.id);
    CHECK(ids == manifest);
}

TEST_CASE("filters and profiles")
{
    VerifyOptions options;
    options.filter = "paw";
    options.profile = Profile::Quick;
    auto results = verify_paper(options);
    REQUIRE(! results.empty());
    for (auto & r : results) {
        CHECK(r.id.find("paw") != std::string::npos);
        if (r.id == "paw.sentence" || r.id == "paw.olariu" || r.id == "paw.sentence-n8") {
            CHECK(r.status == CheckStatus::Skipped);
            CHECK(! r.reason.empty());
        }
        else
            CHECK(r.status == CheckStatus::Pass);
    }
}

TEST_CASE("checks are reproducible")
{
    VerifyOptions options;
    options.filter = "kappa";
    options.seed = 11;
    options.workers = 2;
    auto a = verify_paper(options), b = verify_paper(options);
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].details == b[i].details);
        CHECK(a[i].seed == b[i].seed);
    }
    auto direct = kappa_experiments(11);
    REQUIRE(direct.size() == 2);
    CHECK(direct[0].id == "kappa.blowup");
    CHECK(direct[0].details == a[0].details);
}

TEST_CASE("result json")
{
    CheckResult r;
    r.id = "x";
    r.status = CheckStatus::Skipped;
    r.reason = "because";
    r.seed = 3;
    auto j = to_json(r);
    CHECK(j["status"] == "skipped");
    CHECK(j["reason"] == "because");
    CHECK(j["seed"] == 3);
}
