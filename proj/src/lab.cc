#include <fodef/bounds.hh>
#include <fodef/constructors.hh>
#include <fodef/corpus.hh>
#include <fodef/errors.hh>
#include <fodef/extension.hh>
#include <fodef/formula.hh>
#include <fodef/lab.hh>
#include <fodef/operations.hh>
#include <fodef/patterns.hh>
#include <fodef/pebble.hh>
#include <fodef/random.hh>
#include <fodef/structure.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

using nlohmann::json;
using std::string;
using std::vector;

namespace fodef
{
    auto build_H(int i) -> Graph
    {
        if (i < 1)
            throw InvalidArgument("build_H: i must be at least 1");
        if (i > 8)
            throw GuardExceeded("build_H: limited to i <= 8");
        return power(complete(1), i);
    }

    auto build_G(int i, const Graph & a) -> Graph
    {
        if (i < 1 || i % 2 == 0)
            throw InvalidArgument("build_G: i must be a positive odd integer");
        if (! check_ea(a, 3).holds)
            throw InvalidArgument("build_G: A does not satisfy ea_3");
        if (! contains_induced(a, path(4)))
            throw InvalidArgument("build_G: A has no induced P_4");
        auto h = build_H(i);
        return lex_product(h, lex_product(a, h));
    }

    auto parse_profile(const string & name) -> Profile
    {
        if (name == "quick")
            return Profile::Quick;
        if (name == "default")
            return Profile::Default;
        if (name == "deep")
            return Profile::Deep;
        throw InvalidArgument("unknown profile '" + name + "' (expected quick, default or deep)");
    }

    auto to_string(Profile profile) -> string
    {
        switch (profile) {
        case Profile::Quick: return "quick";
        case Profile::Default: return "default";
        case Profile::Deep: return "deep";
        }
        return "?";
    }

    auto to_string(CheckStatus status) -> string
    {
        switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        }
        return "?";
    }

    auto to_string(BudgetClass budget) -> string
    {
        switch (budget) {
        case BudgetClass::Instant: return "instant";
        case BudgetClass::Moderate: return "moderate";
        case BudgetClass::Scan: return "scan";
        case BudgetClass::Deep: return "deep";
        }
        return "?";
    }

    auto to_json(const CheckResult & r) -> json
    {
        json j{{"id", r.id}, {"anchor", r.anchor}, {"status", to_string(r.status)}, {"details", r.details}, {"seconds", r.seconds}};
        if (! r.reason.empty())
            j["reason"] = r.reason;
        if (r.seed)
            j["seed"] = *r.seed;
        return j;
    }

    namespace
    {
        // Regression values computed by this code base, not taken from any proof.
        constexpr std::uint64_t turan_seed = 2024;
        constexpr std::uint64_t rate_seed = 12345;
        constexpr std::uint64_t witness_seed = 7;
        constexpr std::uint64_t connectivity_seed = 60;
        constexpr long long turan_threshold_k3 = 35;
        constexpr int turan_samples = 50;
        constexpr int turan_min_passes = 45;
        constexpr int d3_g3_h3 = 3;
        const vector<int> p4_h_rounds{2, 2, 3, 3, 3, 3};

        class Recorder
        {
            vector<string> _failures;

        public:
            CheckResult result;

            auto require(bool ok, const string & what) -> bool
            {
                if (! ok)
                    _failures.push_back(what);
                return ok;
            }

            auto finish() -> CheckResult
            {
                if (! _failures.empty()) {
                    result.status = CheckStatus::Fail;
                    result.reason = _failures.front();
                    result.details["failures"] = _failures;
                }
                return std::move(result);
            }
        };

        auto outcome_json(const GameOutcome & o) -> json
        {
            return to_string(o);
        }

        auto scan_json(const ScanResult & s) -> json
        {
            json j{{"graphs", s.graphs}, {"failures", s.failures}};
            if (s.first_failure)
                j["first_failure"] = {{"n", s.first_failure->first}, {"mask", s.first_failure->second}};
            return j;
        }

        auto rational_log2(const Rational & r) -> double
        {
            auto num = boost::multiprecision::numerator(r);
            auto den = boost::multiprecision::denominator(r);
            Dyadic a{num, 0}, b{den, 0};
            return a.log2() - b.log2();
        }

        auto random_graph(Rng & rng, int min_n, int max_n) -> Graph
        {
            int n = min_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - min_n + 1)));
            return gnp(n, 0.5, rng.next());
        }

        auto two_k2() -> Graph
        {
            return multiple(2, complete(2));
        }

        auto check_paw_sentence(int max_n) -> CheckResult
        {
            Recorder rec;
            CompiledSentence sentence(paw_sentence());
            auto paw_graph = paw();
            auto scan = scan_labeled(0, max_n, [&](const Graph & g) {
                return sentence(g) == contains_induced(g, paw_graph).has_value();
            });
            rec.result.details["scan"] = scan_json(scan);
            rec.result.details["max_n"] = max_n;
            rec.require(scan.failures == 0, "paw sentence disagrees with induced-paw search");
            return rec.finish();
        }

        auto run_paw_sentence(const CheckContext &) -> CheckResult
        {
            return check_paw_sentence(7);
        }

        auto run_paw_sentence_n8(const CheckContext &) -> CheckResult
        {
            return check_paw_sentence(8);
        }

        auto run_paw_metrics(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto phi = paw_sentence();
            rec.result.details["depth"] = quantifier_depth(phi);
            rec.result.details["width"] = variable_width(phi);
            rec.require(quantifier_depth(phi) == 3, "paw sentence depth is not 3");
            rec.require(variable_width(phi) == 3, "paw sentence width is not 3");
            rec.require(eval(paw(), phi), "paw sentence false on the paw");
            rec.require(eval(disjoint_union(paw(), complete(1)), phi), "paw sentence false on paw + K_1");
            rec.require(! eval(complete(4), phi), "paw sentence true on K_4");
            rec.require(! eval(cycle(5), phi), "paw sentence true on C_5");
            auto cert = certify_extension_lower(paw(), 3, cycle(4));
            rec.require(cert.valid(), "C_4 does not certify A[paw] >= 3: " + cert.failure());
            rec.result.details["chi_paw"] = chi_lower(paw());
            rec.require(chi_lower(paw()) == 3, "chi(paw) is not 3");
            return rec.finish();
        }

        auto run_olariu(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto paw_graph = paw();
            auto scan = scan_labeled(0, 7, [&](const Graph & g) {
                return is_paw_free(g) == ! contains_induced(g, paw_graph).has_value();
            });
            rec.result.details["scan"] = scan_json(scan);
            rec.require(scan.failures == 0, "Olariu test disagrees with induced-paw search");
            return rec.finish();
        }

        auto run_cograph_p4(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto p4 = path(4);
            auto scan = scan_labeled(0, 7, [&](const Graph & g) {
                bool cograph = is_cograph(g);
                if (cograph == contains_induced(g, p4).has_value())
                    return false;
                return ! cograph || g.size() < 2 || ! twins(g).empty();
            });
            rec.result.details["scan"] = scan_json(scan);
            rec.require(scan.failures == 0, "cograph test, P_4 search and twin property disagree");
            return rec.finish();
        }

        auto run_cograph_powers(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto p4 = path(4);
            for (int i = 1; i <= 7; ++i) {
                auto h = build_H(i);
                rec.require(! has_induced_p4(h) && ! contains_induced(h, p4), "H_" + std::to_string(i) + " contains P_4");
            }
            for (int t = 0; t <= 6; ++t) {
                auto h = build_H(t + 1);
                auto dec = decomposition(h);
                rec.require(dec.partition(0).size() == 1, "Pi_0 of H_" + std::to_string(t + 1) + " is not trivial");
                rec.require(static_cast<int>(dec.partition(t).size()) == h.size(), "Pi_t of H_" + std::to_string(t + 1) + " is not the singleton partition");
                for (int i = 0; i + 1 <= dec.stabilization_depth(); ++i)
                    for (int v = 0; v < h.size(); ++v)
                        for (int u = 0; u < h.size(); ++u)
                            if (dec.env(i + 1, u) == dec.env(i + 1, v) && dec.env(i, u) != dec.env(i, v))
                                rec.require(false, "Pi_" + std::to_string(i + 1) + " does not refine Pi_" + std::to_string(i));
            }
            auto a = paley(13);
            json coconn = json::array();
            for (int i = 1; i <= 3; ++i) {
                auto g = lex_product(a, build_H(i));
                bool ok = is_connected(g) && is_connected(complement(g));
                coconn.push_back(ok);
                rec.require(ok, "paley(13) . H_" + std::to_string(i) + " is not complement-connected");
            }
            rec.result.details["complement_connected"] = coconn;
            return rec.finish();
        }

        auto run_width_k4_k3(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto k4 = complete(4), k3 = complete(3);
            auto d3 = dk(k4, k3, 3), d4 = dk(k4, k3, 4);
            auto w = width(k4, k3, 5);
            auto depth = distinguishing_depth(k3, k4, 6);
            rec.result.details = {{"dk3", outcome_json(d3)}, {"dk4", outcome_json(d4)}, {"width", w.value_or(-1)}, {"depth", outcome_json(depth)}};
            rec.require(d3.is_infinity(), "D^3(K_4, K_3) is not infinite");
            rec.require(d4 == GameOutcome::rounds(4), "D^4(K_4, K_3) is not 4");
            rec.require(w == 4, "W(K_4, K_3) is not 4");
            rec.require(depth == GameOutcome::rounds(4), "D(K_3, K_4) is not 4");
            return rec.finish();
        }

        auto run_c4_witness(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto q3 = hypercube(3), c6 = cycle(6), c4 = cycle(4);
            bool dr = is_distance_regular(q3) && is_distance_regular(c6);
            rec.require(dr, "Q_3 or C_6 is not distance-regular");
            if (dr)
                rec.require(similar(q3, c6), "Q_3 and C_6 are not similar");
            auto d3 = dk(q3, c6, 3), d4 = dk(q3, c6, 4);
            rec.result.details = {{"dk3", outcome_json(d3)}, {"dk4", outcome_json(d4)}};
            rec.require(d3.is_infinity(), "D^3(Q_3, C_6) is not infinite");
            rec.require(d4.finite(), "D^4(Q_3, C_6) is not finite");
            rec.require(contains_induced(q3, c4).has_value(), "Q_3 has no induced C_4");
            rec.require(! contains_induced(c6, c4).has_value(), "C_6 has an induced C_4");
            return rec.finish();
        }

        auto run_k13_rook(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto r = rook(3);
            auto srg = is_strongly_regular(r);
            rec.require(check_ea(r, 3).holds, "rook(3) fails ea_3");
            rec.require(! has_induced_claw(r), "rook(3) has an induced claw");
            rec.require(! has_induced_diamond(r), "rook(3) has an induced diamond");
            rec.require(srg && *srg == SrgParams{9, 4, 1, 2}, "rook(3) is not SRG(9,4,1,2)");
            int kappa = vertex_connectivity(r);
            rec.result.details["kappa"] = kappa;
            rec.require(kappa == 4, "kappa(rook(3)) is not 4");
            return rec.finish();
        }

        auto run_srg_rook(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            json params = json::array();
            for (int m = 3; m <= 5; ++m) {
                auto r = rook(m);
                auto srg = is_strongly_regular(r);
                bool ok = srg && *srg == SrgParams{m * m, 2 * m - 2, m - 2, 2};
                rec.require(ok, "rook(" + std::to_string(m) + ") has unexpected SRG parameters");
                if (srg) {
                    params.push_back({srg->n, srg->k, srg->lambda.value_or(-1), srg->mu.value_or(-1)});
                    rec.require(srg->nontrivial() && srg->feasible(), "rook(" + std::to_string(m) + ") parameters are trivial or infeasible");
                }
                rec.require(vertex_connectivity(r) == 2 * m - 2, "kappa(rook(" + std::to_string(m) + ")) differs from its degree");
            }
            rec.result.details["params"] = params;
            return rec.finish();
        }

        auto run_certificates(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            struct Case
            {
                const char * name;
                Graph f;
                int k;
                Graph h;
            };
            vector<Case> cases{
                {"P_3, 3, 2K_2", path(3), 3, two_k2()},
                {"K_3, 3, 2K_2", complete(3), 3, two_k2()},
                {"K_3, 3, C_4", complete(3), 3, cycle(4)},
                {"paw, 3, C_4", paw(), 3, cycle(4)},
                {"K_1,3, 4, rook(3)", claw(), 4, rook(3)},
                {"K_4 - e, 4, rook(3)", diamond(), 4, rook(3)},
            };
            for (auto & c : cases) {
                auto cert = certify_extension_lower(c.f, c.k, c.h);
                rec.result.details[c.name] = cert.valid();
                rec.require(cert.valid(), string(c.name) + ": " + cert.failure());
            }
            return rec.finish();
        }

        auto run_shield(const CheckContext & ctx) -> CheckResult
        {
            Recorder rec;
            rec.result.seed = ctx.seed;
            Rng rng(stream_seed(ctx.seed, 8));
            auto next_ea2 = [&]() {
                for (;;) {
                    auto g = random_graph(rng, 5, 9);
                    if (check_ea(g, 2).holds)
                        return g;
                }
            };
            json pairs = json::array();
            int infinite = 0;
            for (int i = 0; i < 20; ++i) {
                auto g = next_ea2();
                Graph h = i < 10 ? two_k2() : next_ea2();
                while (isomorphic(g, h))
                    h = next_ea2();
                auto outcome = dk(g, h, 2);
                infinite += outcome.is_infinity() ? 1 : 0;
                pairs.push_back({g.size(), h.size(), outcome_json(outcome)});
            }
            rec.result.details = {{"pairs", pairs}, {"infinite", infinite}};
            rec.require(infinite == 20, "Spoiler wins a 2-pebble game between ea_2 graphs");
            return rec.finish();
        }

        auto run_witness_search(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            rec.result.seed = witness_seed;
            auto k3 = search_witness(complete(3), 3, {});
            bool k3_ok = k3.certificate && (isomorphic(k3.certificate->h, two_k2()) || isomorphic(k3.certificate->h, cycle(4)));
            rec.require(k3_ok, "exhaustive search for K_3 did not find 2K_2 or C_4");
            auto k2 = search_witness(complete(2), 2, {});
            rec.require(k2.certificate && k2.certificate->h == empty_graph(2), "exhaustive search for K_2 did not find 2K_1");
            WitnessSearch turan_search;
            turan_search.strategy = WitnessStrategy::TuranRandomSampling;
            turan_search.parts = 3;
            turan_search.budget = 60;
            turan_search.seed = witness_seed;
            auto k4 = search_witness(complete(4), 4, turan_search);
            rec.require(k4.certificate && k4.certificate->h.size() <= 200, "Turan sampling found no witness for K_4");
            rec.result.details = {{"K_3", k3.description}, {"K_2", k2.description}, {"K_4", k4.description}, {"K_4_examined", k4.examined}};
            return rec.finish();
        }

        auto run_gnp_rate(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            rec.result.seed = rate_seed;
            double rate = empirical_ea_rate(64, 3, 100, rate_seed);
            double tiny = empirical_ea_rate(4, 3, 100, rate_seed);
            double one = empirical_ea_rate(10, 1, 20, rate_seed);
            rec.result.details = {{"rate_64_3", rate}, {"rate_4_3", tiny}, {"rate_10_1", one}};
            rec.require(rate >= 0.95, "ea_3 rate of G(64, 1/2) below 0.95");
            rec.require(tiny == 0.0, "a 4-vertex graph passed ea_3");
            rec.require(one == 1.0, "a nonempty graph failed ea_1");
            return rec.finish();
        }

        auto run_chi_turan(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            rec.result.seed = turan_seed;
            long long threshold = turan_tail_threshold(3);
            rec.require(threshold == turan_threshold_k3, "least n with the k = 3 tail bound below 1 changed");
            rec.require(turan_tail_bound(3, threshold) < 1 && turan_tail_bound(3, threshold - 1) >= 1, "tail bound threshold is not sharp");
            int passes = 0;
            bool k4_free = true;
            auto k4 = complete(4);
            for (int i = 0; i < turan_samples; ++i) {
                auto t = turan_random(3, static_cast<int>(threshold), stream_seed(turan_seed, i));
                k4_free = k4_free && ! contains_induced(t, k4);
                passes += check_ea(t, 3).holds ? 1 : 0;
            }
            bool paw_free = true;
            auto p = paw();
            for (int i = 0; i < 20; ++i)
                paw_free = paw_free && ! contains_induced(turan_random(2, 20, stream_seed(turan_seed + 1, i)), p);
            json chi = json::array();
            for (int l = 1; l <= 6; ++l) {
                chi.push_back(chi_lower(complete(l)));
                rec.require(chi_lower(complete(l)) == l, "chi(K_" + std::to_string(l) + ") is wrong");
            }
            // Empirical only: least part size at which some of 20 samples satisfies ea_3.
            long long empirical = -1;
            for (int n = 1; n <= threshold && empirical < 0; ++n)
                for (int i = 0; i < 20 && empirical < 0; ++i)
                    if (check_ea(turan_random(3, n, stream_seed(turan_seed + 2, static_cast<std::uint64_t>(n) << 32 | i)), 3).holds)
                        empirical = n;
            rec.result.details = {{"threshold", threshold}, {"passes", passes}, {"samples", turan_samples}, {"chi_complete", chi},
                {"empirical_ea3_part_size", empirical}};
            rec.require(k4_free, "a 3-partite sample contains K_4");
            rec.require(paw_free, "a bipartite sample contains the paw");
            rec.require(passes >= turan_min_passes, "fewer than 90% of Turan samples satisfy ea_3");
            return rec.finish();
        }

        auto run_chi_connectivity(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            rec.result.seed = connectivity_seed;
            int connected = 0;
            for (int i = 0; i < 10; ++i)
                connected += is_s_connected(turan_random(3, 60, stream_seed(connectivity_seed, i)), 5) ? 1 : 0;
            rec.result.details = {{"samples", 10}, {"five_connected", connected}};
            rec.require(connected == 10, "a Turan sample at n = 60 is not 5-connected");
            return rec.finish();
        }

        auto run_alice_bounds(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            json rows = json::array();
            for (int ell = 16; ell <= 64; ++ell) {
                auto r = alice_lower_bound(ell);
                rows.push_back({{"l", ell}, {"log2_n", r.log2_n}, {"k", r.k}, {"log2_p", rational_log2(r.p)},
                    {"log2_q_upper", r.q_interval.upper.log2()}, {"p_holds", r.p_holds}, {"q_holds", r.q_holds}});
                rec.require(r.p_holds, "p(l, n) < 1/(2n) fails at l = " + std::to_string(ell));
                rec.require(r.q_holds, "q(n, k) < 2n^-11 fails at l = " + std::to_string(ell));
            }
            auto r16 = alice_lower_bound(16), r17 = alice_lower_bound(17);
            rec.require(r16.n == 128 && r16.k == 2, "l = 16 should give n = 128, k = 2");
            rec.require(r17.n == 128, "l = 17 should give n = 128");
            rec.result.details["rows"] = rows;
            return rec.finish();
        }

        auto run_metric_claims(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            long long violations = 0;
            for (int t = 3; t <= 5; ++t) {
                auto h = build_H(t + 1);
                auto table = metric_table(h, t);
                int n = h.size();
                vector<bool> twin(static_cast<std::size_t>(n) * n, false);
                for (auto & p : twins(h))
                    twin[static_cast<std::size_t>(p.u) * n + p.v] = twin[static_cast<std::size_t>(p.v) * n + p.u] = true;
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) {
                        violations += (table.d(x, y) == 0) != (x == y);
                        violations += (table.d(x, y) == 1) != twin[static_cast<std::size_t>(x) * n + y];
                        for (int z = 0; z < n; ++z) {
                            violations += table.d(x, y) > std::max(table.d(x, z), table.d(z, y));
                            if (x != y && y != z && x != z)
                                violations += table.d(x, y) == table.d(y, z) && table.d(y, z) == table.d(x, z);
                            if (table.d(x, y) < table.d(x, z))
                                violations += table.d(y, z) != table.d(x, z);
                        }
                    }
                auto dec = decomposition(h);
                violations += static_cast<int>(dec.partition(t).size()) != n;
                if (t <= 4)
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y) {
                            std::pair<int, int> fixed{x, y};
                            auto map = find_isomorphism(h, h, std::span(&fixed, 1));
                            if (! map) {
                                ++violations;
                                continue;
                            }
                            for (int u = 0; u < n; ++u)
                                for (int v = 0; v < n; ++v)
                                    violations += table.d((*map)[u], (*map)[v]) != table.d(u, v);
                        }
            }
            rec.result.details["violations"] = violations;
            rec.require(violations == 0, "metric claims violated");
            return rec.finish();
        }

        auto run_identities(const CheckContext & ctx) -> CheckResult
        {
            Recorder rec;
            rec.result.seed = ctx.seed;
            Rng rng(stream_seed(ctx.seed, 12));
            int mismatches = 0;
            for (int s = 0; s < 50; ++s) {
                auto x = random_graph(rng, 1, 5);
                for (int j = 1; j <= 3; ++j) {
                    auto expected = lex_product(power(complete(1), j + 1), j % 2 == 1 ? complement(x) : x);
                    mismatches += double_complement(x, j) == expected ? 0 : 1;
                }
            }
            auto a = paley(13);
            bool g3 = build_G(3, a) == power(lex_product(a, build_H(3)), 3);
            rec.result.details = {{"mismatches", mismatches}, {"G_3_identity", g3}};
            rec.require(mismatches == 0, "f^j(X) differs from the lexicographic form");
            rec.require(g3, "build_G(3, A) differs from (A . H_3)^3");
            return rec.finish();
        }

        auto run_build_g(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto a = paley(13);
            bool ea3 = check_ea(a, 3).holds;
            bool ea4 = check_ea(a, 4).holds;
            rec.require(ea3, "paley(13) fails ea_3");
            rec.require(contains_induced(a, path(4)).has_value(), "paley(13) has no induced P_4");
            auto g = build_G(3, a);
            rec.require(g.size() == 208, "G_3 does not have 208 vertices");
            rec.require(has_induced_p4(g), "G_3 has no induced P_4");
            rec.require(isomorphic(build_H(3), cycle(4)), "H_3 is not C_4");
            bool refused = false;
            try {
                build_G(3, path(4));
            }
            catch (const InvalidArgument &) {
                refused = true;
            }
            rec.require(refused, "build_G accepted a graph failing ea_3");
            rec.result.details = {{"paley13_ea3", ea3}, {"paley13_ea4", ea4}, {"G_3_vertices", g.size()}};
            return rec.finish();
        }

        auto run_d3_g3_h3(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            auto h = build_H(3);
            auto g = build_G(3, paley(13));
            auto solved = dk_solve(g, h, 3);
            rec.result.details = {{"outcome", outcome_json(solved.outcome)}, {"positions_explored", solved.positions_explored},
                {"canonical_positions", solved.canonical_positions}};
            rec.require(solved.outcome.finite() && solved.outcome.value() >= 2, "D^3(G_3, H_3) is not a finite value of at least 2");
            rec.require(solved.outcome == GameOutcome::rounds(d3_g3_h3), "D^3(G_3, H_3) differs from the recorded value");
            return rec.finish();
        }

        auto run_cograph_games(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            json rounds = json::array();
            int previous = 0;
            for (int i = 1; i <= 6; ++i) {
                auto o = dk(path(4), build_H(i), 3);
                rounds.push_back(outcome_json(o));
                if (! rec.require(o.finite(), "D^3(P_4, H_" + std::to_string(i) + ") is not finite"))
                    continue;
                rec.require(o.value() >= previous, "round counts decrease at i = " + std::to_string(i));
                rec.require(o.value() == p4_h_rounds[i - 1], "D^3(P_4, H_" + std::to_string(i) + ") differs from the recorded value");
                previous = o.value();
            }
            rec.result.details["rounds"] = rounds;
            return rec.finish();
        }

        auto run_ea_formula(const CheckContext &) -> CheckResult
        {
            Recorder rec;
            json scans = json::object();
            for (int k = 1; k <= 3; ++k) {
                CompiledSentence sentence(ea_formula(k));
                auto scan = scan_labeled(0, 7, [&](const Graph & g) { return sentence(g) == check_ea(g, k, Execution::Serial).holds; });
                scans[std::to_string(k)] = scan_json(scan);
                rec.require(scan.failures == 0, "ea_formula(" + std::to_string(k) + ") disagrees with check_ea");
            }
            rec.result.details["scans"] = scans;
            return rec.finish();
        }

        auto run_complement(const CheckContext & ctx) -> CheckResult
        {
            Recorder rec;
            rec.result.seed = ctx.seed;
            Rng rng(stream_seed(ctx.seed, 99));
            int game_mismatches = 0;
            for (int i = 0; i < 30; ++i) {
                auto g = random_graph(rng, 1, 8), h = random_graph(rng, 1, 8);
                int k = 1 + static_cast<int>(rng.below(3));
                game_mismatches += dk(g, h, k) == dk(complement(g), complement(h), k) ? 0 : 1;
            }
            vector<Graph> patterns{path(3), complete(3), paw(), claw(), diamond(), cycle(4), path(4), two_k2()};
            vector<Graph> co_patterns;
            for (auto & f : patterns)
                co_patterns.push_back(complement(f));
            auto scan = scan_labeled(0, 6, [&](const Graph & g) {
                auto co = complement(g);
                for (std::size_t p = 0; p < patterns.size(); ++p)
                    if (contains_induced(g, patterns[p]).has_value() != contains_induced(co, co_patterns[p]).has_value())
                        return false;
                return true;
            });
            int formula_mismatches = 0;
            vector<Formula> sentences{paw_sentence(), ea_formula(2), ea_formula(3)};
            for (int i = 0; i < 40; ++i) {
                auto g = random_graph(rng, 0, 8);
                for (auto & phi : sentences)
                    formula_mismatches += eval(g, phi) == eval(complement(g), dual(phi)) ? 0 : 1;
            }
            rec.result.details = {{"game_mismatches", game_mismatches}, {"induced_scan", scan_json(scan)}, {"formula_mismatches", formula_mismatches}};
            rec.require(game_mismatches == 0, "D^k changes under complementation");
            rec.require(scan.failures == 0, "induced containment changes under complementation");
            rec.require(formula_mismatches == 0, "dual formula disagrees on the complement");
            return rec.finish();
        }

        auto kappa_join(std::uint64_t seed) -> CheckResult
        {
            Recorder rec;
            rec.result.id = "kappa.join";
            rec.result.seed = seed;
            struct Instance
            {
                string name;
                Graph a, a2, b;
            };
            vector<Instance> instances{
                {"K_3, K_2, K_2", complete(3), complete(2), complete(2)},
                {"P_3, K_2, K_2", path(3), complete(2), complete(2)},
                {"C_4, P_4, K_2", cycle(4), path(4), complete(2)},
            };
            Rng rng(stream_seed(seed, 14));
            while (instances.size() < 7) {
                auto a = random_graph(rng, 2, 4), a2 = random_graph(rng, 2, 4), b = random_graph(rng, 1, 2);
                if (! isomorphic(a, a2))
                    instances.push_back({"sample " + std::to_string(instances.size() - 2), a, a2, b});
            }
            json rows = json::array();
            for (auto & in : instances) {
                auto base = width(in.a, in.a2, 5);
                auto joined = width(join(in.a, in.b), join(in.a2, in.b), 5);
                rows.push_back({{"instance", in.name}, {"width", base.value_or(-1)}, {"join_width", joined.value_or(-1)}});
                if (base && joined)
                    rec.require(*joined >= *base, in.name + ": width drops after joining");
            }
            rec.result.details["instances"] = rows;
            return rec.finish();
        }

        auto kappa_blowup(std::uint64_t seed) -> CheckResult
        {
            Recorder rec;
            rec.result.id = "kappa.blowup";
            rec.result.seed = seed;
            Rng rng(stream_seed(seed, 15));
            json rows = json::array();
            int compared = 0;
            for (int s = 2; s <= 3; ++s)
                for (int sample = 0; sample < 4; ++sample) {
                    Graph g, h;
                    do {
                        g = random_graph(rng, 2, s == 2 ? 4 : 3);
                        h = random_graph(rng, 2, s == 2 ? 4 : 3);
                    } while (isomorphic(g, h));
                    auto base = width(g, h, 4);
                    for (bool clique : {true, false}) {
                        auto part = clique ? complete(s) : empty_graph(s);
                        auto blown = width(lex_product(g, part), lex_product(h, part), 4);
                        rows.push_back({{"s", s}, {"clique", clique}, {"width", base.value_or(-1)}, {"blowup_width", blown.value_or(-1)}});
                        if (base && blown) {
                            ++compared;
                            rec.require(*blown >= *base, "width drops after a blowup with s = " + std::to_string(s));
                        }
                    }
                }
            int identity_failures = 0, cograph_failures = 0;
            for (int i = 0; i < 30; ++i) {
                auto g = random_graph(rng, 1, 6);
                identity_failures += lex_product(g, complete(1)) == g ? 0 : 1;
                if (is_cograph(g))
                    for (int s = 2; s <= 3; ++s)
                        cograph_failures += has_induced_p4(lex_product(g, complete(s))) ? 1 : 0;
            }
            rec.require(identity_failures == 0, "G . K_1 differs from G");
            rec.require(cograph_failures == 0, "a blowup of a cograph contains P_4");
            rec.result.details = {{"comparisons", rows}, {"compared", compared}};
            return rec.finish();
        }

        auto run_kappa_join(const CheckContext & ctx) -> CheckResult
        {
            return kappa_join(ctx.seed);
        }

        auto run_kappa_blowup(const CheckContext & ctx) -> CheckResult
        {
            return kappa_blowup(ctx.seed);
        }

        auto make_registry() -> vector<Check>
        {
            vector<Check> checks{
                {"alice.bounds", "A[F] >= floor(l/2 - 2 log2 l + 3): the probability inequalities for G(n, 1/2)", BudgetClass::Instant, run_alice_bounds},
                {"c4.distance-regular", "W[C_4] = 4: Q_3 and C_6 are similar distance-regular graphs", BudgetClass::Instant, run_c4_witness},
                {"chi.connectivity", "random Turan subgraphs are highly connected", BudgetClass::Moderate, run_chi_connectivity},
                {"chi.turan", "A[F] >= chi(F) via random Turan subgraphs", BudgetClass::Moderate, run_chi_turan},
                {"cograph.p4", "P_4-free iff cograph; P_4-free graphs have twins", BudgetClass::Scan, run_cograph_p4},
                {"cograph.powers", "H_i is a cograph with singleton Pi_t; A . H_i is complement-connected", BudgetClass::Instant, run_cograph_powers},
                {"compl.invariance", "D^k and induced containment are invariant under complementation", BudgetClass::Moderate, run_complement},
                {"ea.formula", "ea_k is expressed by a depth-k sentence", BudgetClass::Scan, run_ea_formula},
                {"extension.certificates", "extension-index lower bounds certified by 2K_2, C_4 and rook(3)", BudgetClass::Instant, run_certificates},
                {"extension.gnp-rate", "G(n, 1/2) has the extension property with high probability", BudgetClass::Moderate, run_gnp_rate},
                {"extension.shield", "graphs satisfying ea_k are not distinguished with k pebbles", BudgetClass::Moderate, run_shield},
                {"extension.witness-search", "A[K_3] >= 3 via 2K_2 or C_4; A[K_4] >= 4 via a Turan subgraph", BudgetClass::Instant, run_witness_search},
                {"k13.rook", "W[K_1,3] and W[K_4 - e]: rook(3) properties", BudgetClass::Instant, run_k13_rook},
                {"kappa.blowup", "W(G . K_s, H . K_s) >= W(G, H) and the co-clique analogue", BudgetClass::Moderate, run_kappa_blowup},
                {"kappa.join", "W(A * B, A' * B) >= W(A, A')", BudgetClass::Moderate, run_kappa_join},
                {"metric.claims", "the metric d on H: twins, isosceles, ultrametric, transitivity", BudgetClass::Moderate, run_metric_claims},
                {"p4.build-g", "G_3 = H_3 . (A . H_3) with A = paley(13) contains P_4", BudgetClass::Instant, run_build_g},
                {"p4.cograph-games", "Spoiler wins D^3(P_4, H_i) in finitely many rounds", BudgetClass::Moderate, run_cograph_games},
                {"p4.d3-g3-h3", "D^3(G_3, H_3) >= 2 (computed value 3, recorded)", BudgetClass::Moderate, run_d3_g3_h3},
                {"p4.identities", "f^j(X) = H_(j+1) . X or its complement; G_i = (A . H_i)^i", BudgetClass::Instant, run_identities},
                {"paw.metrics", "the paw sentence has depth 3 and width 3", BudgetClass::Instant, run_paw_metrics},
                {"paw.olariu", "paw-free iff each component is triangle-free or complete multipartite", BudgetClass::Scan, run_olariu},
                {"paw.sentence", "the paw sentence defines induced paw containment", BudgetClass::Scan, run_paw_sentence},
                {"paw.sentence-n8", "the paw sentence on all labeled graphs with 8 vertices", BudgetClass::Deep, run_paw_sentence_n8},
                {"srg.rook", "rook(m) is SRG(m^2, 2m-2, m-2, 2) with connectivity equal to its degree", BudgetClass::Instant, run_srg_rook},
                {"width.k4-k3", "W(K_4, K_3) = 4", BudgetClass::Instant, run_width_k4_k3},
            };
            std::sort(checks.begin(), checks.end(), [](const Check & a, const Check & b) { return a.id < b.id; });
            return checks;
        }

        auto skip_reason(const Check & check, Profile profile) -> std::optional<string>
        {
            if (check.budget == BudgetClass::Deep && profile != Profile::Deep)
                return string("runs only under the deep profile");
            if (check.budget == BudgetClass::Scan && profile == Profile::Quick)
                return string("quick profile skips the exhaustive scans over 7-vertex graphs");
            return std::nullopt;
        }
    }

    auto check_registry() -> const vector<Check> &
    {
        static const vector<Check> registry = make_registry();
        return registry;
    }

    auto verify_paper(const VerifyOptions & options) -> vector<CheckResult>
    {
        vector<const Check *> selected;
        for (auto & check : check_registry())
            if (! options.filter || check.id.find(*options.filter) != string::npos)
                selected.push_back(&check);

        vector<CheckResult> results(selected.size());
        std::atomic<std::size_t> next{0};
        CheckContext ctx{options.profile, options.seed};

        auto worker = [&]() {
            for (;;) {
                auto i = next.fetch_add(1);
                if (i >= selected.size())
                    return;
                auto & check = *selected[i];
                CheckResult r;
                auto start = std::chrono::steady_clock::now();
                if (auto reason = skip_reason(check, options.profile)) {
                    r.status = CheckStatus::Skipped;
                    r.reason = *reason;
                }
                else {
                    try {
                        r = check.run(ctx);
                    }
                    catch (const std::exception & e) {
                        r = CheckResult{};
                        r.status = CheckStatus::Fail;
                        r.reason = string("exception: ") + e.what();
                    }
                }
                r.id = check.id;
                r.anchor = check.anchor;
                r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                results[i] = std::move(r);
            }
        };

        int workers = options.workers > 0 ? options.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        workers = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(1, selected.size())));
        vector<std::thread> pool;
        for (int w = 1; w < workers; ++w)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();

        std::sort(results.begin(), results.end(), [](const CheckResult & a, const CheckResult & b) { return a.id < b.id; });
        return results;
    }

    auto kappa_experiments(std::uint64_t seed) -> vector<CheckResult>
    {
        vector<CheckResult> results{kappa_blowup(seed), kappa_join(seed)};
        for (auto & r : results)
            for (auto & check : check_registry())
                if (check.id == r.id)
                    r.anchor = check.anchor;
        return results;
    }
}
