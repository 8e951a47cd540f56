#include <fodef/bounds.hh>
#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/extension.hh>
#include <fodef/formula.hh>
#include <fodef/graph6.hh>
#include <fodef/lab.hh>
#include <fodef/names.hh>
#include <fodef/patterns.hh>
#include <fodef/pebble.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fodef;
using nlohmann::json;
using std::string;

namespace
{
    struct Globals
    {
        std::uint64_t seed = 1;
        string profile = "default";
        string json_path;
    };

    auto graph_json(const Graph & g) -> json
    {
        return {{"n", g.size()}, {"edges", g.edge_count()}, {"graph6", graph6_encode(g)}};
    }

    auto emit(const Globals & globals, const json & j) -> void
    {
        if (! globals.json_path.empty()) {
            std::ofstream out(globals.json_path);
            if (! out)
                throw InvalidArgument("cannot write " + globals.json_path);
            out << j.dump(2) << '\n';
        }
        std::cout << j.dump(2) << '\n';
    }

    auto read_text(const string & text) -> string
    {
        std::error_code ec;
        if (std::filesystem::is_regular_file(text, ec)) {
            std::ifstream in(text);
            std::stringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }
        return text;
    }

    auto pattern_detector(const string & pattern) -> std::function<json(const Graph &)>
    {
        auto flag = [](bool (*detector)(const Graph &)) {
            return [detector](const Graph & g) -> json { return {{"contains", detector(g)}}; };
        };
        if (pattern == "p4")
            return flag([](const Graph & g) { return has_induced_p4(g); });
        if (pattern == "paw")
            return flag([](const Graph & g) { return has_induced_paw(g); });
        if (pattern == "claw")
            return flag([](const Graph & g) { return has_induced_claw(g); });
        if (pattern == "diamond")
            return flag([](const Graph & g) { return has_induced_diamond(g); });
        if (pattern == "triangle")
            return [](const Graph & g) -> json {
                auto t = find_triangle(g);
                json j{{"contains", t.has_value()}};
                if (t)
                    j["witness"] = *t;
                return j;
            };
        auto f = resolve_graph(pattern);
        return [f](const Graph & g) -> json {
            auto image = contains_induced(g, f);
            json j{{"contains", image.has_value()}};
            if (image)
                j["witness"] = *image;
            return j;
        };
    }

    auto parse_strategy(const string & name) -> WitnessStrategy
    {
        if (name == "exhaustive-small")
            return WitnessStrategy::ExhaustiveSmall;
        if (name == "gnp-sampling")
            return WitnessStrategy::GnpSampling;
        if (name == "turan-random-sampling")
            return WitnessStrategy::TuranRandomSampling;
        throw InvalidArgument("unknown strategy '" + name + "'");
    }

    auto report_table(const json & report) -> void
    {
        for (auto & r : report["checks"]) {
            std::printf("%-8s %-26s %8.2fs", r["status"].get<string>().c_str(), r["id"].get<string>().c_str(), r["seconds"].get<double>());
            if (r.contains("reason"))
                std::printf("  %s", r["reason"].get<string>().c_str());
            std::printf("\n");
        }
        auto & s = report["summary"];
        std::printf("%d passed, %d failed, %d skipped\n", s["pass"].get<int>(), s["fail"].get<int>(), s["skipped"].get<int>());
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"First-order definability tools for finite graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_option("--seed", globals.seed, "Seed for randomized checks");
    app.add_option("--profile", globals.profile, "Budget profile")->check(CLI::IsMember({"quick", "default", "deep"}));
    app.add_option("--json", globals.json_path, "Also write the JSON output to this path");

    int exit_code = 0;

    auto construct = app.add_subcommand("construct", "Build a graph and print it as graph6");
    string construct_name;
    bool list_names = false;
    construct->add_option("name", construct_name, "Constructor name, graph6 literal or file");
    construct->add_flag("--list", list_names, "List constructor names");
    construct->callback([&]() {
        if (list_names) {
            for (auto & name : constructor_names())
                std::cout << name << '\n';
            return;
        }
        if (construct_name.empty())
            throw CLI::ValidationError("construct", "a graph name is required");
        auto g = resolve_graph(construct_name);
        std::cout << graph6_encode(g) << '\n';
        if (! globals.json_path.empty()) {
            std::ofstream out(globals.json_path);
            out << graph_json(g).dump(2) << '\n';
        }
    });

    auto detect = app.add_subcommand("detect", "Induced pattern detection over graph6 input");
    string detect_pattern, detect_in = "-";
    detect->add_option("--pattern", detect_pattern, "p4, paw, claw, diamond, triangle, or a graph")->required();
    detect->add_option("--in", detect_in, "graph6 file, one graph per line, or - for stdin");
    detect->callback([&]() {
        auto detector = pattern_detector(detect_pattern);
        std::vector<Graph> graphs;
        if (detect_in == "-")
            graphs = graph6_read_all(std::cin);
        else {
            std::ifstream in(detect_in);
            if (! in)
                throw InvalidArgument("cannot read " + detect_in);
            graphs = graph6_read_all(in);
        }
        json out = json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            auto verdict = detector(graphs[i]);
            verdict["index"] = i;
            verdict["graph6"] = graph6_encode(graphs[i]);
            out.push_back(verdict);
        }
        emit(globals, out);
    });

    auto decompose = app.add_subcommand("decompose", "The partition chain Pi_0, Pi_1, ... of a graph");
    string decompose_in;
    decompose->add_option("--in", decompose_in, "Graph name, graph6 literal or file")->required();
    decompose->callback([&]() {
        auto g = resolve_graph(decompose_in);
        auto dec = decomposition(g);
        emit(globals, {{"graph", graph_json(g)}, {"levels", dec.levels()}, {"stabilization_depth", dec.stabilization_depth()},
                          {"cocomponents", cocomponents(g)}, {"cograph", is_cograph(g)}});
    });

    auto pebble = app.add_subcommand("pebble", "Solve the k-pebble game on (G, H)");
    pebble->set_help_flag("--help", "Print this help message and exit");
    string pebble_g, pebble_h;
    int pebble_k = 0;
    std::optional<int> pebble_rounds;
    long long pebble_budget = DkOptions{}.budget;
    bool pebble_serial = false;
    pebble->add_option("--g", pebble_g, "First graph")->required();
    pebble->add_option("--h", pebble_h, "Second graph")->required();
    pebble->add_option("--k", pebble_k, "Number of pebble pairs")->required();
    pebble->add_option("--rounds", pebble_rounds, "Round cap");
    pebble->add_option("--budget", pebble_budget, "Maximum number of canonical positions");
    pebble->add_flag("--serial", pebble_serial, "Use the serial reference kernel");
    pebble->callback([&]() {
        DkOptions options;
        options.round_cap = pebble_rounds;
        options.budget = pebble_budget;
        options.execution = pebble_serial ? Execution::Serial : Execution::Parallel;
        auto start = std::chrono::steady_clock::now();
        auto result = dk_solve(resolve_graph(pebble_g), resolve_graph(pebble_h), pebble_k, options);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json rounds = result.outcome.finite() ? json(result.outcome.value()) : json(nullptr);
        emit(globals, {{"k", pebble_k}, {"outcome", to_string(result.outcome)}, {"rounds", rounds},
                          {"positions_explored", result.positions_explored}, {"wall_time", seconds}});
    });

    auto ea = app.add_subcommand("ea", "Check the k-extension axiom");
    string ea_graph;
    int ea_k = 0;
    ea->add_option("--graph", ea_graph, "Graph")->required();
    ea->add_option("--k", ea_k, "Extension level")->required();
    ea->callback([&]() {
        auto report = check_ea(resolve_graph(ea_graph), ea_k);
        json j{{"k", report.k}, {"holds", report.holds}};
        if (report.counterexample)
            j["counterexample"] = {{"X", report.counterexample->first}, {"Y", report.counterexample->second}};
        emit(globals, j);
    });

    auto witness = app.add_subcommand("witness", "Search for an F-free graph satisfying ea_(k-1)");
    string witness_pattern, witness_strategy = "exhaustive-small";
    int witness_k = 0;
    std::optional<std::uint64_t> witness_seed;
    WitnessSearch search;
    witness->add_option("--pattern", witness_pattern, "The pattern F")->required();
    witness->add_option("--k", witness_k, "Target lower bound A[F] >= k")->required();
    witness->add_option("--strategy", witness_strategy, "exhaustive-small, gnp-sampling or turan-random-sampling");
    witness->add_option("--seed", witness_seed, "Sampling seed (defaults to the global seed)");
    witness->add_option("--budget", search.budget, "Candidates to examine");
    witness->add_option("--parts", search.parts, "Parts for Turan sampling");
    witness->add_option("--sizes", search.sizes, "Vertex counts or part sizes to sample");
    witness->add_option("--p", search.p, "Edge probability for gnp sampling");
    witness->callback([&]() {
        search.strategy = parse_strategy(witness_strategy);
        search.seed = witness_seed.value_or(globals.seed);
        auto result = search_witness(resolve_graph(witness_pattern), witness_k, search);
        json j{{"found", result.certificate.has_value()}, {"examined", result.examined}, {"duplicates", result.duplicates}, {"seed", search.seed}};
        if (result.certificate) {
            j["description"] = result.description;
            j["witness"] = graph_json(result.certificate->h);
        }
        emit(globals, j);
    });

    auto bounds = app.add_subcommand("bounds", "Exact probability bounds for pattern size l");
    int bounds_ell = 0;
    bounds->add_option("--ell", bounds_ell, "Pattern size l")->required();
    bounds->callback([&]() {
        auto r = alice_lower_bound(bounds_ell);
        json j{{"ell", r.ell}, {"n", r.n.str()}, {"log2_n", r.log2_n}, {"k", r.k}, {"lower_bound", r.lower_bound},
            {"p", to_string(r.p)}, {"p_threshold", to_string(r.p_threshold)}, {"p_holds", r.p_holds},
            {"q_log2_upper", r.q_interval.upper.log2()}, {"q_threshold_log2", r.q_threshold.log2()}, {"q_holds", r.q_holds},
            {"q_exact", r.q.has_value()}, {"applicable", r.applicable}};
        emit(globals, j);
    });

    auto formula = app.add_subcommand("formula", "Parse a sentence and optionally evaluate it");
    string formula_text, formula_graph;
    formula->add_option("text", formula_text, "Sentence text or a file containing it")->required();
    formula->add_option("--graph", formula_graph, "Graph to evaluate on");
    formula->callback([&]() {
        auto phi = parse(read_text(formula_text));
        json j{{"formula", to_string(phi)}, {"depth", quantifier_depth(phi)}, {"width", variable_width(phi)}};
        if (! formula_graph.empty())
            j["value"] = eval(resolve_graph(formula_graph), phi);
        emit(globals, j);
    });

    auto verify = app.add_subcommand("verify-paper", "Run the reproduction checks");
    std::optional<string> verify_filter;
    int verify_workers = 0;
    bool verify_list = false;
    verify->add_option("--filter", verify_filter, "Substring of check ids to run");
    verify->add_option("--workers", verify_workers, "Concurrent checks (0 = hardware concurrency)");
    verify->add_flag("--list", verify_list, "List the registered checks");
    verify->callback([&]() {
        if (verify_list) {
            for (auto & check : check_registry())
                std::printf("%-26s %-9s %s\n", check.id.c_str(), to_string(check.budget).c_str(), check.anchor.c_str());
            return;
        }
        VerifyOptions options{verify_filter, parse_profile(globals.profile), globals.seed, verify_workers};
        auto results = verify_paper(options);
        json checks = json::array();
        int pass = 0, fail = 0, skipped = 0;
        for (auto & r : results) {
            checks.push_back(to_json(r));
            pass += r.status == CheckStatus::Pass;
            fail += r.status == CheckStatus::Fail;
            skipped += r.status == CheckStatus::Skipped;
        }
        json report{{"profile", globals.profile}, {"seed", globals.seed}, {"checks", checks},
            {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
        if (! globals.json_path.empty()) {
            std::ofstream out(globals.json_path);
            out << report.dump(2) << '\n';
        }
        report_table(report);
        if (fail > 0)
            exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
