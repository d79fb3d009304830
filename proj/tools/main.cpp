// Command-line front end: construction, polynomials, property checks,
// family generation, and the property-verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trung/checks.hpp"
#include "trung/construction.hpp"
#include "trung/errors.hpp"
#include "trung/graph.hpp"
#include "trung/graph_io.hpp"
#include "trung/homology.hpp"
#include "trung/poly.hpp"
#include "trung/report.hpp"
#include "trung/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerifyFailed = 4;

struct CommonOptions {
    std::string input = "-";
    std::string format = "edgelist";
    std::string output = "text";
};

void add_common(CLI::App* cmd, CommonOptions& options, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", options.input, "input file, or - for stdin")->capture_default_str();
    cmd->add_option("--format", options.format, "graph format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
    cmd->add_option("--output", options.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw trung::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

trung::Graph load_graph(const CommonOptions& options) {
    std::string text = read_all(options.input);
    if (options.format == "graph6") {
        // first line that is neither blank nor a comment
        std::istringstream stream(text);
        std::string line;
        while (std::getline(stream, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            return trung::parse_graph6(line);
        }
        throw trung::ParseError("no graph6 record in input");
    }
    auto parsed = trung::parse_edge_list(text);
    if (parsed.duplicate_edges) std::cerr << "warning: duplicate edges collapsed\n";
    return parsed.graph;
}

std::string format_graph(const trung::Graph& g, const CommonOptions& options) {
    if (options.format == "graph6") return trung::write_graph6(g) + "\n";
    return trung::write_edge_list(g);
}

json graph_json(const trung::Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.order()}, {"edges", edges}};
}

json poly_json(const trung::IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

int run_tr(const CommonOptions& options, int vertex, bool labels) {
    trung::Graph h = load_graph(options);
    trung::TrungResult result = trung::tr(h, vertex);
    if (options.output == "json") {
        json j = graph_json(result.graph);
        j["a"] = result.a;
        j["b"] = result.b;
        j["c"] = result.c;
        j["v"] = result.v;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (labels)
        std::cout << "# a=" << result.a << " b=" << result.b << " c=" << result.c
                  << " v=" << result.v << "\n";
    std::cout << format_graph(result.graph, options);
    return kExitOk;
}

int run_poly(const CommonOptions& options, const std::optional<std::string>& eval_point,
             bool h_poly) {
    trung::Graph g = load_graph(options);
    trung::IntPoly p = trung::independence_polynomial(g);
    int alpha = p.degree();

    std::optional<trung::Rational> point;
    std::optional<trung::Rational> value;
    if (eval_point) {
        point = trung::parse_rational(*eval_point);
        value = p.eval(*point);
    }
    std::optional<trung::IntPoly> h;
    if (h_poly) h = trung::h_polynomial(p, alpha);

    if (options.output == "json") {
        json j;
        j["n"] = g.order();
        j["alpha"] = alpha;
        j["independence_polynomial"] = poly_json(p);
        if (value) {
            j["eval"] = {{"point", trung::rational_fraction(*point)},
                         {"value", trung::rational_fraction(*value)}};
        }
        if (h) j["h_polynomial"] = poly_json(*h);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << p.to_string() << "\n";
    if (value)
        std::cout << "I(G," << trung::rational_pretty(*point)
                  << ") = " << trung::rational_pretty(*value) << "\n";
    if (h) std::cout << "h(t) = " << h->to_string('t') << "\n";
    return kExitOk;
}

int run_check(const CommonOptions& options, const trung::CheckSelection& selection, bool force) {
    trung::Graph g = load_graph(options);
    trung::CheckReport report = trung::run_checks(g, selection, force);
    if (options.output == "json")
        std::cout << trung::report_to_json(report) << "\n";
    else
        std::cout << trung::report_to_text(report);
    return kExitOk;
}

int run_gen(const CommonOptions& options, int steps, const std::string& strategy,
            std::uint64_t seed) {
    auto choice = strategy == "random" ? trung::VertexChoice::Random : trung::VertexChoice::First;
    auto family = trung::generate_girth4_family(steps, choice, seed);

    if (options.output == "json") {
        json members = json::array();
        int step = 0;
        for (const auto& member : family) {
            json m = graph_json(member.graph);
            m["step"] = ++step;
            auto cycle = trung::girth(member.graph);
            m["girth"] = cycle ? json(*cycle) : json("infinite");
            m["alpha"] = trung::independence_number(member.graph);
            m["a"] = member.a;
            m["b"] = member.b;
            m["c"] = member.c;
            m["v"] = member.v;
            members.push_back(m);
        }
        json j{{"steps", steps}, {"strategy", strategy}, {"members", members}};
        if (strategy == "random") j["seed"] = seed;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    int step = 0;
    for (const auto& member : family) {
        auto cycle = trung::girth(member.graph);
        std::cout << "# step " << ++step << ": n=" << member.graph.order()
                  << " m=" << member.graph.edge_count()
                  << " girth=" << (cycle ? std::to_string(*cycle) : "infinite")
                  << " alpha=" << trung::independence_number(member.graph) << " a=" << member.a
                  << " b=" << member.b << " c=" << member.c << " v=" << member.v << "\n";
        std::cout << format_graph(member.graph, options);
    }
    return kExitOk;
}

int run_verify(const CommonOptions& options, const std::string& suite,
               const trung::SuiteOptions& suite_options) {
    std::vector<trung::SuiteResult> results;
    if (suite == "recurrence" || suite == "all")
        results.push_back(trung::run_recurrence_suite(suite_options));
    if (suite == "preservation" || suite == "all")
        results.push_back(trung::run_preservation_suite(suite_options));
    if (suite == "charney-davis" || suite == "all")
        results.push_back(trung::run_charney_davis_suite(suite_options));

    bool all_passed = true;
    for (const auto& r : results) all_passed = all_passed && r.passed;

    if (options.output == "json") {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name},
                           {"passed", r.passed},
                           {"cases", r.cases},
                           {"failures", r.failures}});
        std::cout << json{{"suites", arr}, {"passed", all_passed}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.cases
                      << " cases)\n";
            for (const auto& failure : r.failures) std::cout << failure << "\n";
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trung's construction, independence polynomials, and exact\n"
                 "well-covered / W2 / Eulerian / Gorenstein / Charney-Davis checks"};
    app.require_subcommand(1);

    CommonOptions tr_options;
    int tr_vertex = 0;
    bool tr_labels = false;
    auto* cmd_tr = app.add_subcommand("tr", "apply the construction at a vertex");
    add_common(cmd_tr, tr_options);
    cmd_tr->add_option("--vertex,-v", tr_vertex, "the chosen non-isolated vertex")->required();
    cmd_tr->add_flag("--labels", tr_labels, "print the indices of a, b, c");

    CommonOptions poly_options;
    std::string poly_eval;
    bool poly_h = false;
    auto* cmd_poly = app.add_subcommand("poly", "independence polynomial");
    add_common(cmd_poly, poly_options);
    auto* eval_option =
        cmd_poly->add_option("--eval", poly_eval, "evaluate at an exact rational, e.g. -1/2");
    cmd_poly->add_flag("--h-poly", poly_h, "also print the h-polynomial");

    CommonOptions check_options;
    trung::CheckSelection selection;
    bool check_all = false;
    bool check_force = false;
    auto* cmd_check = app.add_subcommand("check", "decide structural properties");
    add_common(cmd_check, check_options);
    cmd_check->add_flag("--all", check_all, "run every check (default)");
    cmd_check->add_flag("--well-covered", selection.well_covered, "well-coveredness");
    cmd_check->add_flag("--w2", selection.w2, "the W2 property");
    cmd_check->add_flag("--eulerian", selection.eulerian, "Eulerian independence complex");
    cmd_check->add_flag("--cm", selection.cm, "Cohen-Macaulay over Q");
    cmd_check->add_flag("--gorenstein", selection.gorenstein, "Gorenstein over Q");
    cmd_check->add_flag("--charney-davis", selection.charney_davis, "Charney-Davis status");
    cmd_check->add_flag("--force", check_force, "lift the 16-vertex guard on the W2 scan");

    CommonOptions gen_options;
    int gen_steps = 1;
    std::string gen_strategy = "first";
    std::uint64_t gen_seed = 0;
    auto* cmd_gen = app.add_subcommand("gen", "generate the girth-4 family from the 5-cycle");
    add_common(cmd_gen, gen_options, /*with_input=*/false);
    cmd_gen->add_option("--steps", gen_steps, "number of applications (1..19)")->required();
    cmd_gen->add_option("--strategy", gen_strategy, "degree-2 vertex choice")
        ->check(CLI::IsMember({"first", "random"}))
        ->capture_default_str();
    auto* gen_seed_option = cmd_gen->add_option("--seed", gen_seed, "seed for --strategy random");

    CommonOptions verify_options;
    std::string verify_suite = "all";
    trung::SuiteOptions suite_options;
    auto* cmd_verify = app.add_subcommand("verify", "run the property suites");
    add_common(cmd_verify, verify_options, /*with_input=*/false);
    cmd_verify->add_option("--suite", verify_suite, "which suite")
        ->check(CLI::IsMember({"recurrence", "preservation", "charney-davis", "all"}))
        ->capture_default_str();
    cmd_verify->add_option("--n-max", suite_options.n_max, "largest graph order")
        ->capture_default_str();
    cmd_verify
        ->add_option("--trials", suite_options.trials, "random cases beyond the exhaustive range")
        ->capture_default_str();
    cmd_verify->add_option("--seed", suite_options.seed, "corpus seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (cmd_tr->parsed()) return run_tr(tr_options, tr_vertex, tr_labels);
        if (cmd_poly->parsed()) {
            std::optional<std::string> eval_text;
            if (eval_option->count() > 0) eval_text = poly_eval;
            return run_poly(poly_options, eval_text, poly_h);
        }
        if (cmd_check->parsed()) {
            trung::CheckSelection effective =
                (check_all || !selection.any()) ? trung::CheckSelection::all() : selection;
            return run_check(check_options, effective, check_force);
        }
        if (cmd_gen->parsed()) {
            if (gen_strategy == "random" && gen_seed_option->count() == 0)
                throw trung::ParseError("--strategy random requires --seed");
            return run_gen(gen_options, gen_steps, gen_strategy, gen_seed);
        }
        if (cmd_verify->parsed()) return run_verify(verify_options, verify_suite, suite_options);
    } catch (const trung::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const trung::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
