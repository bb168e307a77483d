// Command-line frontend: exact checkers, lemma/conjecture verification
// suites, enumeration, and minimal-obstruction search over small graphs.
//
// Exit codes: 0 success, 2 input parse error, 3 size cap exceeded,
// 4 invalid arguments.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pgc/classes.hpp"
#include "pgc/enumeration.hpp"
#include "pgc/graph6.hpp"
#include "pgc/json_io.hpp"
#include "pgc/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedSuite = 1;
constexpr int kExitParse = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitBadArgument = 4;

pgc::GraphFilter parse_filter_or_throw(const std::string& name) {
    for (pgc::GraphFilter f :
         {pgc::GraphFilter::All, pgc::GraphFilter::TriangleFree, pgc::GraphFilter::Connected,
          pgc::GraphFilter::TriangleFreeConnected}) {
        if (name == pgc::filter_name(f)) return f;
    }
    throw std::invalid_argument("unknown filter: " + name);
}

std::string render_vertices(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vs[i]);
    }
    return out;
}

std::string render_certificate(const pgc::Certificate& cert) {
    using namespace pgc;
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "search exhausted";
            } else if constexpr (std::is_same_v<T, Coloring>) {
                std::string out = "coloring:";
                for (int col : c.color) out += ' ' + std::to_string(col);
                return out;
            } else if constexpr (std::is_same_v<T, Bipartition>) {
                return "bipartition: {" + render_vertices(set_to_vector(c.left)) + "} / {" +
                       render_vertices(set_to_vector(c.right)) + "}";
            } else if constexpr (std::is_same_v<T, Partition2>) {
                return "partition: {" + render_vertices(set_to_vector(c.a)) + "} / {" +
                       render_vertices(set_to_vector(c.b)) + "}";
            } else if constexpr (std::is_same_v<T, StableSet>) {
                return "stable set: {" + render_vertices(set_to_vector(c.vertices)) + "}";
            } else if constexpr (std::is_same_v<T, OddCycle>) {
                return std::string(c.in_complement ? "odd antihole: " : "odd hole: ") +
                       render_vertices(c.vertices);
            } else if constexpr (std::is_same_v<T, CliqueWitness>) {
                return "clique: {" + render_vertices(set_to_vector(c.vertices)) + "}";
            } else {
                std::string out =
                    "violating subset: {" + render_vertices(set_to_vector(c.vertices)) + "}";
                if (c.chi >= 0) out += " chi=" + std::to_string(c.chi);
                if (c.omega >= 0) out += " omega=" + std::to_string(c.omega);
                return out;
            }
        },
        cert);
}

struct CheckRequest {
    std::string file;
    std::string inline_graph6;
    std::string format = "graph6";
    std::string classes = "all";
    bool json_output = false;
};

std::vector<pgc::Graph> load_graphs(const CheckRequest& req) {
    if (!req.inline_graph6.empty() && !req.file.empty())
        throw std::invalid_argument("check: give a file or --graph6, not both");
    if (!req.inline_graph6.empty()) return {pgc::parse_graph6(req.inline_graph6)};
    if (req.file.empty()) throw std::invalid_argument("check: no input given");
    if (req.format == "graph6") return pgc::read_graph6_file(req.file);
    if (req.format == "edgelist") return {pgc::read_edge_list_file(req.file)};
    throw std::invalid_argument("unknown format: " + req.format);
}

// Verdicts requested for one graph: either the full classification or a
// subset of individual checks.
struct CheckOutcome {
    pgc::Graph g;
    std::optional<pgc::Classification> all;
    std::optional<pgc::PropertyReport> perfect;
    std::vector<pgc::ClassVerdict> classes;
};

int run_check(const CheckRequest& req) {
    std::vector<std::string> wanted;
    std::stringstream ss(req.classes);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) wanted.push_back(token);
    }
    if (wanted.empty()) throw std::invalid_argument("check: empty class list");
    const std::vector<std::string> known = {"all",  "perfect",        "2-perfect",
                                            "nice", "stable-perfect", "perfectly-divisible",
                                            "2-divisible"};
    for (const auto& w : wanted) {
        if (std::find(known.begin(), known.end(), w) == known.end())
            throw std::invalid_argument("unknown class: " + w);
    }
    auto requested = [&](const std::string& name) {
        return std::find(wanted.begin(), wanted.end(), name) != wanted.end();
    };

    std::vector<CheckOutcome> outcomes;
    for (const pgc::Graph& g : load_graphs(req)) {
        CheckOutcome outcome{g, std::nullopt, std::nullopt, {}};
        if (requested("all")) {
            outcome.all = pgc::classify_all(g);
        } else {
            if (requested("perfect")) outcome.perfect = pgc::is_perfect(g);
            if (requested("2-perfect")) outcome.classes.push_back(pgc::is_2perfect(g));
            if (requested("perfectly-divisible") || requested("nice") ||
                requested("2-divisible")) {
                pgc::SubsetCache cache(g);
                if (requested("perfectly-divisible"))
                    outcome.classes.push_back(pgc::is_perfectly_divisible(g, cache));
                if (requested("nice")) outcome.classes.push_back(pgc::is_nice(g, cache));
                if (requested("2-divisible"))
                    outcome.classes.push_back(pgc::is_2divisible(g, cache));
            }
            if (requested("stable-perfect"))
                outcome.classes.push_back(pgc::is_stable_perfect(g));
        }
        outcomes.push_back(std::move(outcome));
    }

    if (req.json_output) {
        pgc::json out = pgc::json::array();
        for (const auto& outcome : outcomes) {
            if (outcome.all) {
                out.push_back(pgc::to_json(outcome.g, *outcome.all));
                continue;
            }
            pgc::json entry{
                {"graph", {{"n", outcome.g.n()}, {"graph6", pgc::write_graph6(outcome.g)}}}};
            if (outcome.perfect) entry["perfect"] = pgc::to_json(*outcome.perfect);
            if (!outcome.classes.empty()) {
                pgc::json classes = pgc::json::array();
                for (const auto& v : outcome.classes) classes.push_back(pgc::to_json(v));
                entry["classes"] = classes;
            }
            out.push_back(entry);
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    // Human output, certificates rendered as vertex lists in the input's
    // own labels.
    for (const auto& outcome : outcomes) {
        const pgc::Graph& g = outcome.g;
        std::cout << "graph " << pgc::write_graph6(g) << " (n=" << g.n()
                  << ", m=" << g.edge_count() << ")\n";
        auto print_verdict = [](const std::string& name, bool holds,
                                const pgc::Certificate& cert) {
            std::cout << "  " << name << ": " << (holds ? "yes" : "no") << "  ["
                      << render_certificate(cert) << "]\n";
        };
        if (outcome.all) {
            const auto& c = *outcome.all;
            print_verdict("perfect", c.perfect.holds, c.perfect.certificate);
            std::cout << "  triangle-free: " << (c.triangle_free ? "yes" : "no") << "\n";
            std::cout << "  bipartite: " << (c.bipartite ? "yes" : "no") << "\n";
            std::cout << "  chromatic number: " << c.chromatic << "\n";
            std::cout << "  clique number: " << c.clique << "\n";
            for (const auto& v : c.classes)
                print_verdict(pgc::class_name(v.class_id), v.holds, v.certificate);
        } else {
            if (outcome.perfect)
                print_verdict("perfect", outcome.perfect->holds, outcome.perfect->certificate);
            for (const auto& v : outcome.classes)
                print_verdict(pgc::class_name(v.class_id), v.holds, v.certificate);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checkers and exhaustive verification for perfect-graph generalizations"};
    app.require_subcommand(1);

    // ------------------------------------------------------------- check
    CheckRequest check_req;
    auto* check = app.add_subcommand("check", "evaluate classes of one or more graphs");
    check->add_option("file", check_req.file, "input file (graph6 lines or edge list)");
    check->add_option("--graph6", check_req.inline_graph6, "inline graph6 string");
    check->add_option("--format", check_req.format, "input format: graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    check->add_option("--classes", check_req.classes,
                      "comma list of: all,perfect,2-perfect,nice,stable-perfect,"
                      "perfectly-divisible,2-divisible");
    check->add_flag("--json", check_req.json_output, "machine-readable output");

    // ------------------------------------------------------------ verify
    std::string verify_suite;
    int verify_n_max = 0;
    int verify_threads = 0;
    std::string verify_source;
    std::string verify_output;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_suite,
                       "one of: lemma3,lemma4,lemma6,inclusion-chain,hoang-mcdiarmid,"
                       "perfect-oracle-equivalence,self-duality,heredity")
        ->required();
    verify->add_option("--n-max", verify_n_max, "largest vertex count (>= 1)");
    verify->add_option("--threads", verify_threads, "worker threads (default: cores)");
    verify->add_option("--source", verify_source, "graph6 file overriding the builtin universe");
    verify->add_option("--output", verify_output, "write the JSON report to a file");

    // --------------------------------------------------------- enumerate
    int enum_n = 0;
    int enum_census_n_max = 0;
    std::string enum_filter = "all";
    std::string enum_output;
    auto* enumerate = app.add_subcommand("enumerate", "stream non-isomorphic graphs as graph6");
    enumerate->add_option("--n", enum_n, "vertex count");
    enumerate->add_option("--census", enum_census_n_max,
                          "emit a CSV census for 1..N instead of graph6 lines");
    enumerate->add_option("--filter", enum_filter,
                          "all|triangle-free|connected|triangle-free-connected");
    enumerate->add_option("--output", enum_output, "write to a file instead of stdout");

    // ------------------------------------------------------------ search
    std::string search_predicate;
    int search_n_max = 0;
    std::string search_filter = "all";
    bool search_json = false;
    auto* search = app.add_subcommand("search", "find minimal obstructions to a class");
    search->add_option("predicate", search_predicate,
                       "minimal-imperfect,minimal-non-2-perfect,minimal-non-nice,"
                       "minimal-non-stable-perfect,minimal-non-perfectly-divisible,"
                       "minimal-non-2-divisible")
        ->required();
    search->add_option("--n-max", search_n_max, "largest vertex count")->required();
    search->add_option("--filter", search_filter, "universe filter");
    search->add_flag("--json", search_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgument;
    }

    try {
        if (check->parsed()) return run_check(check_req);

        if (verify->parsed()) {
            auto suite = pgc::parse_suite(verify_suite);
            if (!suite) throw std::invalid_argument("unknown suite: " + verify_suite);
            if (verify->count("--n-max") && verify_n_max < 1)
                throw std::invalid_argument("verify: n_max must be >= 1");
            pgc::SuiteSpec spec = pgc::SuiteSpec::make(*suite);
            if (verify_n_max > 0) spec.n_max = verify_n_max;
            if (verify_threads > 0) spec.threads = verify_threads;
            spec.source_path = verify_source;
            pgc::SuiteResult result = pgc::run_suite(spec);
            std::string report = pgc::to_json(result).dump(2);
            if (verify_output.empty()) {
                std::cout << report << "\n";
            } else {
                std::ofstream out(verify_output);
                if (!out) throw pgc::FileError("cannot write " + verify_output);
                out << report << "\n";
            }
            return result.ok ? kExitOk : kExitFailedSuite;
        }

        if (enumerate->parsed()) {
            pgc::GraphFilter filter = parse_filter_or_throw(enum_filter);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!enum_output.empty()) {
                file.open(enum_output);
                if (!file) throw pgc::FileError("cannot write " + enum_output);
                os = &file;
            }
            if (enumerate->count("--census")) {
                if (enumerate->count("--n"))
                    throw std::invalid_argument("enumerate: give --n or --census, not both");
                if (enum_census_n_max < 1)
                    throw std::invalid_argument("enumerate: census bound must be >= 1");
                *os << pgc::census_csv(enum_census_n_max, filter);
                return kExitOk;
            }
            if (enum_n < 1) throw std::invalid_argument("enumerate: --n must be >= 1");
            pgc::enumerate_graphs(enum_n, filter, [&](const pgc::Graph& g) {
                *os << pgc::write_graph6(g) << "\n";
                return true;
            });
            return kExitOk;
        }

        if (search->parsed()) {
            auto predicate = pgc::parse_predicate(search_predicate);
            if (!predicate) throw std::invalid_argument("unknown predicate: " + search_predicate);
            if (search_n_max < 1) throw std::invalid_argument("search: n_max must be >= 1");
            pgc::GraphFilter filter = parse_filter_or_throw(search_filter);
            auto found = pgc::search_extremal(*predicate, search_n_max, filter);
            if (search_json) {
                pgc::json graphs = pgc::json::array();
                for (const auto& g : found)
                    graphs.push_back({{"graph6", pgc::write_graph6(g)}, {"n", g.n()}});
                pgc::json report{{"predicate", pgc::predicate_name(*predicate)},
                                 {"n_max", search_n_max},
                                 {"filter", pgc::filter_name(filter)},
                                 {"graphs", graphs}};
                std::cout << report.dump(2) << "\n";
            } else {
                for (const auto& g : found)
                    std::cout << pgc::write_graph6(g) << "  (n=" << g.n() << ")\n";
                std::cout << found.size() << " minimal obstruction(s) up to n=" << search_n_max
                          << "\n";
            }
            return kExitOk;
        }
    } catch (const pgc::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const pgc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const pgc::FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgument;
    }
    return kExitOk;
}
