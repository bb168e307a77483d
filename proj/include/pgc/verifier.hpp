#pragma once

#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pgc/classes.hpp"
#include "pgc/enumeration.hpp"
#include "pgc/json_io.hpp"
#include "pgc/perfection.hpp"
#include "pgc/validate.hpp"

namespace pgc {

// Exhaustive verification of the proven facts the checkers rely on, and
// counterexample search for the open conjectures. Lemma-tier suites must
// come back empty — a counterexample there is a bug in this library and
// is reported with its graph6 string for bisection. Conjecture-tier
// suites produce findings, not failures.
enum class SuiteId {
    Lemma3,                    // triangle-free: perfect <=> bipartite
    Lemma4,                    // triangle-free: 2-perfect <=> 4-colorable
    Lemma6,                    // triangle-free: 3-colorable <=> perfectly divisible
                               //   <=> stable-perfect <=> nice
    InclusionChain,            // perfect => stable-perfect => the three superclasses
    HoangMcDiarmid,            // 2-divisible <=> odd-hole-free (conjecture)
    PerfectOracleEquivalence,  // odd-hole route == chi/omega definition route
    SelfDuality,               // perfection is invariant under complement
    Heredity,                  // every class verdict survives induced subgraphs
};

inline const char* suite_name(SuiteId id) {
    switch (id) {
        case SuiteId::Lemma3: return "lemma3";
        case SuiteId::Lemma4: return "lemma4";
        case SuiteId::Lemma6: return "lemma6";
        case SuiteId::InclusionChain: return "inclusion-chain";
        case SuiteId::HoangMcDiarmid: return "hoang-mcdiarmid";
        case SuiteId::PerfectOracleEquivalence: return "perfect-oracle-equivalence";
        case SuiteId::SelfDuality: return "self-duality";
        case SuiteId::Heredity: return "heredity";
    }
    return "?";
}

inline std::optional<SuiteId> parse_suite(const std::string& name) {
    for (SuiteId id : {SuiteId::Lemma3, SuiteId::Lemma4, SuiteId::Lemma6, SuiteId::InclusionChain,
                       SuiteId::HoangMcDiarmid, SuiteId::PerfectOracleEquivalence,
                       SuiteId::SelfDuality, SuiteId::Heredity}) {
        if (name == suite_name(id)) return id;
    }
    return std::nullopt;
}

inline bool suite_is_lemma_tier(SuiteId id) { return id != SuiteId::HoangMcDiarmid; }

// Triangle-free facts are verified over the triangle-free universe only.
inline GraphFilter suite_default_filter(SuiteId id) {
    switch (id) {
        case SuiteId::Lemma3:
        case SuiteId::Lemma4:
        case SuiteId::Lemma6: return GraphFilter::TriangleFree;
        default: return GraphFilter::All;
    }
}

// Sized for minutes-scale wall time: 8 on the triangle-free universes,
// 7 everywhere else.
inline int suite_default_n_max(SuiteId id) {
    switch (id) {
        case SuiteId::Lemma3:
        case SuiteId::Lemma4:
        case SuiteId::Lemma6: return 8;
        default: return 7;
    }
}

struct SuiteSpec {
    SuiteId suite;
    int n_max = 0;                // 0: suite default
    GraphFilter filter;           // fixed from the suite by make_suite_spec
    std::string source_path;      // optional graph6 file overriding the universe
    int threads = 0;              // 0: hardware concurrency

    static SuiteSpec make(SuiteId id) {
        SuiteSpec s;
        s.suite = id;
        s.n_max = suite_default_n_max(id);
        s.filter = suite_default_filter(id);
        return s;
    }
};

struct Counterexample {
    std::string graph6;
    json detail;
};

struct SuiteResult {
    SuiteId suite;
    int n_max = 0;
    GraphFilter filter = GraphFilter::All;
    std::string source_path;  // non-empty when a file replaced the builtin universe
    std::uint64_t graphs_tested = 0;
    std::vector<Counterexample> counterexamples;
    std::int64_t elapsed_ms = 0;

    bool lemma_tier() const { return suite_is_lemma_tier(suite); }
    // Lemma suites pass with zero counterexamples; conjecture suites
    // only fail if a finding does not re-validate.
    bool ok = true;
};

namespace detail {

// Per-graph evaluation; nullopt means the graph satisfies the suite's
// claim. All class checkers run on their Direct route so that the fast
// paths under test never certify themselves.
inline std::optional<json> evaluate_suite(SuiteId suite, const Graph& g) {
    switch (suite) {
        case SuiteId::Lemma3: {
            bool perfect = is_perfect_by_spgt(g);
            bool bipartite = is_bipartite(g).has_value();
            if (perfect == bipartite) return std::nullopt;
            return json{{"perfect", perfect}, {"bipartite", bipartite}};
        }
        case SuiteId::Lemma4: {
            auto verdict = is_2perfect(g, SearchRoute::Direct);
            bool colorable = k_colorable(g, g.vertices(), 4);
            if (verdict.holds == colorable) return std::nullopt;
            return json{{"2-perfect", to_json(verdict)}, {"4-colorable", colorable}};
        }
        case SuiteId::Lemma6: {
            SubsetCache cache(g);
            bool colorable = k_colorable(g, g.vertices(), 3);
            auto divisible = is_perfectly_divisible(g, cache);
            auto stable = is_stable_perfect(g, SearchRoute::Direct);
            auto nice = is_nice(g, cache);
            if (colorable == divisible.holds && colorable == stable.holds &&
                colorable == nice.holds)
                return std::nullopt;
            return json{{"3-colorable", colorable},
                        {"perfectly-divisible", to_json(divisible)},
                        {"stable-perfect", to_json(stable)},
                        {"nice", to_json(nice)}};
        }
        case SuiteId::InclusionChain: {
            bool perfect = is_perfect_by_spgt(g);
            auto stable = is_stable_perfect(g, SearchRoute::Direct);
            if (perfect && !stable.holds)
                return json{{"broken", "perfect => stable-perfect"}, {"perfect", true},
                            {"stable-perfect", to_json(stable)}};
            if (!stable.holds) return std::nullopt;
            SubsetCache cache(g);
            auto two_perfect = is_2perfect(g, SearchRoute::Direct);
            auto divisible = is_perfectly_divisible(g, cache);
            auto nice = is_nice(g, cache);
            if (two_perfect.holds && divisible.holds && nice.holds) return std::nullopt;
            return json{{"broken", "stable-perfect => superclasses"},
                        {"2-perfect", to_json(two_perfect)},
                        {"perfectly-divisible", to_json(divisible)},
                        {"nice", to_json(nice)}};
        }
        case SuiteId::HoangMcDiarmid: {
            SubsetCache cache(g);
            auto divisible = is_2divisible(g, cache);
            auto hole = find_odd_hole(g);
            bool hole_free = !hole.has_value();
            if (divisible.holds == hole_free) return std::nullopt;
            json detail{{"2-divisible", to_json(divisible)}, {"odd-hole-free", hole_free}};
            if (hole) detail["odd_hole"] = certificate_to_json(Certificate{*hole});
            // A finding must survive independent re-validation before it
            // counts: the odd hole must check out, and a refuting subset
            // must really admit no split.
            bool revalidated = true;
            if (hole) revalidated = validate::odd_cycle(g, *hole);
            if (auto* subset = std::get_if<ViolatingSubset>(&divisible.certificate))
                revalidated =
                    revalidated && validate::two_divisible_refutation(g, subset->vertices);
            detail["revalidated"] = revalidated;
            return detail;
        }
        case SuiteId::PerfectOracleEquivalence: {
            SubsetCache cache(g);
            bool by_def = !is_perfect_by_definition(g, cache).has_value();
            bool by_holes = is_perfect_by_spgt(g);
            if (by_def == by_holes) return std::nullopt;
            return json{{"by-definition", by_def}, {"by-odd-holes", by_holes}};
        }
        case SuiteId::SelfDuality: {
            bool direct = is_perfect_by_spgt(g);
            bool dual = is_perfect_by_spgt(complement(g));
            if (direct == dual) return std::nullopt;
            return json{{"perfect", direct}, {"complement-perfect", dual}};
        }
        case SuiteId::Heredity: {
            SubsetCache cache(g);
            bool holds[5] = {is_2perfect(g).holds, is_perfectly_divisible(g, cache).holds,
                             is_nice(g, cache).holds, is_stable_perfect(g).holds,
                             is_2divisible(g, cache).holds};
            static constexpr ClassId ids[5] = {ClassId::TwoPerfect, ClassId::PerfectlyDivisible,
                                               ClassId::Nice, ClassId::StablePerfect,
                                               ClassId::TwoDivisible};
            std::optional<json> bad;
            for_each_subset_lex(g.vertices(), [&](VertexSet s) {
                if (!s || s == g.vertices()) return true;
                Graph h = induced_subgraph(g, s);
                SubsetCache hcache(h);
                bool sub[5] = {is_2perfect(h).holds, is_perfectly_divisible(h, hcache).holds,
                               is_nice(h, hcache).holds, is_stable_perfect(h).holds,
                               is_2divisible(h, hcache).holds};
                for (int i = 0; i < 5; ++i) {
                    if (holds[i] && !sub[i]) {
                        bad = json{{"class", class_name(ids[i])},
                                   {"subset", set_to_json(s)}};
                        return false;
                    }
                }
                return true;
            });
            return bad;
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline SuiteResult run_suite(const SuiteSpec& spec) {
    auto start = std::chrono::steady_clock::now();

    if (spec.n_max < 0) throw std::invalid_argument("run_suite: n_max must be >= 1");
    SuiteResult result;
    result.suite = spec.suite;
    result.n_max = spec.n_max > 0 ? spec.n_max : suite_default_n_max(spec.suite);
    result.filter = spec.filter;

    std::vector<Graph> universe;
    if (!spec.source_path.empty()) {
        result.source_path = spec.source_path;
        EnumSpec es{0, spec.filter, spec.source_path};
        enumerate(es, [&](const Graph& g) {
            universe.push_back(g);
            return true;
        });
    } else {
        for (int n = 1; n <= result.n_max; ++n)
            for (const Graph& g : enumerate_all(n, spec.filter)) universe.push_back(g);
    }
    result.graphs_tested = universe.size();

    unsigned nthreads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, std::max<std::size_t>(universe.size(), 1));

    std::atomic<std::size_t> cursor{0};
    std::mutex sink_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        std::vector<Counterexample> local;
        try {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= universe.size()) break;
                auto detail = detail::evaluate_suite(spec.suite, universe[i]);
                if (detail)
                    local.push_back({write_graph6(universe[i]), std::move(*detail)});
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(sink_mutex);
            if (!first_error) first_error = std::current_exception();
        }
        std::lock_guard<std::mutex> lock(sink_mutex);
        for (auto& ce : local) result.counterexamples.push_back(std::move(ce));
    };

    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::sort(result.counterexamples.begin(), result.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) { return a.graph6 < b.graph6; });

    if (result.lemma_tier()) {
        result.ok = result.counterexamples.empty();
    } else {
        result.ok = true;
        for (const auto& ce : result.counterexamples)
            if (ce.detail.contains("revalidated") && !ce.detail["revalidated"].get<bool>())
                result.ok = false;
    }

    auto end = std::chrono::steady_clock::now();
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return result;
}

inline json to_json(const SuiteResult& r) {
    json ces = json::array();
    for (const auto& ce : r.counterexamples)
        ces.push_back({{"graph6", ce.graph6}, {"detail", ce.detail}});
    json universe{{"n_max", r.n_max}, {"filter", filter_name(r.filter)}};
    if (!r.source_path.empty()) universe["source"] = r.source_path;
    return {{"suite", suite_name(r.suite)},
            {"universe", universe},
            {"graphs_tested", r.graphs_tested},
            {"counterexamples", ces},
            {"elapsed_ms", r.elapsed_ms},
            {"tier", r.lemma_tier() ? "lemma" : "conjecture"},
            {"ok", r.ok}};
}

// ------------------------------------------------------------- extremal

// Minimal obstructions: graphs failing the predicate whose single-vertex
// deletions all satisfy it. For hereditary classes that is exactly
// minimality over induced subgraphs.
enum class ExtremalPredicate {
    MinimalImperfect,
    MinimalNonTwoPerfect,
    MinimalNonPerfectlyDivisible,
    MinimalNonNice,
    MinimalNonStablePerfect,
    MinimalNonTwoDivisible,
};

inline const char* predicate_name(ExtremalPredicate p) {
    switch (p) {
        case ExtremalPredicate::MinimalImperfect: return "minimal-imperfect";
        case ExtremalPredicate::MinimalNonTwoPerfect: return "minimal-non-2-perfect";
        case ExtremalPredicate::MinimalNonPerfectlyDivisible:
            return "minimal-non-perfectly-divisible";
        case ExtremalPredicate::MinimalNonNice: return "minimal-non-nice";
        case ExtremalPredicate::MinimalNonStablePerfect: return "minimal-non-stable-perfect";
        case ExtremalPredicate::MinimalNonTwoDivisible: return "minimal-non-2-divisible";
    }
    return "?";
}

inline std::optional<ExtremalPredicate> parse_predicate(const std::string& name) {
    for (ExtremalPredicate p :
         {ExtremalPredicate::MinimalImperfect, ExtremalPredicate::MinimalNonTwoPerfect,
          ExtremalPredicate::MinimalNonPerfectlyDivisible, ExtremalPredicate::MinimalNonNice,
          ExtremalPredicate::MinimalNonStablePerfect, ExtremalPredicate::MinimalNonTwoDivisible}) {
        if (name == predicate_name(p)) return p;
    }
    return std::nullopt;
}

namespace detail {

inline bool class_holds(ExtremalPredicate p, const Graph& g) {
    switch (p) {
        case ExtremalPredicate::MinimalImperfect: return is_perfect_by_spgt(g);
        case ExtremalPredicate::MinimalNonTwoPerfect: return is_2perfect(g).holds;
        case ExtremalPredicate::MinimalNonPerfectlyDivisible: {
            SubsetCache cache(g);
            return is_perfectly_divisible(g, cache).holds;
        }
        case ExtremalPredicate::MinimalNonNice: {
            SubsetCache cache(g);
            return is_nice(g, cache).holds;
        }
        case ExtremalPredicate::MinimalNonStablePerfect: return is_stable_perfect(g).holds;
        case ExtremalPredicate::MinimalNonTwoDivisible: {
            SubsetCache cache(g);
            return is_2divisible(g, cache).holds;
        }
    }
    return true;
}

}  // namespace detail

inline std::vector<Graph> search_extremal(ExtremalPredicate predicate, int n_max,
                                          GraphFilter filter = GraphFilter::All) {
    std::vector<Graph> found;
    for (int n = 1; n <= n_max; ++n) {
        enumerate_graphs(n, filter, [&](const Graph& g) {
            if (detail::class_holds(predicate, g)) return true;
            for (int v = 0; v < g.n(); ++v) {
                Graph h = induced_subgraph(g, g.vertices() & ~vbit(v));
                if (!detail::class_holds(predicate, h)) return true;  // not minimal
            }
            found.push_back(g);
            return true;
        });
    }
    return found;
}

}  // namespace pgc
