// Acceptance gate: one pass/fail line per criterion, exit code equal to
// the number of failures. Everything runs from scratch — builtin
// enumeration, both decision routes, certificate audits — so a clean run
// is a full end-to-end check of the library.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "pgc/classes.hpp"
#include "pgc/enumeration.hpp"
#include "pgc/families.hpp"
#include "pgc/perfection.hpp"
#include "pgc/validate.hpp"
#include "pgc/verifier.hpp"

using namespace pgc;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& note, double seconds) {
    std::printf("[%s] %-52s %8.2fs  %s\n", pass ? "PASS" : "FAIL", name.c_str(), seconds,
                note.c_str());
    if (!pass) ++failures;
}

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool pass = false;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    report(name, pass, note, std::chrono::duration<double>(t1 - t0).count());
}

bool run_clean_suite(SuiteId id, int n_max, std::int64_t budget_ms, std::string& note) {
    SuiteSpec spec = SuiteSpec::make(id);
    spec.n_max = n_max;
    SuiteResult r = run_suite(spec);
    note = "graphs=" + std::to_string(r.graphs_tested) +
           " counterexamples=" + std::to_string(r.counterexamples.size());
    if (!r.counterexamples.empty()) {
        note += " first=" + r.counterexamples.front().graph6;
        return false;
    }
    if (r.elapsed_ms >= budget_ms) {
        note += " over time budget";
        return false;
    }
    return r.ok;
}

struct CertificateAudit {
    std::uint64_t checked = 0;
    std::uint64_t valid = 0;

    void count(bool ok) {
        ++checked;
        if (ok) ++valid;
    }

    // Audits every certificate the production checkers emit for one
    // graph, with the independent adjacency-only validator.
    void audit_graph(const Graph& g, bool heavy) {
        auto perfect = is_perfect(g);
        if (std::holds_alternative<Bipartition>(perfect.certificate))
            count(validate::bipartition(g, std::get<Bipartition>(perfect.certificate),
                                        g.vertices()));
        if (std::holds_alternative<OddCycle>(perfect.certificate))
            count(validate::odd_cycle(g, std::get<OddCycle>(perfect.certificate)));
        if (auto hole = find_odd_hole(g)) count(validate::odd_cycle(g, *hole));
        if (!heavy) return;

        for (SearchRoute route : {SearchRoute::Auto, SearchRoute::Direct}) {
            auto two = is_2perfect(g, route);
            if (two.holds)
                count(validate::two_perfect_partition(g, std::get<Partition2>(two.certificate),
                                                      g.vertices()));
            auto stable = is_stable_perfect(g, route);
            if (stable.holds)
                count(validate::stable_perfect_set(g, std::get<StableSet>(stable.certificate),
                                                   g.vertices()));
        }

        SubsetCache cache(g);
        auto divisible = is_perfectly_divisible(g, cache);
        if (divisible.holds && std::holds_alternative<Partition2>(divisible.certificate))
            count(validate::divisible_partition(g, std::get<Partition2>(divisible.certificate),
                                                g.vertices()));
        auto two_div = is_2divisible(g, cache);
        if (two_div.holds && std::holds_alternative<Partition2>(two_div.certificate))
            count(validate::two_divisible_partition(
                g, std::get<Partition2>(two_div.certificate), g.vertices()));

        for (int k : {3, 4})
            if (auto col = find_k_coloring(g, g.vertices(), k))
                count(validate::coloring(g, *col, g.vertices(), k));

        count(validate::clique(g, max_clique(g, g.vertices())));
    }
};

}  // namespace

int main() {
    std::printf("acceptance suite: exact checkers for perfect-graph generalizations\n\n");

    criterion("C1 triangle-free perfect<=>bipartite, n<=8", [](std::string& note) {
        return run_clean_suite(SuiteId::Lemma3, 8, 300000, note);
    });

    criterion("C2 triangle-free 2-perfect<=>4-colorable, n<=8", [](std::string& note) {
        return run_clean_suite(SuiteId::Lemma4, 8, 300000, note);
    });

    criterion("C3 triangle-free four-way equivalence, n<=8", [](std::string& note) {
        return run_clean_suite(SuiteId::Lemma6, 8, 300000, note);
    });

    criterion("C4 inclusion chain, all graphs n<=7", [](std::string& note) {
        return run_clean_suite(SuiteId::InclusionChain, 7, 300000, note);
    });

    criterion("C5 perfection oracle equivalence + self-duality, n<=7", [](std::string& note) {
        std::string second;
        bool a = run_clean_suite(SuiteId::PerfectOracleEquivalence, 7, 300000, note);
        bool b = run_clean_suite(SuiteId::SelfDuality, 7, 300000, second);
        note += " | " + second;
        return a && b;
    });

    criterion("C6 named-graph regression vector", [](std::string& note) {
        int bad = 0;
        auto expect = [&](bool got, bool want, const char* what) {
            if (got != want) {
                ++bad;
                note += std::string(" ") + what;
            }
        };

        auto c5 = classify_all(cycle_graph(5));
        expect(c5.perfect.holds, false, "C5.perfect");
        expect(c5.classes[0].holds, true, "C5.2perfect");
        expect(c5.classes[1].holds, true, "C5.perfdiv");
        expect(c5.classes[2].holds, true, "C5.nice");
        expect(c5.classes[3].holds, true, "C5.stable");
        expect(c5.classes[4].holds, false, "C5.2div");

        auto grz = classify_all(grotzsch_graph());
        expect(grz.triangle_free, true, "Grz.tf");
        expect(grz.chromatic == 4, true, "Grz.chi4");
        expect(grz.classes[0].holds, true, "Grz.2perfect");
        expect(grz.classes[2].holds, false, "Grz.nice");
        expect(grz.classes[3].holds, false, "Grz.stable");
        expect(grz.classes[1].holds, false, "Grz.perfdiv");

        auto k4 = classify_all(complete_graph(4));
        expect(k4.perfect.holds, true, "K4.perfect");
        expect(k4.classes[0].holds, true, "K4.2perfect");
        expect(k4.classes[2].holds, true, "K4.nice");
        expect(k4.classes[3].holds, true, "K4.stable");
        expect(k4.classes[1].holds, true, "K4.perfdiv");

        if (bad == 0) note = "C5, Grotzsch, K4 all exact";
        return bad == 0;
    });

    criterion("C7 Hoang-McDiarmid sweep, all graphs n<=8", [](std::string& note) {
        return run_clean_suite(SuiteId::HoangMcDiarmid, 8, 900000, note);
    });

    criterion("C8 invariant engines vs brute-force oracles", [](std::string& note) {
        std::uint64_t chi_checked = 0, omega_checked = 0;
        for (int n = 1; n <= 6; ++n) {
            for (const Graph& g : enumerate_all(n, GraphFilter::All)) {
                ++chi_checked;
                if (chromatic_number(g) != oracles::brute_chromatic_number(g)) {
                    note = "chi mismatch on " + write_graph6(g);
                    return false;
                }
            }
        }
        for (int n = 1; n <= 7; ++n) {
            for (const Graph& g : enumerate_all(n, GraphFilter::All)) {
                ++omega_checked;
                if (clique_number(g) != oracles::brute_clique_number(g, g.vertices())) {
                    note = "omega mismatch on " + write_graph6(g);
                    return false;
                }
            }
        }
        note = "chi on " + std::to_string(chi_checked) + " graphs, omega on " +
               std::to_string(omega_checked);
        return true;
    });

    criterion("C9 enumeration censuses, n<=7", [](std::string& note) {
        for (int n = 1; n <= 7; ++n) {
            if (census_count(n, GraphFilter::All) != oracles::kGraphCounts[n]) {
                note = "all-graphs census off at n=" + std::to_string(n);
                return false;
            }
            if (census_count(n, GraphFilter::TriangleFree) != oracles::kTriangleFreeCounts[n]) {
                note = "triangle-free census off at n=" + std::to_string(n);
                return false;
            }
        }
        // Independent route: bucket all labeled graphs by canonical form.
        for (int n = 1; n <= 5; ++n) {
            std::set<std::string> buckets;
            int edges = n * (n - 1) / 2;
            for (std::uint32_t bits = 0; bits < (1u << edges); ++bits) {
                Graph g(n);
                int e = 0;
                for (int v = 1; v < n; ++v)
                    for (int u = 0; u < v; ++u, ++e)
                        if ((bits >> e) & 1) g.add_edge(u, v);
                buckets.insert(canonical_form(g));
            }
            if (buckets.size() != oracles::kGraphCounts[n]) {
                note = "bucket count off at n=" + std::to_string(n);
                return false;
            }
        }
        note = "counts match the published sequences; buckets agree to n=5";
        return true;
    });

    criterion("C10 certificate audit over the acceptance universes", [](std::string& note) {
        CertificateAudit audit;
        for (int n = 1; n <= 7; ++n)
            for (const Graph& g : enumerate_all(n, GraphFilter::All))
                audit.audit_graph(g, true);
        for (const Graph& g : enumerate_all(8, GraphFilter::TriangleFree))
            audit.audit_graph(g, true);
        for (const Graph& g : enumerate_all(8, GraphFilter::All))
            audit.audit_graph(g, false);  // odd-hole witnesses on the full n=8 universe
        for (const Graph& g :
             {cycle_graph(5), cycle_graph(7), complement(cycle_graph(7)), complete_graph(4),
              petersen_graph(), grotzsch_graph()})
            audit.audit_graph(g, true);
        note = std::to_string(audit.valid) + "/" + std::to_string(audit.checked) +
               " certificates validated";
        return audit.checked > 0 && audit.valid == audit.checked;
    });

    std::printf("\n%d criterion(s) failed\n", failures);
    return failures;
}
