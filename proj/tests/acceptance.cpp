// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "backbone/experiment.hpp"
#include "backbone/generators.hpp"
#include "backbone/graph_io.hpp"
#include "backbone/metrics.hpp"
#include "backbone/parallel.hpp"
#include "backbone/scoring.hpp"
#include "backbone/sparsifier.hpp"
#include "test_support.hpp"

using namespace backbone;
using namespace backbone::testing;
namespace fs = std::filesystem;

namespace {

// Tolerances and sizes.
constexpr double kCriterion1Seconds = 60.0;
constexpr double kLdDiameterLow = 0.8, kLdDiameterHigh = 1.2;
constexpr double kMinDegreeRho = 0.8;
constexpr double kClusteringLow = 0.5, kClusteringHigh = 1.5;
constexpr double kMinLsQlsRho = 0.5;
constexpr double kLdMillionSeconds = 10.0;
constexpr double kMaxDoublingFactor = 2.5;
constexpr std::size_t kLargeEdges = 1'000'000;

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok)
            pass = false;
        notes.push_back((ok ? "ok   " : "FAIL ") + what);
    }
    void info(const std::string& what) { notes.push_back("     " + what); }
};

std::string fmt(double x, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

double seconds(const std::function<void()>& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double bestOf(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i)
        best = std::min(best, seconds(f));
    return best;
}

/// Facebook-like friendship networks: ~44 friends per person on average, clustering ~0.25, campus groups.
std::vector<NamedGraph> socialCorpus() {
    std::vector<NamedGraph> corpus;
    const std::size_t sizes[] = {1000, 1500, 2000, 2500, 3000};
    std::uint64_t seed = 1;
    for (std::size_t n : sizes) {
        SocialNetworkParams p{.nodes = n, .groups = n / 100, .minLinks = 8, .maxLinks = 36,
                              .triadProbability = 0.3, .mixing = 0.15};
        corpus.push_back({"social" + std::to_string(n), socialNetwork(p, seed++)});
    }
    return corpus;
}

Verdict oracleEquivalence() {
    Verdict v;
    const double elapsed = seconds([&] {
        std::mt19937_64 rng(2024);
        std::size_t triMismatch = 0, quadMismatch = 0, betMismatch = 0;
        for (int i = 0; i < 100; ++i) {
            const Graph g = erdosRenyi(1 + rng() % 12, double(rng() % 1001) / 1000.0, rng());
            triMismatch += triangleCounts(g).values != bruteTriangles(g);
            quadMismatch += quadrangleCounts(g).values != bruteQuadrangles(g);
        }
        for (int i = 0; i < 100; ++i) {
            const Graph g = erdosRenyi(1 + rng() % 9, double(rng() % 1001) / 1000.0, rng());
            const auto fast = betweenness(g).values;
            const auto slow = bruteBetweenness(g);
            for (std::size_t x = 0; x < fast.size(); ++x)
                if (std::abs(fast[x] - slow[x]) > 1e-9) {
                    ++betMismatch;
                    break;
                }
        }
        v.require(triMismatch == 0, "triangle counts, 100 random graphs n<=12: " + std::to_string(triMismatch) +
                                        " mismatches");
        v.require(quadMismatch == 0, "quadrangle counts, 100 random graphs n<=12: " +
                                         std::to_string(quadMismatch) + " mismatches");
        v.require(betMismatch == 0, "betweenness vs path enumeration, 100 random graphs n<=9: " +
                                        std::to_string(betMismatch) + " mismatches");
        const std::vector<std::pair<std::string, Graph>> fixtures{
            {"two K4 + bridge", cliquePair()}, {"K4", complete(4)}, {"K3+K3", disjointUnion(complete(3), complete(3))}};
        for (const auto& [name, g] : fixtures) {
            const auto best = bestModularityPartition(g, 4);
            const auto found = louvainCommunities(g);
            v.require(found.sameGrouping(Partition::fromLabels(best)),
                      "Louvain equals exhaustive optimum on " + name + " (Q=" + fmt(modularity(g, found), 4) + ")");
        }
    });
    v.require(elapsed < kCriterion1Seconds, "runtime " + fmt(elapsed, 2) + " s < 60 s");
    return v;
}

Verdict keepRule() {
    Verdict v;
    std::mt19937_64 rng(77);
    std::size_t graphs = 0, mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 2 + rng() % 99;
        const Graph g = i % 5 == 4
                            ? socialNetwork({.nodes = n, .groups = 1 + n / 25, .minLinks = 1, .maxLinks = 6}, rng())
                            : erdosRenyi(n, 0.02 + 0.3 * double(rng() % 1000) / 1000.0, rng());
        ++graphs;
        const auto ls = scoreLocalSimilarity(g);
        const auto ld = scoreLocalDegree(g);
        const auto jaccard = [&](NodeId a, NodeId b) { return bruteJaccard(g, a, b); };
        const auto degree = [&](NodeId, NodeId b) { return double(g.degree(b)); };
        for (int k = 0; k <= 20; ++k) {
            const double threshold = (20 - k) / 20.0;
            for (const auto& [scores, key] : {std::pair{&ls, std::function<double(NodeId, NodeId)>(jaccard)},
                                              std::pair{&ld, std::function<double(NodeId, NodeId)>(degree)}}) {
                const auto kept = filterByThreshold(g, *scores, threshold).keptEdges;
                if (std::set<std::size_t>(kept.begin(), kept.end()) != simulateKeepRule(g, k, key))
                    ++mismatches;
            }
        }
    }
    v.require(mismatches == 0, std::to_string(graphs) + " random graphs n<=100, 21 alpha values, LS and LD: " +
                                   std::to_string(mismatches) + " set mismatches");
    return v;
}

Verdict identitySweep(const std::vector<NamedGraph>& corpus) {
    Verdict v;
    std::vector<NamedGraph> graphs = corpus;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5; ++i)
        graphs.push_back({"er" + std::to_string(i), erdosRenyi(200, 0.05, rng())});
    const std::vector<double> ratios{1.0};
    std::size_t checked = 0, wrong = 0;
    for (const auto& r : runSweep(graphs, sweepMethods(), ratios)) {
        const double expected = r.measure == "cc-deviation" ? 0.0 : 1.0;
        ++checked;
        if (!r.value || *r.value != expected) {
            ++wrong;
            v.info(r.graph + " " + r.method + " " + r.measure + " = " + (r.value ? fmt(*r.value, 6) : "undefined"));
        }
    }
    v.require(wrong == 0, std::to_string(graphs.size()) + " graphs x 7 methods at ratio 1.0: " +
                              std::to_string(wrong) + " of " + std::to_string(checked) + " values not exact");
    return v;
}

Verdict nestedness(const std::vector<NamedGraph>& corpus) {
    Verdict v;
    std::vector<Graph> graphs;
    for (const auto& g : corpus)
        graphs.push_back(g.graph);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 10; ++i)
        graphs.push_back(erdosRenyi(50 + rng() % 150, 0.05, rng()));
    std::vector<double> ratios;
    for (int k = 2; k <= 20; ++k)
        ratios.push_back(k / 20.0);
    std::size_t violations = 0;
    for (const Graph& g : graphs) {
        for (Method method : allMethods()) {
            const auto s = scoreEdges(g, method);
            std::vector<EdgeId> previous;
            for (double r : ratios) {
                const auto kept = filterByRatio(g, s, r).keptEdges;
                if (!std::includes(kept.begin(), kept.end(), previous.begin(), previous.end()))
                    ++violations;
                previous = kept;
            }
        }
    }
    v.require(violations == 0, std::to_string(graphs.size()) + " graphs x 8 methods, ratios 0.10..1.00: " +
                                   std::to_string(violations) + " nesting violations");
    return v;
}

Verdict qualitative(const std::vector<NamedGraph>& corpus) {
    Verdict v;
    const std::vector<Method> methods{Method::randomEdge, Method::localDegree, Method::triadicSimmelian,
                                      Method::quadrilateralSimmelian};
    const std::vector<double> ratios{0.2};
    const auto records = runSweep(corpus, methods, ratios);
    std::map<std::pair<std::string, std::string>, double> mean;
    for (const auto& row : aggregate(records)) {
        if (!row.mean || row.excluded > 0)
            v.require(false, "undefined value for " + row.method + " " + row.measure);
        mean[{row.method, row.measure}] = row.mean.value_or(NAN);
    }
    for (const auto& r : records)
        if (r.measure == "diameter-quotient" || r.measure == "cc-deviation" || r.measure == "spearman-degree")
            v.info(r.graph + " " + r.method + " " + r.measure + " " + (r.value ? fmt(*r.value) : "undefined"));

    const double ldDiam = mean[{"ld", "diameter-quotient"}];
    const double tsDiam = mean[{"ts", "diameter-quotient"}];
    const double qlsDiam = mean[{"qls", "diameter-quotient"}];
    v.require(ldDiam >= kLdDiameterLow && ldDiam <= kLdDiameterHigh,
              "(a) corpus mean LD diameter-quotient " + fmt(ldDiam) + " in [0.8, 1.2]");
    v.require(std::abs(tsDiam - 1) > std::abs(ldDiam - 1) && std::abs(qlsDiam - 1) > std::abs(ldDiam - 1),
              "(a) TS " + fmt(tsDiam) + " and QLS " + fmt(qlsDiam) + " deviate further from 1 than LD");
    const double ldCc = mean[{"ld", "cc-deviation"}], reCc = mean[{"re", "cc-deviation"}];
    v.require(std::abs(ldCc) < std::abs(reCc),
              "(b) |cc-deviation| LD " + fmt(std::abs(ldCc)) + " < RE " + fmt(std::abs(reCc)));
    const double ldRho = mean[{"ld", "spearman-degree"}], reRho = mean[{"re", "spearman-degree"}],
                 tsRho = mean[{"ts", "spearman-degree"}];
    v.require(ldRho >= kMinDegreeRho && reRho >= kMinDegreeRho,
              "(c) degree rho LD " + fmt(ldRho) + ", RE " + fmt(reRho) + " >= 0.8");
    v.require(ldRho > tsRho && reRho > tsRho, "(c) both exceed TS " + fmt(tsRho));
    return v;
}

Verdict randomEdgeClustering(const std::vector<NamedGraph>& corpus) {
    Verdict v;
    for (const auto& [name, g] : corpus) {
        const double c0 = averageLocalClustering(g);
        const auto s = scoreRandom(g, 1);
        for (double r : {0.3, 0.5}) {
            const double c = averageLocalClustering(filterByRatio(g, s, r).graph);
            const double expected = r * c0;
            v.require(c >= kClusteringLow * expected && c <= kClusteringHigh * expected,
                      name + " r=" + fmt(r, 1) + ": cc " + fmt(c, 4) + " in [" + fmt(kClusteringLow * expected, 4) +
                          ", " + fmt(kClusteringHigh * expected, 4) + "] (c0=" + fmt(c0, 4) + ")");
        }
    }
    return v;
}

Verdict correlationSigns(const std::vector<NamedGraph>& corpus) {
    Verdict v;
    const std::vector<std::string> labels{"re", "tri", "ls", "ld", "ts", "qls", "eff", "mod"};
    const auto m = scoreCorrelationMatrix(corpus, labels);
    auto cell = [&](const std::string& a, const std::string& b) {
        const auto i = std::find(labels.begin(), labels.end(), a) - labels.begin();
        const auto j = std::find(labels.begin(), labels.end(), b) - labels.begin();
        return m.cells[i][j].value_or(NAN);
    };
    v.require(cell("ls", "qls") > kMinLsQlsRho, "mean rho(LS, QLS) " + fmt(cell("ls", "qls")) + " > 0.5");
    v.require(cell("eff", "tri") < 0.0, "mean rho(EFF, Tri) " + fmt(cell("eff", "tri")) + " < 0");
    v.require(cell("ls", "tri") > 0.0, "mean rho(LS, Tri) " + fmt(cell("ls", "tri")) + " > 0");
    for (const auto& d : m.diagnostics)
        v.info(d);
    return v;
}

Verdict performance(const std::vector<NamedGraph>& corpus) {
    Verdict v;
    v.info("hardware threads available: " + std::to_string(threadCount()));
    {
        const Graph big = socialNetwork({.nodes = kLargeEdges / 22, .groups = 200, .minLinks = 8, .maxLinks = 36,
                                         .triadProbability = 0.3, .mixing = 0.15},
                                        11);
        const double t = bestOf(1, [&] { scoreLocalDegree(big); });
        v.require(big.numberOfEdges() >= 900'000 && t < kLdMillionSeconds,
                  "LD on generated graph with m=" + std::to_string(big.numberOfEdges()) + ": " + fmt(t, 3) + " s < 10 s");
    }
    {
        ThreadCountGuard single(1);
        const Graph half = randomGraphWithEdges(100'000, kLargeEdges / 2, 12);
        const Graph full = randomGraphWithEdges(200'000, kLargeEdges, 13);
        for (Method method : {Method::localDegree, Method::randomEdge}) {
            const double a = bestOf(5, [&] { scoreEdges(half, method); });
            const double b = bestOf(5, [&] { scoreEdges(full, method); });
            v.require(b / a <= kMaxDoublingFactor, std::string(methodTag(method)) + " m=500k " + fmt(a, 4) +
                                                        " s, m=1M " + fmt(b, 4) + " s, factor " + fmt(b / a, 2) +
                                                        " <= 2.5");
        }
    }
    const std::vector<Method> methods{Method::randomEdge,       Method::localDegree,
                                      Method::localSimilarity,  Method::triadicSimmelian,
                                      Method::quadrilateralSimmelian, Method::edgeForestFire};
    std::map<std::string, std::map<std::string, double>> t;
    for (const auto& row : timeMethods(corpus, methods, {}, 3))
        t[row.graph][row.method] = row.seconds;
    for (const auto& [graph, times] : t) {
        double othersMin = 1e300;
        for (const char* tag : {"ls", "ts", "qls", "eff"})
            othersMin = std::min(othersMin, times.at(tag));
        std::string detail;
        for (const auto& [method, s] : times)
            detail += " " + method + "=" + fmt(s * 1e3, 2) + "ms";
        v.require(times.at("re") < times.at("ld") && times.at("ld") < othersMin,
                  graph + ": RE fastest, LD second:" + detail);
    }
    return v;
}

int runCli(const std::string& dir, const std::string& args, const std::string& out) {
    const std::string cmd =
        "cd '" + dir + "' && '" BACKBONE_CLI_PATH "' " + args + " > '" + out + "' 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Drops the seconds column of a timing table.
std::string withoutSeconds(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line))
        out += line.substr(0, line.rfind(',')) + '\n';
    return out;
}

Verdict cliDeterminism(const std::vector<NamedGraph>& corpus) {
    Verdict v;
    const fs::path dir = fs::temp_directory_path() / "backbone_acceptance_cli";
    fs::remove_all(dir);
    fs::create_directories(dir / "corpus");
    for (std::size_t i = 0; i < 2; ++i)
        writeEdgeListFile((dir / "corpus" / (corpus[i].name + ".txt")).string(), corpus[i].graph);
    const std::string g = "corpus/" + corpus[0].name + ".txt";

    std::vector<std::string> commands;
    for (Method m : allMethods())
        commands.push_back("score " + g + " --method " + std::string(methodTag(m)) + " --seed 3");
    commands.push_back("sparsify " + g + " --method eff --ratio 0.3 --seed 5");
    commands.push_back("sparsify " + g + " --method ts --ratio 0.5");
    commands.push_back("evaluate " + g + " --method ld --ratio 0.2");
    commands.push_back("evaluate " + g + " --method re --ratio 0.4 --json --seed 9");
    commands.push_back("sweep corpus --ratios 0.2,0.5,1");
    commands.push_back("sweep corpus --methods ld,eff --ratios 0.1,0.3 --aggregate");
    commands.push_back("correlate corpus");
    commands.push_back("generate --nodes 500 --groups 5 --seed 4");
    commands.push_back("time corpus --reps 1");

    for (const auto& cmd : commands) {
        const int a = runCli(dir.string(), cmd + " --threads 1", "one.out");
        const int b = runCli(dir.string(), cmd + " --threads 4", "four.out");
        std::string x = slurp(dir / "one.out"), y = slurp(dir / "four.out");
        std::string scope = "byte-identical";
        if (cmd.rfind("time", 0) == 0) {
            x = withoutSeconds(x);
            y = withoutSeconds(y);
            scope = "identical apart from wall-clock seconds";
        }
        v.require(a == 0 && b == 0 && x == y && !x.empty(), "'" + cmd + "' with --threads 1 and 4: " + scope);
    }
    fs::remove_all(dir);
    return v;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict(const std::vector<NamedGraph>&)>>> criteria{
        {"oracle equivalence", [](const auto&) { return oracleEquivalence(); }},
        {"keep-rule equivalence", [](const auto&) { return keepRule(); }},
        {"identity sweep", identitySweep},
        {"nestedness", nestedness},
        {"qualitative reproduction at ratio 0.2", qualitative},
        {"random edge clustering model", randomEdgeClustering},
        {"correlation matrix signs", correlationSigns},
        {"performance", performance},
        {"CLI determinism across thread counts", cliDeterminism},
    };
    const auto corpus = socialCorpus();
    std::printf("corpus:");
    for (const auto& [name, g] : corpus)
        std::printf(" %s(n=%zu m=%zu)", name.c_str(), g.numberOfNodes(), g.numberOfEdges());
    std::printf("\n");

    int failed = 0;
    std::vector<std::string> summary;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        double t = 0;
        try {
            t = seconds([&] { v = criteria[i].second(corpus); });
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        for (const auto& note : v.notes)
            std::printf("    %s\n", note.c_str());
        char line[256];
        std::snprintf(line, sizeof line, "%s criterion %zu: %s (%.1f s)", v.pass ? "PASS" : "FAIL", i + 1,
                      criteria[i].first.c_str(), t);
        std::printf("%s\n", line);
        std::fflush(stdout);
        summary.push_back(line);
        failed += !v.pass;
    }
    std::printf("\nsummary\n");
    for (const auto& s : summary)
        std::printf("%s\n", s.c_str());
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
