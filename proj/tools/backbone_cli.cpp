// backbone: command line front end for scoring, sparsifying and evaluating graphs.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "backbone/edge_scores.hpp"
#include "backbone/experiment.hpp"
#include "backbone/generators.hpp"
#include "backbone/graph_io.hpp"
#include "backbone/parallel.hpp"
#include "backbone/scoring.hpp"
#include "backbone/sparsifier.hpp"

namespace fs = std::filesystem;
using namespace backbone;

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::vector<std::string> inputs;
    std::string method;
    std::vector<std::string> methods;
    std::string scores;
    double ratio = -1.0;
    std::vector<double> ratios;
    std::uint64_t seed = 1;
    int threads = -1;
    std::string out;
    bool json = false;
    bool aggregate = false;
    int repetitions = 3;
    double effP = 0.95;
    double effTarget = 5.0;
    double prDamping = 0.85;
    double prTol = 1e-9;

    // generate
    std::string model = "social";
    std::size_t nodes = 2000;
    std::size_t edges = 0;
    double probability = 0.01;
    std::size_t groups = 20;
    std::size_t minLinks = 4;
    std::size_t maxLinks = 20;
    double triad = 0.6;
    double mixing = 0.15;
};

ScoringOptions scoringOptions(const Config& c) {
    return {.seed = c.seed, .fireSpreadProbability = c.effP, .fireTargetVisitRatio = c.effTarget};
}

ExperimentOptions experimentOptions(const Config& c) {
    ExperimentOptions options;
    options.scoring = scoringOptions(c);
    options.pageRank.damping = c.prDamping;
    options.pageRank.tolerance = c.prTol;
    return options;
}

Method requireMethod(const std::string& tag) {
    if (auto m = parseMethod(tag))
        return *m;
    throw UsageError("unknown method '" + tag + "'");
}

std::vector<Method> requireMethods(const std::vector<std::string>& tags) {
    if (tags.empty())
        return {sweepMethods().begin(), sweepMethods().end()};
    std::vector<Method> out;
    for (const auto& t : tags)
        out.push_back(requireMethod(t));
    return out;
}

double requireRatio(double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw UsageError("ratio must lie in [0, 1]");
    return ratio;
}

void checkParameters(const Config& c) {
    if (!(c.effP > 0.0 && c.effP < 1.0))
        throw UsageError("--eff-p must lie strictly between 0 and 1");
    if (!(c.effTarget > 0.0))
        throw UsageError("--eff-target must be positive");
    if (!(c.prDamping > 0.0 && c.prDamping < 1.0))
        throw UsageError("--pr-damping must lie strictly between 0 and 1");
    if (!(c.prTol >= 0.0))
        throw UsageError("--pr-tol must be non-negative");
}

void applyThreads(const Config& c) {
    int threads = c.threads;
    if (threads < 0) {
        if (const char* env = std::getenv("BACKBONE_THREADS"); env && *env) {
            try {
                std::size_t used = 0;
                threads = std::stoi(env, &used);
                if (env[used] != '\0')
                    throw std::invalid_argument(env);
            } catch (const std::exception&) {
                throw UsageError("BACKBONE_THREADS must be a non-negative integer");
            }
        }
    }
    if (threads < -1)
        throw UsageError("thread count must be non-negative");
    setThreadCount(std::max(threads, 0));
}

/// Runs `write` against --out, or stdout when no path was given.
void emit(const Config& c, const std::function<void(std::ostream&)>& write) {
    if (c.out.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(c.out, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write '" + c.out + "'");
    write(file);
    if (!file)
        throw std::runtime_error("write to '" + c.out + "' failed");
}

Graph loadInput(const std::string& path) {
    if (!fs::is_regular_file(path))
        throw std::runtime_error("cannot read '" + path + "'");
    return loadGraphFile(path);
}

/// Files are taken as given; directories contribute their regular files in name order.
std::vector<NamedGraph> loadCorpus(const std::vector<std::string>& inputs) {
    std::vector<fs::path> files;
    for (const auto& input : inputs) {
        if (fs::is_directory(input)) {
            std::vector<fs::path> inside;
            for (const auto& entry : fs::directory_iterator(input))
                if (entry.is_regular_file() && entry.path().filename().string().front() != '.')
                    inside.push_back(entry.path());
            std::sort(inside.begin(), inside.end());
            files.insert(files.end(), inside.begin(), inside.end());
        } else if (fs::is_regular_file(input)) {
            files.emplace_back(input);
        } else {
            throw std::runtime_error("cannot read '" + input + "'");
        }
    }
    if (files.empty())
        throw std::runtime_error("corpus is empty");
    std::vector<NamedGraph> corpus;
    for (const auto& f : files)
        corpus.push_back({f.stem().string(), loadGraphFile(f.string())});
    return corpus;
}

void writeRecords(const Config& c, const std::vector<SweepRecord>& records) {
    if (c.aggregate) {
        const auto rows = aggregate(records);
        emit(c, [&](std::ostream& out) { writeAggregateCsv(out, rows); });
    } else if (c.json) {
        emit(c, [&](std::ostream& out) { writeRecordsJson(out, records); });
    } else {
        emit(c, [&](std::ostream& out) { writeRecordsCsv(out, records); });
    }
}

int runScore(const Config& c) {
    const Method method = requireMethod(c.method);
    const Graph g = loadInput(c.inputs.front());
    const auto scores = scoreEdges(g, method, scoringOptions(c));
    emit(c, [&](std::ostream& out) { writeScores(out, g, scores); });
    return 0;
}

int runSparsify(const Config& c) {
    const double ratio = requireRatio(c.ratio);
    if (c.method.empty() == c.scores.empty())
        throw UsageError("give exactly one of --method and --scores");
    std::optional<Method> method;
    if (!c.method.empty())
        method = requireMethod(c.method);
    const Graph g = loadInput(c.inputs.front());
    EdgeScores scores;
    if (method) {
        scores = scoreEdges(g, *method, scoringOptions(c));
    } else {
        std::ifstream in(c.scores);
        if (!in)
            throw std::runtime_error("cannot read '" + c.scores + "'");
        scores = readScores(in, g);
    }
    const auto backbone = filterByRatio(g, scores, ratio);
    emit(c, [&](std::ostream& out) {
        writeEdgeList(out, backbone.graph);
        if (backbone.graph.numberOfEdges() > 0)
            out << '\n';
    });
    (c.out.empty() ? std::cerr : std::cout) << "kept=" << backbone.graph.numberOfEdges() << " of "
                                            << g.numberOfEdges() << '\n';
    return 0;
}

int runEvaluate(const Config& c) {
    const double ratio = requireRatio(c.ratio);
    const std::vector<Method> methods{requireMethod(c.method)};
    const NamedGraph g{fs::path(c.inputs.front()).stem().string(), loadInput(c.inputs.front())};
    const std::vector<double> ratios{ratio};
    writeRecords(c, runSweep(g, methods, ratios, experimentOptions(c)));
    return 0;
}

int runSweepCommand(const Config& c) {
    const auto methods = requireMethods(c.methods);
    std::vector<double> ratios = c.ratios.empty() ? defaultRatios() : c.ratios;
    for (double r : ratios)
        requireRatio(r);
    if (!std::is_sorted(ratios.begin(), ratios.end()))
        throw UsageError("ratios must be listed in ascending order");
    const auto corpus = loadCorpus(c.inputs);
    writeRecords(c, runSweep(corpus, methods, ratios, experimentOptions(c)));
    return 0;
}

int runCorrelate(const Config& c) {
    std::vector<std::string> labels = c.methods;
    if (labels.empty()) {
        for (Method m : sweepMethods())
            labels.emplace_back(methodTag(m));
        labels.emplace_back("mod");
    }
    for (const auto& l : labels)
        if (l != "mod")
            requireMethod(l);
    const auto corpus = loadCorpus(c.inputs);
    const auto matrix = scoreCorrelationMatrix(corpus, labels, scoringOptions(c));
    for (const auto& d : matrix.diagnostics)
        std::cerr << "note: " << d << '\n';
    emit(c, [&](std::ostream& out) { writeCorrelationCsv(out, matrix); });
    return 0;
}

int runTime(const Config& c) {
    const auto methods = requireMethods(c.methods);
    if (c.repetitions < 1)
        throw UsageError("--reps must be at least 1");
    const auto corpus = loadCorpus(c.inputs);
    const auto rows = timeMethods(corpus, methods, scoringOptions(c), c.repetitions);
    emit(c, [&](std::ostream& out) { writeTimingCsv(out, rows); });
    return 0;
}

int runGenerate(const Config& c) {
    Graph g;
    if (c.model == "social") {
        g = socialNetwork({c.nodes, c.groups, c.minLinks, c.maxLinks, c.triad, c.mixing}, c.seed);
    } else if (c.model == "gnm") {
        g = randomGraphWithEdges(c.nodes, c.edges, c.seed);
    } else if (c.model == "gnp") {
        g = erdosRenyi(c.nodes, c.probability, c.seed);
    } else {
        throw UsageError("unknown model '" + c.model + "'");
    }
    emit(c, [&](std::ostream& out) {
        writeEdgeList(out, g);
        if (g.numberOfEdges() > 0)
            out << '\n';
    });
    return 0;
}

void addCommon(CLI::App* cmd, Config& c) {
    cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
    cmd->add_option("--threads", c.threads, "worker threads (0 = all cores; default $BACKBONE_THREADS)");
    cmd->add_option("--out,-o", c.out, "output file (default stdout)");
}

void addScoringParameters(CLI::App* cmd, Config& c) {
    cmd->add_option("--eff-p", c.effP, "Edge Forest Fire spread probability")->capture_default_str();
    cmd->add_option("--eff-target", c.effTarget, "Edge Forest Fire visits per edge")->capture_default_str();
}

void addMetricParameters(CLI::App* cmd, Config& c) {
    cmd->add_option("--pr-damping", c.prDamping, "PageRank damping")->capture_default_str();
    cmd->add_option("--pr-tol", c.prTol, "PageRank L1 tolerance")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge scoring and sparsification of undirected graphs"};
    app.require_subcommand(1);
    Config c;
    std::function<int(const Config&)> action;

    auto* score = app.add_subcommand("score", "score every edge of a graph");
    score->add_option("graph", c.inputs, "edge list")->required()->expected(1);
    score->add_option("--method,-m", c.method, "re, tri, js, ls, ld, ts, qls or eff")->required();
    addCommon(score, c);
    addScoringParameters(score, c);
    score->callback([&] { action = runScore; });

    auto* sparsify = app.add_subcommand("sparsify", "keep the highest scoring fraction of edges");
    sparsify->add_option("graph", c.inputs, "edge list")->required()->expected(1);
    sparsify->add_option("--method,-m", c.method, "scoring method");
    sparsify->add_option("--scores", c.scores, "score file written by 'score'");
    sparsify->add_option("--ratio,-r", c.ratio, "fraction of edges to keep")->required();
    addCommon(sparsify, c);
    addScoringParameters(sparsify, c);
    sparsify->callback([&] { action = runSparsify; });

    auto* evaluate = app.add_subcommand("evaluate", "compare one backbone with its original graph");
    evaluate->add_option("graph", c.inputs, "edge list")->required()->expected(1);
    evaluate->add_option("--method,-m", c.method, "scoring method")->required();
    evaluate->add_option("--ratio,-r", c.ratio, "fraction of edges to keep")->required();
    evaluate->add_flag("--json", c.json, "emit JSON instead of CSV");
    addCommon(evaluate, c);
    addScoringParameters(evaluate, c);
    addMetricParameters(evaluate, c);
    evaluate->callback([&] { action = runEvaluate; });

    auto* sweep = app.add_subcommand("sweep", "evaluate methods over a ratio grid on a corpus");
    sweep->add_option("corpus", c.inputs, "edge list files or directories")->required();
    sweep->add_option("--methods,--method,-m", c.methods, "comma separated tags")->delimiter(',');
    sweep->add_option("--ratios,--ratio,-r", c.ratios, "comma separated ratios (default 0.05..1.00)")
        ->delimiter(',');
    sweep->add_flag("--json", c.json, "emit JSON instead of CSV");
    sweep->add_flag("--aggregate", c.aggregate, "average each cell over the corpus");
    addCommon(sweep, c);
    addScoringParameters(sweep, c);
    addMetricParameters(sweep, c);
    sweep->callback([&] { action = runSweepCommand; });

    auto* correlate = app.add_subcommand("correlate", "rank correlation matrix of edge scores");
    correlate->add_option("corpus", c.inputs, "edge list files or directories")->required();
    correlate->add_option("--methods,--method,-m", c.methods, "comma separated tags, 'mod' allowed")
        ->delimiter(',');
    addCommon(correlate, c);
    addScoringParameters(correlate, c);
    correlate->callback([&] { action = runCorrelate; });

    auto* time = app.add_subcommand("time", "wall time of each scoring method");
    time->add_option("corpus", c.inputs, "edge list files or directories")->required();
    time->add_option("--methods,--method,-m", c.methods, "comma separated tags")->delimiter(',');
    time->add_option("--reps", c.repetitions, "repetitions, best one reported")->capture_default_str();
    addCommon(time, c);
    addScoringParameters(time, c);
    time->callback([&] { action = runTime; });

    auto* generate = app.add_subcommand("generate", "write a synthetic graph");
    generate->add_option("--model", c.model, "social, gnm or gnp")->capture_default_str();
    generate->add_option("--nodes,-n", c.nodes, "node count")->capture_default_str();
    generate->add_option("--edges", c.edges, "edge count (gnm)");
    generate->add_option("--p", c.probability, "edge probability (gnp)")->capture_default_str();
    generate->add_option("--groups", c.groups, "planted groups (social)")->capture_default_str();
    generate->add_option("--min-links", c.minLinks, "links per new node, lower bound (social)")
        ->capture_default_str();
    generate->add_option("--max-links", c.maxLinks, "links per new node, upper bound (social)")
        ->capture_default_str();
    generate->add_option("--triad", c.triad, "triad closure probability (social)")->capture_default_str();
    generate->add_option("--mixing", c.mixing, "cross-group attachment probability (social)")
        ->capture_default_str();
    addCommon(generate, c);
    generate->callback([&] { action = runGenerate; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        checkParameters(c);
        applyThreads(c);
        return action(c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
