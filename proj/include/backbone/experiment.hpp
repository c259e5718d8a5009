#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/graph.hpp"
#include "backbone/metrics.hpp"
#include "backbone/scoring.hpp"

namespace backbone {

struct NamedGraph {
    std::string name;
    Graph graph;
};

enum class Measure {
    diameterQuotient,
    ccDeviation,
    spearmanDegree,
    spearmanPageRank,
    spearmanBetweenness,
    nmiCommunities,
    nmiComponents,
    communityCountQuotient,
};

std::string_view measureName(Measure measure);
std::span<const Measure> allMeasures();

/// One cell of the evaluation table. An empty value marks an undefined measure.
struct SweepRecord {
    std::string graph;
    std::string method;
    double ratio = 0.0;
    std::string measure;
    std::optional<double> value;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct ExperimentOptions {
    ScoringOptions scoring;
    PageRankOptions pageRank;
};

/// Every property of one graph that the measure catalog compares.
struct GraphProfile {
    std::optional<std::size_t> diameter;
    double clustering = 0.0;
    CentralityVector degree;
    CentralityVector pageRank;
    CentralityVector betweenness;
    Partition communities;
    Partition components;
};

GraphProfile profileGraph(const Graph& g, const PageRankOptions& pageRank = {});

/// The full measure catalog for one original/sparsified pair, in catalog order.
std::vector<std::optional<double>> compareProfiles(const GraphProfile& original, const GraphProfile& sparsified);

/// Default ratio grid 0.05, 0.10, ..., 1.00.
std::vector<double> defaultRatios();

/**
 * Scores `g` once per method and evaluates the backbone at every ratio
 * (ascending). Emits methods x ratios x measures records in that nesting order.
 */
std::vector<SweepRecord> runSweep(const NamedGraph& graph, std::span<const Method> methods,
                                  std::span<const double> ratios, const ExperimentOptions& options = {});

/// Sweeps every graph of a corpus; graphs run in parallel, output keeps corpus order.
std::vector<SweepRecord> runSweep(std::span<const NamedGraph> corpus, std::span<const Method> methods,
                                  std::span<const double> ratios, const ExperimentOptions& options = {});

/// 1 for edges inside a Louvain community, 0 for edges between communities.
EdgeScores modIndicator(const Graph& g);

/// Score vector for a method tag or "mod".
EdgeScores scoreByLabel(const Graph& g, std::string_view label, const ScoringOptions& options);

struct CorrelationMatrix {
    std::vector<std::string> labels;
    /// Mean Spearman rho per label pair; empty when no graph gave a defined value.
    std::vector<std::vector<std::optional<double>>> cells;
    /// Number of graphs averaged into each cell.
    std::vector<std::vector<std::size_t>> samples;
    std::vector<std::string> diagnostics;
};

/// Edge-score rank correlations per graph, averaged over the corpus. Labels are method tags or "mod".
CorrelationMatrix scoreCorrelationMatrix(std::span<const NamedGraph> corpus, std::span<const std::string> labels,
                                         const ScoringOptions& options = {});

struct AggregateRow {
    std::string method;
    double ratio = 0.0;
    std::string measure;
    std::optional<double> mean;
    std::size_t graphs = 0;    ///< defined values averaged
    std::size_t excluded = 0;  ///< undefined values skipped
};

/// Mean per (method, ratio, measure) over graphs, in first-seen order.
std::vector<AggregateRow> aggregate(std::span<const SweepRecord> records);

struct TimingRow {
    std::string graph;
    std::string method;
    double seconds = 0.0;
};

/// Wall time of the scoring stage only, single threaded, best of `repetitions`.
std::vector<TimingRow> timeMethods(std::span<const NamedGraph> corpus, std::span<const Method> methods,
                                   const ScoringOptions& options = {}, int repetitions = 3);

void writeRecordsCsv(std::ostream& out, std::span<const SweepRecord> records);
void writeRecordsJson(std::ostream& out, std::span<const SweepRecord> records);
void writeAggregateCsv(std::ostream& out, std::span<const AggregateRow> rows);
void writeCorrelationCsv(std::ostream& out, const CorrelationMatrix& matrix);
void writeTimingCsv(std::ostream& out, std::span<const TimingRow> rows);

} // namespace backbone
