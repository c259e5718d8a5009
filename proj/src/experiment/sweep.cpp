#include <algorithm>
#include <array>
#include <exception>
#include <map>
#include <tuple>

#include "backbone/experiment.hpp"
#include "backbone/sparsifier.hpp"

namespace backbone {

namespace {

constexpr std::array kMeasures{Measure::diameterQuotient,    Measure::ccDeviation,
                               Measure::spearmanDegree,      Measure::spearmanPageRank,
                               Measure::spearmanBetweenness, Measure::nmiCommunities,
                               Measure::nmiComponents,       Measure::communityCountQuotient};

template <class F>
std::optional<double> definedOrEmpty(F&& compute) {
    try {
        return compute();
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

} // namespace

std::string_view measureName(Measure measure) {
    switch (measure) {
    case Measure::diameterQuotient: return "diameter-quotient";
    case Measure::ccDeviation: return "cc-deviation";
    case Measure::spearmanDegree: return "spearman-degree";
    case Measure::spearmanPageRank: return "spearman-pagerank";
    case Measure::spearmanBetweenness: return "spearman-betweenness";
    case Measure::nmiCommunities: return "nmi-communities";
    case Measure::nmiComponents: return "nmi-components";
    case Measure::communityCountQuotient: return "community-count-quotient";
    }
    return "?";
}

std::span<const Measure> allMeasures() { return kMeasures; }

GraphProfile profileGraph(const Graph& g, const PageRankOptions& pageRankOptions) {
    GraphProfile profile;
    try {
        profile.diameter = diameterOfLargestComponent(g);
    } catch (const DomainError&) {
        profile.diameter.reset();
    }
    profile.clustering = averageLocalClustering(g);
    profile.degree = degreeCentrality(g);
    profile.pageRank = pageRank(g, pageRankOptions);
    profile.betweenness = betweenness(g);
    profile.communities = louvainCommunities(g);
    profile.components = connectedComponents(g);
    return profile;
}

std::vector<std::optional<double>> compareProfiles(const GraphProfile& original, const GraphProfile& sparsified) {
    std::vector<std::optional<double>> values;
    values.reserve(kMeasures.size());
    for (Measure measure : kMeasures) {
        switch (measure) {
        case Measure::diameterQuotient:
            if (original.diameter && sparsified.diameter && *sparsified.diameter > 0)
                values.push_back(static_cast<double>(*original.diameter) / static_cast<double>(*sparsified.diameter));
            else
                values.push_back(std::nullopt);
            break;
        case Measure::ccDeviation:
            values.push_back(sparsified.clustering - original.clustering);
            break;
        case Measure::spearmanDegree:
            values.push_back(definedOrEmpty([&] { return spearmanRho(original.degree, sparsified.degree); }));
            break;
        case Measure::spearmanPageRank:
            values.push_back(definedOrEmpty([&] { return spearmanRho(original.pageRank, sparsified.pageRank); }));
            break;
        case Measure::spearmanBetweenness:
            values.push_back(
                definedOrEmpty([&] { return spearmanRho(original.betweenness, sparsified.betweenness); }));
            break;
        case Measure::nmiCommunities:
            values.push_back(normalizedMutualInformation(original.communities, sparsified.communities));
            break;
        case Measure::nmiComponents:
            values.push_back(normalizedMutualInformation(original.components, sparsified.components));
            break;
        case Measure::communityCountQuotient:
            values.push_back(static_cast<double>(original.communities.numberOfBlocks()) /
                             static_cast<double>(sparsified.communities.numberOfBlocks()));
            break;
        }
    }
    return values;
}

std::vector<double> defaultRatios() {
    std::vector<double> ratios;
    for (int k = 1; k <= 20; ++k)
        ratios.push_back(k / 20.0);
    return ratios;
}

std::vector<SweepRecord> runSweep(const NamedGraph& graph, std::span<const Method> methods,
                                  std::span<const double> ratios, const ExperimentOptions& options) {
    if (!std::is_sorted(ratios.begin(), ratios.end()))
        throw ContractError("sweep ratios must be sorted ascending");
    for (double r : ratios)
        if (!(r >= 0.0 && r <= 1.0))
            throw ContractError("sweep ratios must lie in [0, 1]");

    const Graph& g = graph.graph;
    std::vector<SweepRecord> records;
    if (g.numberOfNodes() == 0)
        return records;
    const GraphProfile original = profileGraph(g, options.pageRank);

    for (Method method : methods) {
        const EdgeScores scores = scoreEdges(g, method, options.scoring);
        for (double ratio : ratios) {
            const SparsifiedGraph backbone = filterByRatio(g, scores, ratio);
            const auto values = compareProfiles(original, profileGraph(backbone.graph, options.pageRank));
            for (std::size_t i = 0; i < kMeasures.size(); ++i)
                records.push_back({graph.name, std::string(methodTag(method)), ratio,
                                   std::string(measureName(kMeasures[i])), values[i]});
        }
    }
    return records;
}

std::vector<SweepRecord> runSweep(std::span<const NamedGraph> corpus, std::span<const Method> methods,
                                  std::span<const double> ratios, const ExperimentOptions& options) {
    std::vector<std::vector<SweepRecord>> perGraph(corpus.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(corpus.size()); ++i) {
        try {
            perGraph[i] = runSweep(corpus[i], methods, ratios, options);
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    std::vector<SweepRecord> records;
    for (auto& part : perGraph)
        records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    return records;
}

std::vector<AggregateRow> aggregate(std::span<const SweepRecord> records) {
    std::vector<AggregateRow> rows;
    std::vector<double> sums;
    std::map<std::tuple<std::string, double, std::string>, std::size_t> index;
    auto find = [&](const SweepRecord& r) -> std::size_t {
        auto [it, inserted] = index.try_emplace({r.method, r.ratio, r.measure}, rows.size());
        if (inserted) {
            rows.push_back({r.method, r.ratio, r.measure, std::nullopt, 0, 0});
            sums.push_back(0.0);
        }
        return it->second;
    };
    for (const auto& record : records) {
        const auto i = find(record);
        if (record.value) {
            sums[i] += *record.value;
            ++rows[i].graphs;
        } else {
            ++rows[i].excluded;
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].graphs > 0)
            rows[i].mean = sums[i] / static_cast<double>(rows[i].graphs);
    return rows;
}

} // namespace backbone
