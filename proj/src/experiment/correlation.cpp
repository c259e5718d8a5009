#include <exception>

#include "backbone/experiment.hpp"
#include "backbone/format.hpp"

namespace backbone {

EdgeScores modIndicator(const Graph& g) {
    const Partition communities = louvainCommunities(g);
    EdgeScores scores{"mod", std::vector<double>(g.numberOfEdges())};
    for (EdgeId e = 0; e < g.numberOfEdges(); ++e)
        scores.values[e] = communities[g.edge(e).u] == communities[g.edge(e).v] ? 1.0 : 0.0;
    return scores;
}

EdgeScores scoreByLabel(const Graph& g, std::string_view label, const ScoringOptions& options) {
    if (label == "mod")
        return modIndicator(g);
    const auto method = parseMethod(label);
    if (!method)
        throw ContractError("unknown score label '" + std::string(label) + "'");
    return scoreEdges(g, *method, options);
}

CorrelationMatrix scoreCorrelationMatrix(std::span<const NamedGraph> corpus, std::span<const std::string> labels,
                                         const ScoringOptions& options) {
    if (corpus.empty())
        throw ContractError("correlation matrix needs at least one graph");
    const auto k = labels.size();
    for (const auto& label : labels)
        if (label != "mod" && !parseMethod(label))
            throw ContractError("unknown score label '" + label + "'");

    struct GraphResult {
        std::vector<std::vector<std::optional<double>>> rho;
        std::vector<std::string> notes;
    };
    std::vector<GraphResult> perGraph(corpus.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t gi = 0; gi < static_cast<std::ptrdiff_t>(corpus.size()); ++gi) {
        try {
            const auto& named = corpus[static_cast<std::size_t>(gi)];
            std::vector<EdgeScores> scores;
            for (const auto& label : labels)
                scores.push_back(scoreByLabel(named.graph, label, options));
            auto& result = perGraph[static_cast<std::size_t>(gi)];
            result.rho.assign(k, std::vector<std::optional<double>>(k));
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = a + 1; b < k; ++b) {
                    try {
                        result.rho[a][b] = spearmanRho(scores[a].values, scores[b].values);
                    } catch (const DomainError&) {
                        result.notes.push_back(named.name + ": " + labels[a] + " vs " + labels[b] +
                                               " undefined (constant or too short score vector), excluded");
                    }
                }
            }
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    CorrelationMatrix matrix;
    matrix.labels.assign(labels.begin(), labels.end());
    matrix.cells.assign(k, std::vector<std::optional<double>>(k));
    matrix.samples.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
        matrix.cells[a][a] = 1.0;
        matrix.samples[a][a] = corpus.size();
        for (std::size_t b = a + 1; b < k; ++b) {
            double sum = 0.0;
            std::size_t count = 0;
            for (const auto& result : perGraph)
                if (result.rho[a][b]) {
                    sum += *result.rho[a][b];
                    ++count;
                }
            if (count > 0)
                matrix.cells[a][b] = matrix.cells[b][a] = sum / static_cast<double>(count);
            matrix.samples[a][b] = matrix.samples[b][a] = count;
        }
    }
    for (auto& result : perGraph)
        matrix.diagnostics.insert(matrix.diagnostics.end(), result.notes.begin(), result.notes.end());
    return matrix;
}

} // namespace backbone
