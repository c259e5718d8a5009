#include "backbone/sparsifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace backbone {

namespace {

SparsifiedGraph assemble(const Graph& g, const EdgeScores& scores, std::vector<EdgeId> kept, double requested) {
    std::sort(kept.begin(), kept.end());
    SparsifiedGraph result;
    result.graph = g.edgeSubgraph(kept);
    result.keptRatio = g.numberOfEdges() == 0
                           ? 1.0
                           : static_cast<double>(kept.size()) / static_cast<double>(g.numberOfEdges());
    result.keptEdges = std::move(kept);
    result.method = scores.method;
    result.requestedRatio = requested;
    return result;
}

} // namespace

std::size_t targetEdgeCount(std::size_t m, double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw ContractError("sparsification ratio must lie in [0, 1]");
    return std::min(m, static_cast<std::size_t>(std::llround(ratio * static_cast<double>(m))));
}

SparsifiedGraph filterByRatio(const Graph& g, const EdgeScores& scores, double ratio) {
    requireAligned(g, scores);
    const std::size_t keep = targetEdgeCount(g.numberOfEdges(), ratio);
    std::vector<EdgeId> order(g.numberOfEdges());
    std::iota(order.begin(), order.end(), EdgeId{0});
    auto ahead = [&](EdgeId a, EdgeId b) { return scores[a] > scores[b] || (scores[a] == scores[b] && a < b); };
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(), ahead);
    order.resize(keep);
    return assemble(g, scores, std::move(order), ratio);
}

SparsifiedGraph filterByThreshold(const Graph& g, const EdgeScores& scores, double threshold) {
    requireAligned(g, scores);
    std::vector<EdgeId> kept;
    for (EdgeId e = 0; e < g.numberOfEdges(); ++e)
        if (scores[e] >= threshold)
            kept.push_back(e);
    const double ratio = g.numberOfEdges() == 0
                             ? 1.0
                             : static_cast<double>(kept.size()) / static_cast<double>(g.numberOfEdges());
    return assemble(g, scores, std::move(kept), ratio);
}

} // namespace backbone
