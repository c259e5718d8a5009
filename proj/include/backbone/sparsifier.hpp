#pragma once

#include <string>
#include <vector>

#include "backbone/edge_scores.hpp"
#include "backbone/graph.hpp"

namespace backbone {

/// A backbone: same nodes as the original, a subset of its edges.
struct SparsifiedGraph {
    Graph graph;
    std::vector<EdgeId> keptEdges;  ///< ids in the original graph, ascending
    double keptRatio = 0.0;         ///< m' / m (1 for an edgeless original)
    std::string method;
    double requestedRatio = 0.0;
};

/// Number of edges kept at `ratio`: round(ratio * m).
std::size_t targetEdgeCount(std::size_t m, double ratio);

/**
 * Keeps the round(ratio * m) highest scoring edges, ties broken by ascending
 * edge id. Because this is a fixed total order, backbones at growing ratios
 * are nested.
 */
SparsifiedGraph filterByRatio(const Graph& g, const EdgeScores& scores, double ratio);

/// Keeps every edge whose score is >= threshold.
SparsifiedGraph filterByThreshold(const Graph& g, const EdgeScores& scores, double threshold);

} // namespace backbone
