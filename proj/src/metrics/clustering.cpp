#include "backbone/metrics.hpp"
#include "backbone/scoring.hpp"

namespace backbone {

std::vector<double> localClustering(const Graph& g) {
    const auto n = g.numberOfNodes();
    const EdgeScores triangles = triangleCounts(g);
    // Each triangle at v shows up on two of v's edges.
    std::vector<double> twiceTriangles(n, 0.0);
    for (EdgeId e = 0; e < g.numberOfEdges(); ++e) {
        twiceTriangles[g.edge(e).u] += triangles[e];
        twiceTriangles[g.edge(e).v] += triangles[e];
    }
    std::vector<double> coefficient(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        const auto d = static_cast<double>(g.degree(v));
        if (d >= 2)
            coefficient[v] = twiceTriangles[v] / (d * (d - 1.0));
    }
    return coefficient;
}

double averageLocalClustering(const Graph& g) {
    if (g.numberOfNodes() == 0)
        throw DomainError("average clustering of the empty graph is undefined");
    double sum = 0.0;
    for (double c : localClustering(g))
        sum += c;
    return sum / static_cast<double>(g.numberOfNodes());
}

} // namespace backbone
