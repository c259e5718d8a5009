#include <cmath>
#include <cstdint>

#include "backbone/scoring.hpp"

namespace backbone {

EdgeScores quadrangleCounts(const Graph& g) {
    const auto n = g.numberOfNodes();
    std::vector<std::uint64_t> counts(g.numberOfEdges(), 0);

    // For the edge {u, v} handled at its larger endpoint v, a 4-cycle u-v-y-x-u
    // is fixed by x in N(u)\{v} and y in N(v) ∩ N(x), y != u. With
    // paths[x] = |N(v) ∩ N(x)| (which always contains u) that is
    // sum over x of (paths[x] - 1).
#pragma omp parallel
    {
        std::vector<std::uint32_t> paths(n, 0);
        std::vector<NodeId> touched;
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t vi = 0; vi < static_cast<std::ptrdiff_t>(n); ++vi) {
            const auto v = static_cast<NodeId>(vi);
            auto row = g.neighbors(v);
            if (row.empty() || row.front() > v)
                continue;
            for (NodeId y : row)
                for (NodeId x : g.neighbors(y)) {
                    if (x == v)
                        continue;
                    if (paths[x]++ == 0)
                        touched.push_back(x);
                }
            auto ids = g.incidentEdges(v);
            for (std::size_t k = 0; k < row.size() && row[k] < v; ++k) {
                const NodeId u = row[k];
                std::uint64_t q = 0;
                for (NodeId x : g.neighbors(u))
                    if (x != v)
                        q += paths[x] - 1;
                counts[ids[k]] = q;
            }
            for (NodeId x : touched)
                paths[x] = 0;
            touched.clear();
        }
    }

    EdgeScores scores{"quad", std::vector<double>(counts.size())};
    for (std::size_t e = 0; e < counts.size(); ++e)
        scores.values[e] = static_cast<double>(counts[e]);
    return scores;
}

EdgeScores quadrilateralEmbeddedness(const Graph& g) { return quadrilateralEmbeddedness(g, quadrangleCounts(g)); }

EdgeScores quadrilateralEmbeddedness(const Graph& g, const EdgeScores& quadrangles) {
    requireAligned(g, quadrangles);
    std::vector<double> nodeSum(g.numberOfNodes(), 0.0);
    for (EdgeId e = 0; e < g.numberOfEdges(); ++e) {
        nodeSum[g.edge(e).u] += quadrangles[e];
        nodeSum[g.edge(e).v] += quadrangles[e];
    }
    EdgeScores scores{"qe", std::vector<double>(g.numberOfEdges(), 0.0)};
    for (EdgeId e = 0; e < g.numberOfEdges(); ++e) {
        const double denom = nodeSum[g.edge(e).u] * nodeSum[g.edge(e).v];
        if (denom > 0.0)
            scores.values[e] = quadrangles[e] / std::sqrt(denom);
    }
    return scores;
}

} // namespace backbone
