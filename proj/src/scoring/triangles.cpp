#include <algorithm>
#include <cstdint>

#include "backbone/scoring.hpp"

namespace backbone {

namespace {

/// Orients every edge towards the endpoint with larger (degree, id).
struct Orientation {
    std::vector<std::size_t> offsets;
    std::vector<NodeId> heads;
    std::vector<EdgeId> ids;
};

Orientation orientByDegree(const Graph& g) {
    const auto n = g.numberOfNodes();
    auto ranksBelow = [&](NodeId a, NodeId b) {
        const auto da = g.degree(a), db = g.degree(b);
        return da < db || (da == db && a < b);
    };
    Orientation out;
    out.offsets.assign(n + 1, 0);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : g.neighbors(u))
            if (ranksBelow(u, v))
                ++out.offsets[u + 1];
    for (std::size_t u = 0; u < n; ++u)
        out.offsets[u + 1] += out.offsets[u];
    out.heads.resize(out.offsets[n]);
    out.ids.resize(out.offsets[n]);
    for (NodeId u = 0; u < n; ++u) {
        auto slot = out.offsets[u];
        auto row = g.neighbors(u);
        auto ids = g.incidentEdges(u);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (ranksBelow(u, row[k])) {
                out.heads[slot] = row[k];
                out.ids[slot++] = ids[k];
            }
        }
    }
    return out;
}

} // namespace

EdgeScores triangleCounts(const Graph& g) {
    const auto n = g.numberOfNodes();
    const Orientation dag = orientByDegree(g);
    std::vector<std::uint64_t> counts(g.numberOfEdges(), 0);

    // Every triangle is found exactly once from its lowest-ranked corner.
#pragma omp parallel
    {
        std::vector<EdgeId> marker(n, kNoEdge);
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t ui = 0; ui < static_cast<std::ptrdiff_t>(n); ++ui) {
            const auto u = static_cast<NodeId>(ui);
            const auto first = dag.offsets[u], last = dag.offsets[u + 1];
            for (auto k = first; k < last; ++k)
                marker[dag.heads[k]] = dag.ids[k];
            for (auto k = first; k < last; ++k) {
                const NodeId v = dag.heads[k];
                const EdgeId uv = dag.ids[k];
                for (auto j = dag.offsets[v]; j < dag.offsets[v + 1]; ++j) {
                    const NodeId w = dag.heads[j];
                    if (marker[w] == kNoEdge)
                        continue;
                    const EdgeId uw = marker[w];
                    const EdgeId vw = dag.ids[j];
#pragma omp atomic
                    ++counts[uv];
#pragma omp atomic
                    ++counts[uw];
#pragma omp atomic
                    ++counts[vw];
                }
            }
            for (auto k = first; k < last; ++k)
                marker[dag.heads[k]] = kNoEdge;
        }
    }

    EdgeScores scores{"tri", std::vector<double>(counts.size())};
    std::transform(counts.begin(), counts.end(), scores.values.begin(),
                   [](std::uint64_t c) { return static_cast<double>(c); });
    return scores;
}

EdgeScores jaccardScores(const Graph& g) { return jaccardScores(g, triangleCounts(g)); }

EdgeScores jaccardScores(const Graph& g, const EdgeScores& triangles) {
    requireAligned(g, triangles);
    EdgeScores scores{"js", std::vector<double>(g.numberOfEdges())};
    for (EdgeId e = 0; e < g.numberOfEdges(); ++e) {
        const auto& [u, v] = g.edge(e);
        const double t = triangles[e];
        scores.values[e] = t / (static_cast<double>(g.degree(u) + g.degree(v)) - t);
    }
    return scores;
}

} // namespace backbone
