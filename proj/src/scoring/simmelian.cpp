#include <algorithm>
#include <limits>
#include <numeric>

#include "backbone/scoring.hpp"

namespace backbone {

namespace {

constexpr std::size_t kUnranked = std::numeric_limits<std::size_t>::max();

/// Ranked neighbor lists of every node, laid out with the graph's CSR offsets.
std::vector<NodeId> rankAll(const Graph& g, const EdgeScores& key, std::vector<std::size_t>& offsets) {
    const auto n = g.numberOfNodes();
    offsets.assign(n + 1, 0);
    for (NodeId u = 0; u < n; ++u)
        offsets[u + 1] = offsets[u] + g.degree(u);
    std::vector<NodeId> ranked(offsets[n]);
#pragma omp parallel
    {
        std::vector<std::size_t> order;
#pragma omp for schedule(dynamic, 256)
        for (std::ptrdiff_t ui = 0; ui < static_cast<std::ptrdiff_t>(n); ++ui) {
            const auto u = static_cast<NodeId>(ui);
            const auto row = g.neighbors(u);
            const auto ids = g.incidentEdges(u);
            order.resize(row.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                const double ka = key[ids[a]], kb = key[ids[b]];
                return ka > kb || (ka == kb && a < b);
            });
            for (std::size_t r = 0; r < order.size(); ++r)
                ranked[offsets[u] + r] = row[order[r]];
        }
    }
    return ranked;
}

} // namespace

EdgeScores scoreSimmelian(const Graph& g, SimmelianStrength strength) {
    const EdgeScores key =
        strength == SimmelianStrength::triadic ? triangleCounts(g) : quadrilateralEmbeddedness(g);
    std::vector<std::size_t> offsets;
    const std::vector<NodeId> ranked = rankAll(g, key, offsets);
    const auto n = g.numberOfNodes();

    EdgeScores scores{strength == SimmelianStrength::triadic ? "ts" : "qls",
                      std::vector<double>(g.numberOfEdges(), 0.0)};

#pragma omp parallel
    {
        std::vector<std::size_t> posU(n, kUnranked), posV(n, kUnranked);
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t ui = 0; ui < static_cast<std::ptrdiff_t>(n); ++ui) {
            const auto u = static_cast<NodeId>(ui);
            const std::span<const NodeId> listU(ranked.data() + offsets[u], g.degree(u));
            for (std::size_t r = 0; r < listU.size(); ++r)
                posU[listU[r]] = r;

            const auto row = g.neighbors(u);
            const auto ids = g.incidentEdges(u);
            for (std::size_t k = 0; k < row.size(); ++k) {
                const NodeId v = row[k];
                if (v < u)
                    continue;
                const std::span<const NodeId> listV(ranked.data() + offsets[v], g.degree(v));
                for (std::size_t r = 0; r < listV.size(); ++r)
                    posV[listV[r]] = r;

                const std::size_t du = listU.size(), dv = listV.size();
                std::size_t overlap = 0;
                double best = 0.0;
                for (std::size_t len = 1; len <= std::max(du, dv); ++len) {
                    // Grow u's prefix first and test against v's previous prefix,
                    // then grow v's prefix and test against u's grown prefix, so
                    // a node entering both prefixes at once is counted once.
                    const std::size_t prevV = std::min(len - 1, dv);
                    if (len <= du && posV[listU[len - 1]] < prevV)
                        ++overlap;
                    const std::size_t lenU = std::min(len, du);
                    if (len <= dv && posU[listV[len - 1]] < lenU)
                        ++overlap;
                    const std::size_t lenV = std::min(len, dv);
                    const double jaccard =
                        static_cast<double>(overlap) / static_cast<double>(lenU + lenV - overlap);
                    best = std::max(best, jaccard);
                }
                scores.values[ids[k]] = best;

                for (NodeId x : listV)
                    posV[x] = kUnranked;
            }
            for (NodeId x : listU)
                posU[x] = kUnranked;
        }
    }
    return scores;
}

} // namespace backbone
