#include <algorithm>
#include <cmath>
#include <numeric>

#include "backbone/scoring.hpp"

namespace backbone {

namespace {

/// Sorts adjacency positions of `owner` by key descending, ties by ascending neighbor id.
template <class KeyOf>
void rankSlots(const Graph& g, NodeId owner, KeyOf keyOf, std::vector<std::size_t>& order) {
    const auto row = g.neighbors(owner);
    order.resize(row.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Neighbors are stored ascending, so slot order is id order.
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = keyOf(a), kb = keyOf(b);
        return ka > kb || (ka == kb && a < b);
    });
}

/**
 * 1 - alpha for the smallest alpha with floor(d^alpha) >= rank + 1.
 *
 * That alpha is log(rank+1)/log(d). Long double keeps the quotient accurate
 * enough that the rounded double equals the correctly rounded real value, so
 * exact boundaries such as d = 4, rank 1 (alpha = 1/2) land on the same double
 * as the threshold 1/2.
 */
double keepScore(std::size_t rank, std::size_t degree) {
    if (rank == 0)
        return 1.0;
    const long double logDegree = std::log(static_cast<long double>(degree));
    const long double logRank = std::log(static_cast<long double>(rank + 1));
    return static_cast<double>((logDegree - logRank) / logDegree);
}

template <class KeyOf>
EdgeScores localRankScores(const Graph& g, std::string tag, KeyOf keyOf) {
    const auto m = g.numberOfEdges();
    std::vector<double> fromLower(m, 0.0), fromUpper(m, 0.0);
    const auto n = static_cast<std::ptrdiff_t>(g.numberOfNodes());

#pragma omp parallel
    {
        std::vector<std::size_t> order;
#pragma omp for schedule(dynamic, 256)
        for (std::ptrdiff_t ui = 0; ui < n; ++ui) {
            const auto u = static_cast<NodeId>(ui);
            rankSlots(g, u, [&](std::size_t slot) { return keyOf(u, slot); }, order);
            const auto row = g.neighbors(u);
            const auto ids = g.incidentEdges(u);
            for (std::size_t rank = 0; rank < order.size(); ++rank) {
                const auto slot = order[rank];
                auto& side = u < row[slot] ? fromLower : fromUpper;
                side[ids[slot]] = keepScore(rank, row.size());
            }
        }
    }

    EdgeScores scores{std::move(tag), std::vector<double>(m)};
    for (EdgeId e = 0; e < m; ++e)
        scores.values[e] = std::max(fromLower[e], fromUpper[e]);
    return scores;
}

} // namespace

EdgeScores scoreLocalSimilarity(const Graph& g) {
    const EdgeScores jaccard = jaccardScores(g);
    return localRankScores(g, "ls", [&](NodeId u, std::size_t slot) { return jaccard[g.incidentEdges(u)[slot]]; });
}

EdgeScores scoreLocalDegree(const Graph& g) {
    return localRankScores(g, "ld", [&](NodeId u, std::size_t slot) { return g.degree(g.neighbors(u)[slot]); });
}

RankedNeighborhood rankNeighborhood(const Graph& g, NodeId owner, std::span<const double> edgeKey) {
    if (edgeKey.size() != g.numberOfEdges())
        throw ContractError("edge key length does not match the graph");
    std::vector<std::size_t> order;
    const auto ids = g.incidentEdges(owner);
    rankSlots(g, owner, [&](std::size_t slot) { return edgeKey[ids[slot]]; }, order);
    RankedNeighborhood ranked{owner, {}};
    ranked.neighbors.reserve(order.size());
    for (auto slot : order)
        ranked.neighbors.push_back(g.neighbors(owner)[slot]);
    return ranked;
}

} // namespace backbone
