#include <cmath>
#include <queue>
#include <random>

#include "backbone/scoring.hpp"

namespace backbone {

void FireParams::validate() const {
    if (!(spreadProbability > 0.0 && spreadProbability < 1.0))
        throw ContractError("forest fire spread probability must lie strictly inside (0, 1)");
    if (!(targetVisitRatio > 0.0) || !std::isfinite(targetVisitRatio))
        throw ContractError("forest fire target visit ratio must be positive");
}

EdgeScores scoreEdgeForestFire(const Graph& g, const FireParams& params) {
    params.validate();
    const auto n = g.numberOfNodes();
    const auto m = g.numberOfEdges();
    EdgeScores scores{"eff", std::vector<double>(m, 0.0)};
    if (m == 0)
        return scores;

    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<NodeId> pickStart(0, static_cast<NodeId>(n - 1));
    std::geometric_distribution<std::size_t> spread(1.0 - params.spreadProbability);

    std::vector<std::uint64_t> visits(m, 0);
    std::vector<char> burned(n, 0);
    std::vector<NodeId> burnedList;
    std::vector<std::size_t> candidates;
    std::queue<NodeId> front;

    const double target = params.targetVisitRatio * static_cast<double>(m);
    std::uint64_t total = 0;
    while (static_cast<double>(total) < target) {
        const NodeId start = pickStart(rng);
        burned[start] = 1;
        burnedList.push_back(start);
        front.push(start);
        while (!front.empty()) {
            const NodeId w = front.front();
            front.pop();
            const std::size_t wanted = spread(rng);
            const auto row = g.neighbors(w);
            candidates.clear();
            for (std::size_t k = 0; k < row.size(); ++k)
                if (!burned[row[k]])
                    candidates.push_back(k);
            const std::size_t take = std::min(wanted, candidates.size());
            for (std::size_t i = 0; i < take; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
                std::swap(candidates[i], candidates[pick(rng)]);
                const std::size_t slot = candidates[i];
                const NodeId x = row[slot];
                ++visits[g.incidentEdges(w)[slot]];
                ++total;
                burned[x] = 1;
                burnedList.push_back(x);
                front.push(x);
            }
        }
        for (NodeId x : burnedList)
            burned[x] = 0;
        burnedList.clear();
    }

    for (EdgeId e = 0; e < m; ++e)
        scores.values[e] = static_cast<double>(visits[e]);
    return scores;
}

} // namespace backbone
