#include "backbone/random.hpp"
#include "backbone/scoring.hpp"

namespace backbone {

EdgeScores scoreRandom(const Graph& g, std::uint64_t seed) {
    const auto edges = g.edges();
    EdgeScores scores{"re", std::vector<double>(edges.size())};
    const auto m = static_cast<std::ptrdiff_t>(edges.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t e = 0; e < m; ++e) {
        const auto& [u, v] = edges[e];
        const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
        scores.values[e] = toUnitInterval(streamValue(seed, key));
    }
    return scores;
}

} // namespace backbone
