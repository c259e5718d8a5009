#include <algorithm>
#include <limits>

#include "backbone/metrics.hpp"

namespace backbone {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

/// Eccentricity of `source` within its component.
std::uint32_t eccentricity(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
                           std::vector<NodeId>& queue) {
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    std::uint32_t far = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        far = dist[u];
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    for (NodeId u : queue)
        dist[u] = kUnreached;
    return far;
}

} // namespace

std::size_t diameterOfLargestComponent(const Graph& g) {
    const auto n = g.numberOfNodes();
    if (n == 0)
        throw DomainError("diameter of the empty graph is undefined");

    const Partition components = connectedComponents(g);
    std::vector<std::size_t> sizes(components.numberOfBlocks(), 0);
    for (NodeId u = 0; u < n; ++u)
        ++sizes[components[u]];
    // Blocks are numbered by their smallest node, so the first maximum wins ties.
    const auto largest = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    std::vector<NodeId> members;
    for (NodeId u = 0; u < n; ++u)
        if (components[u] == largest)
            members.push_back(u);

    std::uint32_t diameter = 0;
#pragma omp parallel
    {
        std::vector<std::uint32_t> dist(n, kUnreached);
        std::vector<NodeId> queue;
        std::uint32_t local = 0;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(members.size()); ++i)
            local = std::max(local, eccentricity(g, members[static_cast<std::size_t>(i)], dist, queue));
#pragma omp critical
        diameter = std::max(diameter, local);
    }
    return diameter;
}

double diameterQuotient(const Graph& original, const Graph& sparsified) {
    const auto before = diameterOfLargestComponent(original);
    const auto after = diameterOfLargestComponent(sparsified);
    if (after == 0)
        throw DomainError("sparsified graph has diameter 0");
    return static_cast<double>(before) / static_cast<double>(after);
}

} // namespace backbone
