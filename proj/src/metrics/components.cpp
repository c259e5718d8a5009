#include <queue>

#include "backbone/metrics.hpp"

namespace backbone {

Partition connectedComponents(const Graph& g) {
    const auto n = g.numberOfNodes();
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block(n, kUnseen);
    std::size_t next = 0;
    std::queue<NodeId> pending;
    for (NodeId s = 0; s < n; ++s) {
        if (block[s] != kUnseen)
            continue;
        block[s] = next;
        pending.push(s);
        while (!pending.empty()) {
            const NodeId u = pending.front();
            pending.pop();
            for (NodeId v : g.neighbors(u)) {
                if (block[v] == kUnseen) {
                    block[v] = next;
                    pending.push(v);
                }
            }
        }
        ++next;
    }
    return Partition::fromLabels(block);
}

} // namespace backbone
