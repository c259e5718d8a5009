#include <limits>
#include <ostream>
#include <unordered_map>

#include "backbone/format.hpp"
#include "backbone/metrics.hpp"

namespace backbone {

Partition Partition::fromLabels(std::span<const std::size_t> labels) {
    Partition p;
    p.assignment_.resize(labels.size());
    std::unordered_map<std::size_t, std::size_t> dense;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = dense.try_emplace(labels[i], dense.size());
        p.assignment_[i] = it->second;
    }
    p.blocks_ = dense.size();
    return p;
}

Partition Partition::singletons(std::size_t n) {
    Partition p;
    p.assignment_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        p.assignment_[i] = i;
    p.blocks_ = n;
    return p;
}

void writePartition(std::ostream& out, const Graph& g, const Partition& p) {
    for (NodeId u = 0; u < p.numberOfElements(); ++u)
        out << g.label(u) << ' ' << p[u] << '\n';
}

void writeCentrality(std::ostream& out, const Graph& g, const CentralityVector& c) {
    for (NodeId u = 0; u < c.values.size(); ++u)
        out << g.label(u) << ' ' << formatNumber(c.values[u]) << '\n';
}

} // namespace backbone
