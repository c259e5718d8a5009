#include <cmath>
#include <limits>

#include "backbone/metrics.hpp"
#include "backbone/parallel.hpp"

namespace backbone {

CentralityVector degreeCentrality(const Graph& g) {
    CentralityVector c{CentralityKind::degree, std::vector<double>(g.numberOfNodes())};
    for (NodeId u = 0; u < g.numberOfNodes(); ++u)
        c.values[u] = static_cast<double>(g.degree(u));
    return c;
}

CentralityVector pageRank(const Graph& g, const PageRankOptions& options) {
    const auto n = g.numberOfNodes();
    if (n == 0)
        throw DomainError("PageRank needs at least one node");
    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> rank(n, uniform), next(n), share(n);

    for (std::size_t iteration = 0; iteration < options.maxIterations; ++iteration) {
        double dangling = 0.0;
        for (NodeId u = 0; u < n; ++u) {
            const auto d = g.degree(u);
            if (d == 0)
                dangling += rank[u];
            share[u] = d == 0 ? 0.0 : rank[u] / static_cast<double>(d);
        }
        const double base = (1.0 - options.damping) * uniform + options.damping * dangling * uniform;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t ui = 0; ui < static_cast<std::ptrdiff_t>(n); ++ui) {
            double incoming = 0.0;
            for (NodeId v : g.neighbors(static_cast<NodeId>(ui)))
                incoming += share[v];
            next[ui] = base + options.damping * incoming;
        }
        double change = 0.0;
        for (NodeId u = 0; u < n; ++u)
            change += std::abs(next[u] - rank[u]);
        rank.swap(next);
        if (change < options.tolerance) {
            double total = 0.0;
            for (double x : rank)
                total += x;
            for (double& x : rank)
                x /= total;
            return {CentralityKind::pagerank, std::move(rank)};
        }
    }
    throw NumericError("PageRank did not converge within " + std::to_string(options.maxIterations) + " iterations");
}

namespace {

struct BrandesState {
    explicit BrandesState(std::size_t n)
        : dist(n, std::numeric_limits<std::uint32_t>::max()), paths(n, 0.0), dependency(n, 0.0) {
        order.reserve(n);
    }
    std::vector<std::uint32_t> dist;
    std::vector<double> paths;
    std::vector<double> dependency;
    std::vector<NodeId> order;
};

void accumulateFrom(const Graph& g, NodeId source, std::span<double> acc, BrandesState& s) {
    constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
    s.order.clear();
    s.order.push_back(source);
    s.dist[source] = 0;
    s.paths[source] = 1.0;
    for (std::size_t head = 0; head < s.order.size(); ++head) {
        const NodeId u = s.order[head];
        for (NodeId v : g.neighbors(u)) {
            if (s.dist[v] == kUnreached) {
                s.dist[v] = s.dist[u] + 1;
                s.order.push_back(v);
            }
            if (s.dist[v] == s.dist[u] + 1)
                s.paths[v] += s.paths[u];
        }
    }
    // Predecessors are re-derived from distances instead of being stored.
    for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
        const NodeId w = *it;
        for (NodeId v : g.neighbors(w))
            if (s.dist[v] + 1 == s.dist[w])
                s.dependency[v] += s.paths[v] / s.paths[w] * (1.0 + s.dependency[w]);
        if (w != source)
            acc[w] += s.dependency[w];
    }
    for (NodeId u : s.order) {
        s.dist[u] = kUnreached;
        s.paths[u] = 0.0;
        s.dependency[u] = 0.0;
    }
}

} // namespace

CentralityVector betweenness(const Graph& g) {
    const auto n = g.numberOfNodes();
    auto scores = orderedVectorSum(
        n, n, [n] { return BrandesState(n); },
        [&g](std::size_t source, std::span<double> acc, BrandesState& state) {
            accumulateFrom(g, static_cast<NodeId>(source), acc, state);
        });
    for (double& x : scores)
        x /= 2.0;
    return {CentralityKind::betweenness, std::move(scores)};
}

} // namespace backbone
