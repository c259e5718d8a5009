#include "backbone/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace backbone {

Graph Graph::fromEdges(std::size_t n, std::vector<Edge> edges, BuildDiagnostics* diagnostics) {
    BuildDiagnostics diag;
    std::erase_if(edges, [&](const Edge& e) {
        if (e.u == e.v) {
            ++diag.selfLoops;
            return true;
        }
        return false;
    });
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw ContractError("edge endpoint out of range");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    diag.duplicates = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    if (diagnostics)
        *diagnostics = diag;
    return fromCanonicalEdges(n, std::move(edges));
}

Graph Graph::fromCanonicalEdges(std::size_t n, std::vector<Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.offsets_.assign(n + 1, 0);
    for (const auto& e : g.edges_) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t u = 0; u < n; ++u)
        g.offsets_[u + 1] += g.offsets_[u];

    g.neighbors_.resize(2 * g.edges_.size());
    g.edgeIds_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Lexicographic edge order fills each row in ascending neighbor order: for
    // node w, neighbors u < w arrive as (u, w) sorted by u, and they all precede
    // the pairs (w, v) with v > w, which are sorted by v.
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const auto [u, v] = g.edges_[id];
        g.neighbors_[cursor[u]] = v;
        g.edgeIds_[cursor[u]++] = id;
        g.neighbors_[cursor[v]] = u;
        g.edgeIds_[cursor[v]++] = id;
    }
    return g;
}

std::size_t Graph::maxDegree() const noexcept {
    std::size_t best = 0;
    for (NodeId u = 0; u < n_; ++u)
        best = std::max(best, degree(u));
    return best;
}

bool Graph::hasEdge(NodeId u, NodeId v) const noexcept { return edgeId(u, v) != numberOfEdges(); }

EdgeId Graph::edgeId(NodeId u, NodeId v) const noexcept {
    if (u >= n_ || v >= n_)
        return static_cast<EdgeId>(numberOfEdges());
    auto row = neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v)
        return static_cast<EdgeId>(numberOfEdges());
    return incidentEdges(u)[static_cast<std::size_t>(it - row.begin())];
}

std::string Graph::label(NodeId u) const { return labels_.empty() ? std::to_string(u) : labels_[u]; }

void Graph::setLabels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
        throw ContractError("label count does not match node count");
    labels_ = std::move(labels);
}

Graph Graph::edgeSubgraph(std::span<const EdgeId> keep) const {
    std::vector<Edge> kept;
    kept.reserve(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= edges_.size() || (i > 0 && keep[i] <= keep[i - 1]))
            throw ContractError("edge subgraph ids must be ascending and in range");
        kept.push_back(edges_[keep[i]]);
    }
    Graph sub = fromCanonicalEdges(n_, std::move(kept));
    sub.labels_ = labels_;
    return sub;
}

void validate(const Graph& g) {
    const auto n = g.numberOfNodes();
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u >= edges[i].v || edges[i].v >= n)
            throw std::logic_error("edge " + std::to_string(i) + " is not canonical");
        if (i > 0 && !(edges[i - 1] < edges[i]))
            throw std::logic_error("edge list is not strictly increasing at " + std::to_string(i));
    }
    std::size_t degreeSum = 0;
    for (NodeId u = 0; u < n; ++u) {
        auto row = g.neighbors(u);
        auto ids = g.incidentEdges(u);
        degreeSum += row.size();
        for (std::size_t k = 0; k < row.size(); ++k) {
            const NodeId v = row[k];
            if (v == u)
                throw std::logic_error("self-loop at node " + std::to_string(u));
            if (k > 0 && row[k - 1] >= v)
                throw std::logic_error("adjacency of node " + std::to_string(u) + " not strictly sorted");
            const Edge& e = g.edge(ids[k]);
            if (e != Edge{std::min(u, v), std::max(u, v)})
                throw std::logic_error("adjacency slot points at the wrong edge id");
            auto back = g.neighbors(v);
            if (!std::binary_search(back.begin(), back.end(), u))
                throw std::logic_error("adjacency not symmetric for edge " + std::to_string(u) + "-" +
                                       std::to_string(v));
        }
    }
    if (degreeSum != 2 * g.numberOfEdges())
        throw std::logic_error("degree sum differs from 2m");
}

GraphStats graphStats(const Graph& g) {
    GraphStats stats;
    stats.n = g.numberOfNodes();
    stats.m = g.numberOfEdges();
    stats.degrees.resize(stats.n);
    for (NodeId u = 0; u < stats.n; ++u) {
        stats.degrees[u] = g.degree(u);
        stats.maxDegree = std::max(stats.maxDegree, stats.degrees[u]);
    }
    return stats;
}

} // namespace backbone
