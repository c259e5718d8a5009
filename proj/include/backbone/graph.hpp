#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "backbone/types.hpp"

namespace backbone {

struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// What Graph::fromEdges dropped while normalizing its input.
struct BuildDiagnostics {
    std::size_t selfLoops = 0;
    std::size_t duplicates = 0;
};

/**
 * Immutable undirected simple graph on nodes 0..n-1.
 *
 * Edges are stored once as canonical pairs (u < v) in lexicographic order; the
 * position of a pair in that list is its edge id. Adjacency is kept in CSR form
 * with neighbors sorted ascending, and every adjacency slot also records the id
 * of the edge it belongs to so scorers can write per-edge results directly.
 *
 * Node labels are an optional sidecar used only for I/O. Equality ignores them.
 */
class Graph {
public:
    Graph() = default;

    /// Normalizes arbitrary endpoint pairs: drops self-loops and duplicates, canonicalizes order.
    static Graph fromEdges(std::size_t n, std::vector<Edge> edges, BuildDiagnostics* diagnostics = nullptr);

    /// Same as fromEdges, but the input is already canonical, sorted and duplicate free.
    static Graph fromCanonicalEdges(std::size_t n, std::vector<Edge> edges);

    std::size_t numberOfNodes() const noexcept { return n_; }
    std::size_t numberOfEdges() const noexcept { return edges_.size(); }

    std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
    std::size_t maxDegree() const noexcept;

    std::span<const NodeId> neighbors(NodeId u) const noexcept {
        return {neighbors_.data() + offsets_[u], degree(u)};
    }
    /// Edge ids aligned with neighbors(u).
    std::span<const EdgeId> incidentEdges(NodeId u) const noexcept {
        return {edgeIds_.data() + offsets_[u], degree(u)};
    }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const noexcept { return edges_[e]; }

    bool hasEdge(NodeId u, NodeId v) const noexcept;
    /// Canonical id of {u, v}, or numberOfEdges() when absent.
    EdgeId edgeId(NodeId u, NodeId v) const noexcept;

    bool hasLabels() const noexcept { return !labels_.empty(); }
    /// Label of u, or its decimal id when the graph carries no labels.
    std::string label(NodeId u) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void setLabels(std::vector<std::string> labels);

    /// Subgraph on the same node set keeping the given edge ids (must be ascending). Labels carry over.
    Graph edgeSubgraph(std::span<const EdgeId> keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> neighbors_;
    std::vector<EdgeId> edgeIds_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

/// Throws std::logic_error when a structural invariant does not hold.
void validate(const Graph& g);

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t maxDegree = 0;
    std::vector<std::size_t> degrees;
};

GraphStats graphStats(const Graph& g);

} // namespace backbone
