#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

/// Assignment of every node to one block; block ids are dense 0..k-1.
class Partition {
public:
    Partition() = default;
    /// Renumbers arbitrary labels densely in order of first appearance.
    static Partition fromLabels(std::span<const std::size_t> labels);
    static Partition singletons(std::size_t n);

    std::size_t numberOfElements() const noexcept { return assignment_.size(); }
    std::size_t numberOfBlocks() const noexcept { return blocks_; }
    std::size_t operator[](NodeId u) const noexcept { return assignment_[u]; }
    const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

    /// Same grouping of nodes, regardless of block numbering.
    bool sameGrouping(const Partition& other) const noexcept { return assignment_ == other.assignment_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::size_t> assignment_;
    std::size_t blocks_ = 0;
};

/// "node block" lines.
void writePartition(std::ostream& out, const Graph& g, const Partition& p);

enum class CentralityKind { degree, pagerank, betweenness };

struct CentralityVector {
    CentralityKind kind = CentralityKind::degree;
    std::vector<double> values;
};

/// "node value" lines.
void writeCentrality(std::ostream& out, const Graph& g, const CentralityVector& c);

Partition connectedComponents(const Graph& g);

/**
 * Exact diameter of the largest connected component (ties go to the component
 * holding the smallest node id), by BFS from each of its nodes. A single node
 * has diameter 0. Throws DomainError for the empty graph.
 */
std::size_t diameterOfLargestComponent(const Graph& g);

/// Mean over all n nodes of 2 tri(v) / (d(v)(d(v)-1)), with nodes of degree < 2 contributing 0.
double averageLocalClustering(const Graph& g);
std::vector<double> localClustering(const Graph& g);

CentralityVector degreeCentrality(const Graph& g);

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-9;
    std::size_t maxIterations = 10000;
};

/// Power iteration with uniform teleport; mass of isolated nodes is spread uniformly.
CentralityVector pageRank(const Graph& g, const PageRankOptions& options = {});

/// Exact Brandes betweenness, unnormalized, each unordered pair counted once.
CentralityVector betweenness(const Graph& g);

/**
 * Deterministic Louvain modularity optimization. The local-move phase visits
 * nodes in ascending id and moves a node to the neighboring community with the
 * largest gain when that gain strictly beats staying; equal gains prefer the
 * smaller community id. Levels are coarsened until a local-move phase makes no
 * move.
 */
Partition louvainCommunities(const Graph& g);

/// Newman modularity of `p` on `g` (0 for an edgeless graph).
double modularity(const Graph& g, const Partition& p);

/// 2 I(a;b) / (H(a) + H(b)) with natural logs; 1 when both entropies vanish.
double normalizedMutualInformation(const Partition& a, const Partition& b);

/// Pearson correlation of average ranks. Throws DomainError for a constant input.
double spearmanRho(std::span<const double> x, std::span<const double> y);
double spearmanRho(const CentralityVector& x, const CentralityVector& y);

/// Average (fractional) ranks, 1-based.
std::vector<double> fractionalRanks(std::span<const double> values);

/// diameter(original) / diameter(sparsified). Throws DomainError when either is undefined or the latter is 0.
double diameterQuotient(const Graph& original, const Graph& sparsified);

} // namespace backbone
