#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/edge_scores.hpp"
#include "backbone/graph.hpp"

namespace backbone {

// Random Edge: independent pseudo-uniform value in [0, 1) per edge, keyed by (seed, u, v).
EdgeScores scoreRandom(const Graph& g, std::uint64_t seed);

/// Number of triangles each edge belongs to.
EdgeScores triangleCounts(const Graph& g);

/// Jaccard overlap of endpoint neighborhoods, T(u,v) / (d(u) + d(v) - T(u,v)).
EdgeScores jaccardScores(const Graph& g);
EdgeScores jaccardScores(const Graph& g, const EdgeScores& triangles);

/**
 * Local Similarity. Each node ranks its incident edges by Jaccard value; an
 * edge at 0-based rank r survives the local keep rule top-floor(d^alpha) once
 * alpha >= log(r+1)/log(d). The score is 1 minus the smaller of the two
 * endpoint thresholds, so global filtering at 1 - alpha reproduces the rule.
 */
EdgeScores scoreLocalSimilarity(const Graph& g);

/// Local Degree. Same rank-to-score mapping as Local Similarity, ranking neighbors by their degree.
EdgeScores scoreLocalDegree(const Graph& g);

/// Number of distinct 4-cycles through each edge.
EdgeScores quadrangleCounts(const Graph& g);

/// q(u,v) / sqrt(q(u) q(v)), with q(u) the quadrangle sum over u's edges; 0 when either sum is 0.
EdgeScores quadrilateralEmbeddedness(const Graph& g);
EdgeScores quadrilateralEmbeddedness(const Graph& g, const EdgeScores& quadrangles);

/// A node's neighbors sorted by a per-edge strength key, descending, ties by ascending id.
struct RankedNeighborhood {
    NodeId owner = 0;
    std::vector<NodeId> neighbors;
};

RankedNeighborhood rankNeighborhood(const Graph& g, NodeId owner, std::span<const double> edgeKey);

enum class SimmelianStrength { triadic, quadrilateral };

/**
 * Non-parametric Simmelian backbone score: the best Jaccard overlap between
 * equally long prefixes of the two endpoints' ranked neighborhoods, taken over
 * every prefix length 1..max(d(u), d(v)). A prefix longer than a list is the
 * whole list.
 */
EdgeScores scoreSimmelian(const Graph& g, SimmelianStrength strength);

struct FireParams {
    double spreadProbability = 0.95;
    double targetVisitRatio = 5.0;
    std::uint64_t seed = 1;

    void validate() const;
};

/**
 * Edge Forest Fire. Fires start at uniformly random nodes; every burning node
 * spreads to Geometric(1 - p) many of its unburned neighbors, chosen uniformly
 * without replacement. Each traversal counts one visit for the edge. Fires
 * keep starting until the total visit count reaches targetVisitRatio * m.
 */
EdgeScores scoreEdgeForestFire(const Graph& g, const FireParams& params);

enum class Method {
    randomEdge,
    triangles,
    jaccard,
    localSimilarity,
    localDegree,
    triadicSimmelian,
    quadrilateralSimmelian,
    edgeForestFire,
};

/// Short tags used on the command line and in output files: re, tri, js, ls, ld, ts, qls, eff.
std::string_view methodTag(Method method);
std::optional<Method> parseMethod(std::string_view tag);
std::span<const Method> allMethods();
/// The sparsification methods compared in sweeps: re, tri, ls, ld, ts, qls, eff.
std::span<const Method> sweepMethods();
bool isRandomized(Method method);

struct ScoringOptions {
    std::uint64_t seed = 1;
    double fireSpreadProbability = 0.95;
    double fireTargetVisitRatio = 5.0;
};

EdgeScores scoreEdges(const Graph& g, Method method, const ScoringOptions& options = {});

} // namespace backbone
