#pragma once

#include <cstdint>
#include <span>

#include "backbone/graph.hpp"

namespace backbone {

/// G(n, p) random graph.
Graph erdosRenyi(std::size_t n, double p, std::uint64_t seed);

/// Random graph with exactly min(m, n(n-1)/2) distinct edges.
Graph randomGraphWithEdges(std::size_t n, std::size_t m, std::uint64_t seed);

/**
 * Growing friendship-network model: preferential attachment with triad
 * formation (Holme-Kim) inside planted groups. Produces heavy-tailed degrees,
 * high clustering and community structure, loosely resembling campus social
 * networks. Node ids are shuffled so they carry no age information.
 */
struct SocialNetworkParams {
    std::size_t nodes = 2000;
    std::size_t groups = 20;
    std::size_t minLinks = 4;       ///< links created by each arriving node, lower bound
    std::size_t maxLinks = 20;      ///< upper bound
    double triadProbability = 0.6;  ///< chance a further link closes a triangle
    double mixing = 0.15;           ///< chance an attachment ignores group membership
};

Graph socialNetwork(const SocialNetworkParams& params, std::uint64_t seed);

/// Relabels node u as newId[u]; newId must be a permutation of 0..n-1.
Graph permuteNodes(const Graph& g, std::span<const NodeId> newId);

} // namespace backbone
