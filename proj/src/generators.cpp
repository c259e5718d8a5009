#include "backbone/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace backbone {

Graph erdosRenyi(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph::fromCanonicalEdges(n, std::move(edges));
}

Graph randomGraphWithEdges(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::size_t possible = n < 2 ? 0 : n * (n - 1) / 2;
    m = std::min(m, possible);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeId> pick(0, n == 0 ? 0 : static_cast<NodeId>(n - 1));
    std::unordered_set<std::uint64_t> seen;
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        NodeId u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        if (u > v)
            std::swap(u, v);
        if (seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second)
            edges.push_back({u, v});
    }
    std::sort(edges.begin(), edges.end());
    return Graph::fromCanonicalEdges(n, std::move(edges));
}

Graph socialNetwork(const SocialNetworkParams& params, std::uint64_t seed) {
    const std::size_t n = params.nodes;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<double> groupWeight(std::max<std::size_t>(params.groups, 1));
    for (auto& w : groupWeight)
        w = 0.5 + 1.5 * unit(rng);
    std::discrete_distribution<std::size_t> pickGroup(groupWeight.begin(), groupWeight.end());
    std::uniform_int_distribution<std::size_t> pickLinks(params.minLinks, std::max(params.minLinks, params.maxLinks));

    std::vector<std::size_t> group(n);
    std::vector<std::vector<NodeId>> adjacency(n);
    // Stub lists hold one entry per unit of degree, so uniform picks are degree proportional.
    std::vector<NodeId> globalStubs;
    std::vector<std::vector<NodeId>> groupStubs(groupWeight.size());
    std::vector<Edge> edges;

    auto pickFrom = [&](const std::vector<NodeId>& stubs) {
        return stubs[std::uniform_int_distribution<std::size_t>(0, stubs.size() - 1)(rng)];
    };

    std::vector<NodeId> targets;
    for (NodeId v = 0; v < n; ++v) {
        group[v] = pickGroup(rng);
        const std::size_t wanted = std::min<std::size_t>(pickLinks(rng), v);
        targets.clear();
        auto linked = [&](NodeId x) { return std::find(targets.begin(), targets.end(), x) != targets.end(); };
        NodeId anchor = kNoNode;
        for (std::size_t attempt = 0; targets.size() < wanted && attempt < 20 * wanted + 20; ++attempt) {
            NodeId candidate = kNoNode;
            if (anchor != kNoNode && unit(rng) < params.triadProbability) {
                const auto& around = adjacency[anchor];
                if (!around.empty())
                    candidate = around[std::uniform_int_distribution<std::size_t>(0, around.size() - 1)(rng)];
            } else {
                const auto& local = groupStubs[group[v]];
                if (!local.empty() && unit(rng) >= params.mixing)
                    candidate = pickFrom(local);
                else if (!globalStubs.empty())
                    candidate = pickFrom(globalStubs);
                else
                    candidate = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
                if (candidate != kNoNode && !linked(candidate))
                    anchor = candidate;
            }
            if (candidate == kNoNode || linked(candidate))
                continue;
            targets.push_back(candidate);
        }
        for (NodeId t : targets) {
            adjacency[v].push_back(t);
            adjacency[t].push_back(v);
            edges.push_back({t, v});
            globalStubs.push_back(t);
            globalStubs.push_back(v);
            groupStubs[group[t]].push_back(t);
            groupStubs[group[v]].push_back(v);
        }
    }

    std::vector<NodeId> shuffled(n);
    std::iota(shuffled.begin(), shuffled.end(), NodeId{0});
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& e : edges)
        e = {shuffled[e.u], shuffled[e.v]};
    return Graph::fromEdges(n, std::move(edges));
}

Graph permuteNodes(const Graph& g, std::span<const NodeId> newId) {
    if (newId.size() != g.numberOfNodes())
        throw ContractError("permutation length does not match node count");
    std::vector<Edge> edges;
    edges.reserve(g.numberOfEdges());
    for (const auto& e : g.edges())
        edges.push_back({newId[e.u], newId[e.v]});
    return Graph::fromEdges(g.numberOfNodes(), std::move(edges));
}

} // namespace backbone
