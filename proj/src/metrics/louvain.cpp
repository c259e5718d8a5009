#include <algorithm>
#include <cstdint>
#include <tuple>

#include "backbone/metrics.hpp"

namespace backbone {

namespace {

using Weight = std::int64_t;

/// Weighted graph of one Louvain level; every undirected link is listed at both ends.
struct LevelGraph {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> targets;
    std::vector<Weight> weights;
    std::vector<Weight> selfLoops;  ///< weight of edges collapsed into the node
    std::vector<Weight> strength;   ///< weighted degree, self-loops counted twice
    Weight totalStrength = 0;       ///< 2m

    std::size_t size() const { return selfLoops.size(); }
};

LevelGraph fromGraph(const Graph& g) {
    LevelGraph level;
    const auto n = g.numberOfNodes();
    level.offsets.assign(n + 1, 0);
    level.selfLoops.assign(n, 0);
    level.strength.assign(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        level.offsets[u + 1] = level.offsets[u] + g.degree(u);
        for (NodeId v : g.neighbors(u)) {
            level.targets.push_back(v);
            level.weights.push_back(1);
        }
        level.strength[u] = static_cast<Weight>(g.degree(u));
        level.totalStrength += level.strength[u];
    }
    return level;
}

/// One local-move phase. Returns true when at least one node changed community.
bool moveNodes(const LevelGraph& level, std::vector<std::size_t>& community) {
    const auto n = level.size();
    std::vector<Weight> total(level.strength);
    std::vector<Weight> linkWeight(n, 0);
    std::vector<std::size_t> touched;
    const Weight twoM = level.totalStrength;
    bool anyMove = false;

    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            const Weight k = level.strength[i];
            if (k == 0)
                continue;
            const std::size_t current = community[i];
            for (auto a = level.offsets[i]; a < level.offsets[i + 1]; ++a) {
                const auto c = community[level.targets[a]];
                if (linkWeight[c] == 0)
                    touched.push_back(c);
                linkWeight[c] += level.weights[a];
            }
            total[current] -= k;
            // Modularity gain of joining c, scaled by 2m^2 and shifted by a
            // constant shared by all candidates: 2m * k_{i,c} - tot_c * k_i.
            auto gain = [&](std::size_t c) { return twoM * linkWeight[c] - total[c] * k; };
            const Weight stay = gain(current);
            std::size_t best = current;
            Weight bestGain = stay;
            for (auto c : touched) {
                if (c == current)
                    continue;
                const Weight value = gain(c);
                if (value > bestGain || (value == bestGain && best != current && c < best)) {
                    best = c;
                    bestGain = value;
                }
            }
            if (best != current && bestGain <= stay)
                best = current;
            total[best] += k;
            if (best != current) {
                community[i] = best;
                moved = true;
                anyMove = true;
            }
            for (auto c : touched)
                linkWeight[c] = 0;
            touched.clear();
        }
    }
    return anyMove;
}

/// Renumbers communities by first appearance and returns the coarsened level.
LevelGraph coarsen(const LevelGraph& level, std::vector<std::size_t>& community) {
    const auto n = level.size();
    std::vector<std::size_t> dense(n, static_cast<std::size_t>(-1));
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto& d = dense[community[i]];
        if (d == static_cast<std::size_t>(-1))
            d = count++;
        community[i] = d;
    }

    LevelGraph coarse;
    coarse.selfLoops.assign(count, 0);
    coarse.strength.assign(count, 0);
    coarse.totalStrength = level.totalStrength;
    std::vector<std::tuple<std::size_t, std::size_t, Weight>> links;
    for (std::size_t i = 0; i < n; ++i) {
        const auto ci = community[i];
        coarse.selfLoops[ci] += level.selfLoops[i];
        coarse.strength[ci] += level.strength[i];
        for (auto a = level.offsets[i]; a < level.offsets[i + 1]; ++a) {
            const auto j = level.targets[a];
            const auto cj = community[j];
            if (ci == cj) {
                if (i < j)
                    coarse.selfLoops[ci] += level.weights[a];
            } else {
                links.emplace_back(ci, cj, level.weights[a]);
            }
        }
    }
    std::sort(links.begin(), links.end());
    coarse.offsets.assign(count + 1, 0);
    for (std::size_t a = 0; a < links.size(); ++a) {
        const auto [ci, cj, w] = links[a];
        if (a > 0 && std::get<0>(links[a - 1]) == ci && std::get<1>(links[a - 1]) == cj) {
            coarse.weights.back() += w;
            continue;
        }
        coarse.targets.push_back(cj);
        coarse.weights.push_back(w);
        ++coarse.offsets[ci + 1];
    }
    for (std::size_t c = 0; c < count; ++c)
        coarse.offsets[c + 1] += coarse.offsets[c];
    return coarse;
}

} // namespace

Partition louvainCommunities(const Graph& g) {
    const auto n = g.numberOfNodes();
    if (g.numberOfEdges() == 0)
        return Partition::singletons(n);

    std::vector<std::size_t> membership(n);
    for (std::size_t u = 0; u < n; ++u)
        membership[u] = u;

    LevelGraph level = fromGraph(g);
    while (true) {
        std::vector<std::size_t> community(level.size());
        for (std::size_t i = 0; i < community.size(); ++i)
            community[i] = i;
        if (!moveNodes(level, community))
            break;
        level = coarsen(level, community);
        for (auto& c : membership)
            c = community[c];
    }
    return Partition::fromLabels(membership);
}

double modularity(const Graph& g, const Partition& p) {
    const auto m = static_cast<double>(g.numberOfEdges());
    if (m == 0)
        return 0.0;
    std::vector<double> internal(p.numberOfBlocks(), 0.0), degreeSum(p.numberOfBlocks(), 0.0);
    for (const auto& e : g.edges())
        if (p[e.u] == p[e.v])
            internal[p[e.u]] += 1.0;
    for (NodeId u = 0; u < g.numberOfNodes(); ++u)
        degreeSum[p[u]] += static_cast<double>(g.degree(u));
    double q = 0.0;
    for (std::size_t c = 0; c < p.numberOfBlocks(); ++c)
        q += internal[c] / m - (degreeSum[c] / (2.0 * m)) * (degreeSum[c] / (2.0 * m));
    return q;
}

} // namespace backbone
