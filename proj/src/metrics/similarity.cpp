#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "backbone/metrics.hpp"

namespace backbone {

namespace {

double entropy(const std::vector<double>& counts, double n) {
    double h = 0.0;
    for (double c : counts)
        if (c > 0)
            h -= (c / n) * std::log(c / n);
    return h;
}

} // namespace

double normalizedMutualInformation(const Partition& a, const Partition& b) {
    if (a.numberOfElements() != b.numberOfElements())
        throw ContractError("partitions cover different node counts");
    if (a.sameGrouping(b))
        return 1.0;
    const auto n = static_cast<double>(a.numberOfElements());

    std::vector<double> sizeA(a.numberOfBlocks(), 0.0), sizeB(b.numberOfBlocks(), 0.0);
    std::map<std::pair<std::size_t, std::size_t>, double> joint;
    for (NodeId u = 0; u < a.numberOfElements(); ++u) {
        ++sizeA[a[u]];
        ++sizeB[b[u]];
        ++joint[{a[u], b[u]}];
    }
    const double ha = entropy(sizeA, n), hb = entropy(sizeB, n);
    if (ha + hb == 0.0)
        return 1.0;
    // Summing the terms in sorted order makes the result exactly symmetric.
    std::vector<double> terms;
    terms.reserve(joint.size());
    for (const auto& [cell, count] : joint)
        terms.push_back((count / n) * std::log(count * n / (sizeA[cell.first] * sizeB[cell.second])));
    std::sort(terms.begin(), terms.end());
    double mutual = 0.0;
    for (double t : terms)
        mutual += t;
    return std::clamp(2.0 * mutual / (ha + hb), 0.0, 1.0);
}

std::vector<double> fractionalRanks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return values[i] < values[j]; });
    std::vector<double> ranks(values.size());
    for (std::size_t first = 0; first < order.size();) {
        std::size_t last = first + 1;
        while (last < order.size() && values[order[last]] == values[order[first]])
            ++last;
        const double average = (static_cast<double>(first + 1) + static_cast<double>(last)) / 2.0;
        for (std::size_t k = first; k < last; ++k)
            ranks[order[k]] = average;
        first = last;
    }
    return ranks;
}

double spearmanRho(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw ContractError("rank correlation needs equally long vectors");
    if (x.size() < 2)
        throw DomainError("rank correlation needs at least two values");
    const auto rx = fractionalRanks(x);
    const auto ry = fractionalRanks(y);
    const auto n = static_cast<double>(x.size());
    const double mean = (n + 1.0) / 2.0;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mean, dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DomainError("rank correlation of a constant vector is undefined");
    if (rx == ry)
        return 1.0;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearmanRho(const CentralityVector& x, const CentralityVector& y) { return spearmanRho(x.values, y.values); }

} // namespace backbone
