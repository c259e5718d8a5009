#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

/// One value per canonical edge id; higher means more important.
struct EdgeScores {
    std::string method;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](EdgeId e) const noexcept { return values[e]; }
};

/// Throws ContractError unless `scores` has one finite value per edge of `g`.
void requireAligned(const Graph& g, const EdgeScores& scores);

/// Header "# method=<tag> m=<count>", then "u v score" per canonical edge.
void writeScores(std::ostream& out, const Graph& g, const EdgeScores& scores);
std::string writeScores(const Graph& g, const EdgeScores& scores);

/// Reads a score file produced for `g`. Count or endpoint mismatches raise ContractError.
EdgeScores readScores(std::istream& in, const Graph& g);

} // namespace backbone
