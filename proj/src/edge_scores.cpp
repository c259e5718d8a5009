#include "backbone/edge_scores.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "backbone/format.hpp"

namespace backbone {

void requireAligned(const Graph& g, const EdgeScores& scores) {
    if (scores.size() != g.numberOfEdges())
        throw ContractError("score vector has " + std::to_string(scores.size()) + " entries but the graph has " +
                            std::to_string(g.numberOfEdges()) + " edges");
    for (double x : scores.values)
        if (!std::isfinite(x))
            throw ContractError("score vector contains a non-finite value");
}

void writeScores(std::ostream& out, const Graph& g, const EdgeScores& scores) {
    requireAligned(g, scores);
    out << "# method=" << scores.method << " m=" << g.numberOfEdges() << '\n';
    for (EdgeId e = 0; e < g.numberOfEdges(); ++e) {
        const auto& [u, v] = g.edge(e);
        out << g.label(u) << ' ' << g.label(v) << ' ' << formatNumber(scores[e]) << '\n';
    }
}

std::string writeScores(const Graph& g, const EdgeScores& scores) {
    std::ostringstream out;
    writeScores(out, g, scores);
    return out.str();
}

EdgeScores readScores(std::istream& in, const Graph& g) {
    EdgeScores scores;
    std::string line;
    std::size_t lineNo = 0;
    std::size_t announced = 0;
    bool sawHeader = false;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            if (sawHeader)
                continue;
            std::istringstream header(line.substr(1));
            std::string field;
            while (header >> field) {
                if (field.starts_with("method="))
                    scores.method = field.substr(7);
                else if (field.starts_with("m="))
                    announced = std::stoull(field.substr(2));
            }
            sawHeader = true;
            continue;
        }
        std::istringstream fields(line);
        std::string a, b;
        double value = 0.0;
        if (!(fields >> a >> b >> value))
            throw ParseError("expected \"u v score\"", lineNo);
        const auto e = static_cast<EdgeId>(scores.values.size());
        if (e >= g.numberOfEdges())
            throw ContractError("score file has more lines than the graph has edges");
        const auto& edge = g.edge(e);
        if (g.label(edge.u) != a || g.label(edge.v) != b)
            throw ContractError("score line " + std::to_string(lineNo) + " does not match canonical edge " +
                                g.label(edge.u) + " " + g.label(edge.v));
        scores.values.push_back(value);
    }
    if (!sawHeader)
        throw ParseError("missing \"# method=... m=...\" header", 1);
    if (announced != g.numberOfEdges() || scores.values.size() != g.numberOfEdges())
        throw ContractError("score file covers " + std::to_string(scores.values.size()) + " edges (header says " +
                            std::to_string(announced) + ") but the graph has " +
                            std::to_string(g.numberOfEdges()));
    return scores;
}

} // namespace backbone
