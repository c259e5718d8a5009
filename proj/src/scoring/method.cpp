#include <array>

#include "backbone/scoring.hpp"

namespace backbone {

namespace {

constexpr std::array kAllMethods{Method::randomEdge,       Method::triangles,       Method::jaccard,
                                 Method::localSimilarity,  Method::localDegree,     Method::triadicSimmelian,
                                 Method::quadrilateralSimmelian, Method::edgeForestFire};

constexpr std::array kSweepMethods{Method::randomEdge,       Method::triangles,        Method::localSimilarity,
                                   Method::localDegree,      Method::triadicSimmelian, Method::quadrilateralSimmelian,
                                   Method::edgeForestFire};

} // namespace

std::string_view methodTag(Method method) {
    switch (method) {
    case Method::randomEdge: return "re";
    case Method::triangles: return "tri";
    case Method::jaccard: return "js";
    case Method::localSimilarity: return "ls";
    case Method::localDegree: return "ld";
    case Method::triadicSimmelian: return "ts";
    case Method::quadrilateralSimmelian: return "qls";
    case Method::edgeForestFire: return "eff";
    }
    return "?";
}

std::optional<Method> parseMethod(std::string_view tag) {
    for (Method method : kAllMethods)
        if (methodTag(method) == tag)
            return method;
    return std::nullopt;
}

std::span<const Method> allMethods() { return kAllMethods; }

std::span<const Method> sweepMethods() { return kSweepMethods; }

bool isRandomized(Method method) { return method == Method::randomEdge || method == Method::edgeForestFire; }

EdgeScores scoreEdges(const Graph& g, Method method, const ScoringOptions& options) {
    switch (method) {
    case Method::randomEdge: return scoreRandom(g, options.seed);
    case Method::triangles: return triangleCounts(g);
    case Method::jaccard: return jaccardScores(g);
    case Method::localSimilarity: return scoreLocalSimilarity(g);
    case Method::localDegree: return scoreLocalDegree(g);
    case Method::triadicSimmelian: return scoreSimmelian(g, SimmelianStrength::triadic);
    case Method::quadrilateralSimmelian: return scoreSimmelian(g, SimmelianStrength::quadrilateral);
    case Method::edgeForestFire:
        return scoreEdgeForestFire(g, FireParams{options.fireSpreadProbability, options.fireTargetVisitRatio,
                                                 options.seed});
    }
    throw ContractError("unknown scoring method");
}

} // namespace backbone
