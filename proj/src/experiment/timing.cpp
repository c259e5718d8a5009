#include <algorithm>
#include <chrono>
#include <limits>

#include "backbone/experiment.hpp"
#include "backbone/parallel.hpp"

namespace backbone {

std::vector<TimingRow> timeMethods(std::span<const NamedGraph> corpus, std::span<const Method> methods,
                                   const ScoringOptions& options, int repetitions) {
    ThreadCountGuard sequential(1);
    std::vector<TimingRow> rows;
    for (const auto& named : corpus) {
        for (Method method : methods) {
            double best = std::numeric_limits<double>::infinity();
            for (int rep = 0; rep < std::max(1, repetitions); ++rep) {
                const auto start = std::chrono::steady_clock::now();
                const EdgeScores scores = scoreEdges(named.graph, method, options);
                const auto stop = std::chrono::steady_clock::now();
                best = std::min(best, std::chrono::duration<double>(stop - start).count());
            }
            // steady_clock can report 0 for trivially small inputs.
            rows.push_back({named.name, std::string(methodTag(method)), std::max(best, 1e-9)});
        }
    }
    return rows;
}

} // namespace backbone
