#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "backbone/graph.hpp"

namespace backbone {

struct LoadDiagnostics {
    std::size_t lines = 0;
    std::size_t selfLoops = 0;
    std::size_t duplicates = 0;
};

/**
 * Reads a whitespace separated edge list. Lines starting with '#' or '%' and
 * blank lines are skipped; every other line must hold exactly two node tokens.
 *
 * Tokens become dense ids in sorted label order: numeric order when every token
 * is a plain non-negative decimal, byte order otherwise. The graph keeps the
 * tokens as node labels. Self-loops and repeated edges are dropped and counted.
 */
Graph loadEdgeList(std::istream& in, LoadDiagnostics* diagnostics = nullptr);
Graph loadEdgeList(std::string_view text, LoadDiagnostics* diagnostics = nullptr);
Graph loadEdgeListFile(const std::string& path, LoadDiagnostics* diagnostics = nullptr);

/// One "u v" line per canonical edge, using node labels. No trailing newline after the last line.
void writeEdgeList(std::ostream& out, const Graph& g);
std::string writeEdgeList(const Graph& g);
void writeEdgeListFile(const std::string& path, const Graph& g);

/// METIS adjacency format: header "n m [fmt]", then one 1-based neighbor line per node. Unweighted only.
Graph loadMetis(std::istream& in);
void writeMetis(std::ostream& out, const Graph& g);

/// Loads by extension: ".graph" / ".metis" as METIS, anything else as an edge list.
Graph loadGraphFile(const std::string& path, LoadDiagnostics* diagnostics = nullptr);

} // namespace backbone
