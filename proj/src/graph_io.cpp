#include "backbone/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace backbone {

namespace {

bool isCommentOrBlank(std::string_view line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#' || line[pos] == '%';
}

bool parsePlainDecimal(std::string_view token, std::uint64_t& value) {
    if (token.empty() || (token.size() > 1 && token[0] == '0'))
        return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::string_view trimCr(std::string_view line) {
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

} // namespace

Graph loadEdgeList(std::istream& in, LoadDiagnostics* diagnostics) {
    std::unordered_map<std::string, std::uint32_t> tokenIndex;
    std::vector<std::string> tokens;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;

    auto intern = [&](std::string token) {
        auto [it, inserted] = tokenIndex.try_emplace(std::move(token), static_cast<std::uint32_t>(tokens.size()));
        if (inserted)
            tokens.push_back(it->first);
        return it->second;
    };

    LoadDiagnostics diag;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (isCommentOrBlank(line))
            continue;
        std::istringstream fields{std::string(trimCr(line))};
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw ParseError("expected exactly two node tokens", lineNo);
        raw.emplace_back(intern(std::move(a)), intern(std::move(b)));
    }
    diag.lines = lineNo;

    std::vector<std::uint64_t> numeric(tokens.size());
    bool allNumeric = true;
    for (std::size_t i = 0; i < tokens.size() && allNumeric; ++i)
        allNumeric = parsePlainDecimal(tokens[i], numeric[i]);

    std::vector<std::uint32_t> order(tokens.size());
    for (std::uint32_t i = 0; i < order.size(); ++i)
        order[i] = i;
    if (allNumeric)
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return numeric[a] < numeric[b]; });
    else
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return tokens[a] < tokens[b]; });

    std::vector<NodeId> idOf(tokens.size());
    std::vector<std::string> labels(tokens.size());
    for (NodeId id = 0; id < order.size(); ++id) {
        idOf[order[id]] = id;
        labels[id] = std::move(tokens[order[id]]);
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw)
        edges.push_back({idOf[a], idOf[b]});

    BuildDiagnostics build;
    Graph g = Graph::fromEdges(labels.size(), std::move(edges), &build);
    g.setLabels(std::move(labels));
    diag.selfLoops = build.selfLoops;
    diag.duplicates = build.duplicates;
    if (diagnostics)
        *diagnostics = diag;
    return g;
}

Graph loadEdgeList(std::string_view text, LoadDiagnostics* diagnostics) {
    std::istringstream in{std::string(text)};
    return loadEdgeList(in, diagnostics);
}

Graph loadEdgeListFile(const std::string& path, LoadDiagnostics* diagnostics) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return loadEdgeList(in, diagnostics);
}

void writeEdgeList(std::ostream& out, const Graph& g) {
    bool first = true;
    for (const auto& e : g.edges()) {
        if (!first)
            out << '\n';
        first = false;
        out << g.label(e.u) << ' ' << g.label(e.v);
    }
}

std::string writeEdgeList(const Graph& g) {
    std::ostringstream out;
    writeEdgeList(out, g);
    return out.str();
}

void writeEdgeListFile(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    writeEdgeList(out, g);
    out << '\n';
}

Graph loadMetis(std::istream& in) {
    std::string line;
    std::size_t lineNo = 0;
    auto nextLine = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineNo;
            if (!line.empty() && line[0] == '%')
                continue;
            return true;
        }
        return false;
    };

    if (!nextLine())
        throw ParseError("missing METIS header", lineNo);
    std::istringstream header(line);
    std::size_t n = 0, m = 0;
    std::string fmt = "0";
    if (!(header >> n >> m))
        throw ParseError("METIS header must start with node and edge counts", lineNo);
    header >> fmt;
    if (fmt != "0" && fmt != "00" && fmt != "000")
        throw ParseError("weighted METIS graphs are not supported", lineNo);

    std::vector<Edge> edges;
    edges.reserve(m);
    for (NodeId u = 0; u < n; ++u) {
        if (!nextLine())
            throw ParseError("expected " + std::to_string(n) + " adjacency lines", lineNo);
        std::istringstream row(line);
        std::uint64_t v = 0;
        while (row >> v) {
            if (v == 0 || v > n)
                throw ParseError("neighbor id out of range", lineNo);
            const auto w = static_cast<NodeId>(v - 1);
            if (u < w)
                edges.push_back({u, w});
            else if (w == u)
                edges.push_back({u, u});
        }
        if (!row.eof())
            throw ParseError("non-numeric neighbor id", lineNo);
    }
    Graph g = Graph::fromEdges(n, std::move(edges));
    if (g.numberOfEdges() != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(g.numberOfEdges()),
                         lineNo);
    return g;
}

void writeMetis(std::ostream& out, const Graph& g) {
    out << g.numberOfNodes() << ' ' << g.numberOfEdges() << '\n';
    for (NodeId u = 0; u < g.numberOfNodes(); ++u) {
        bool first = true;
        for (NodeId v : g.neighbors(u)) {
            if (!first)
                out << ' ';
            first = false;
            out << v + 1;
        }
        out << '\n';
    }
}

Graph loadGraphFile(const std::string& path, LoadDiagnostics* diagnostics) {
    auto endsWith = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (endsWith(".graph") || endsWith(".metis")) {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open " + path);
        return loadMetis(in);
    }
    return loadEdgeListFile(path, diagnostics);
}

} // namespace backbone
