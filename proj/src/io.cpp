#include "gturan/io.hpp"

#include <cctype>
#include <stdexcept>

namespace gturan {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw std::invalid_argument("graph too large for graph6 writer");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view line) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw std::invalid_argument("empty graph6 string");

    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < kBias || c > 126) throw std::invalid_argument("invalid graph6 byte");
        return c - kBias;
    };

    int n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        // 126: three more size bytes (the 8-byte form for n > 258047 is not supported)
        if (pos < line.size() && line[pos] == 126) throw std::invalid_argument("graph6 order too large");
        n = (next() << 12) | (next() << 6) | next();
    }
    if (n > kMaxVertices) throw std::invalid_argument("graph6 order exceeds vertex capacity");

    Graph g(n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    if (pos != line.size()) throw std::invalid_argument("trailing bytes in graph6 string");
    return g;
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.n()) + ";";
    bool first = true;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            out += first ? " " : ",";
            out += std::to_string(u) + "-" + std::to_string(v);
            first = false;
        }
    return out;
}

namespace {

int parse_int(std::string_view s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected integer in edge list");
    return std::stoi(std::string(s.substr(start, pos - start)));
}

} // namespace

Graph from_edge_list_text(std::string_view text) {
    size_t pos = 0;
    int n = parse_int(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size() || text[pos] != ';') throw std::invalid_argument("edge list missing ';'");
    ++pos;
    Graph g(n);
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        int u = parse_int(text, pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size() || text[pos] != '-') throw std::invalid_argument("edge list missing '-'");
        ++pos;
        int v = parse_int(text, pos);
        g.add_edge(u, v);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',') throw std::invalid_argument("edge list missing ','");
            ++pos;
        }
    }
    return g;
}

Graph parse_graph_line(std::string_view line) {
    if (line.find(';') != std::string_view::npos) return from_edge_list_text(line);
    return from_graph6(line);
}

std::vector<Graph> read_graphs(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph_line(line));
    }
    return out;
}

} // namespace gturan
