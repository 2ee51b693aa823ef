#include "squarewatch/graph6.hpp"

#include <cctype>
#include <sstream>

namespace squarewatch {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

long long triangleBits(long long n) { return n * (n - 1) / 2; }

int payloadByte(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw Graph6ParseError("truncated graph6 payload", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > 126) throw Graph6ParseError("byte outside graph6 alphabet", pos);
    return c - kBias;
}

}  // namespace

Graph parseGraph6(std::string_view line) {
    std::size_t pos = 0;
    if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (pos >= line.size()) throw Graph6ParseError("empty graph6 record", pos);

    long long n = 0;
    int first = payloadByte(line, pos);
    if (first <= 62) {
        n = first;
        ++pos;
    } else {
        // 126 introduces the 18-bit form, a double 126 the 36-bit form
        ++pos;
        int chunks = 3;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
            ++pos;
            chunks = 6;
        }
        for (int i = 0; i < chunks; ++i, ++pos) n = (n << 6) | payloadByte(line, pos);
        if (n > 10'000'000) throw Graph6ParseError("vertex count beyond supported range", pos);
    }

    const long long bits = triangleBits(n);
    const long long bytes = (bits + 5) / 6;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int value = payloadByte(line, pos + bit / 6);
            if ((value >> (5 - bit % 6)) & 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    // padding bits of the final byte must be zero
    for (long long b = bits; b < bytes * 6; ++b) {
        int value = payloadByte(line, pos + b / 6);
        if ((value >> (5 - b % 6)) & 1)
            throw Graph6ParseError("nonzero padding bits", pos + static_cast<std::size_t>(b / 6));
    }
    std::size_t end = pos + static_cast<std::size_t>(bytes);
    if (end != line.size()) throw Graph6ParseError("trailing bytes after graph6 payload", end);
    return Graph::fromAdjacency(std::move(adj));
}

std::string emitGraph6(const Graph& g) {
    const long long n = g.vertexCount();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int accum = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            accum = (accum << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(accum + kBias));
                accum = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((accum << (6 - filled)) + kBias));
    return out;
}

Graph parseAdjacencyList(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("adjacency list: missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("adjacency list: negative header values");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("adjacency list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    return Graph::fromEdges(n, edges);
}

std::string emitAdjacencyList(const Graph& g) {
    std::ostringstream out;
    out << g.vertexCount() << ' ' << g.edgeCount() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

LoadResult loadGraphs(std::istream& in) {
    LoadResult result;
    std::string first;
    std::streampos start = in.tellg();
    // detect adjacency-list files by their "n m" header
    if (std::getline(in, first)) {
        std::istringstream probe(first);
        long long a, b;
        std::string extra;
        if (probe >> a >> b && !(probe >> extra)) {
            in.clear();
            in.seekg(start);
            try {
                result.graphs.push_back({parseAdjacencyList(in), 1});
            } catch (const std::exception& e) {
                result.errors.emplace_back(1, e.what());
            }
            return result;
        }
    }
    in.clear();
    in.seekg(start);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            result.graphs.push_back({parseGraph6(line), lineNo});
        } catch (const std::exception& e) {
            result.errors.emplace_back(lineNo, e.what());
        }
    }
    return result;
}

}  // namespace squarewatch
