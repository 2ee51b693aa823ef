// Test-only oracles, kept independent of the library's BFS/profile code paths:
// distances come from Floyd-Warshall on an adjacency matrix, graph6 decoding
// from a separate bit-string reader.
#ifndef SQUAREWATCH_TEST_ORACLES_HPP
#define SQUAREWATCH_TEST_ORACLES_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "squarewatch/graph.hpp"

namespace oracles {

constexpr int kFar = 1 << 20;

inline std::vector<std::vector<int>> floydWarshall(const squarewatch::Graph& g) {
    const int n = g.vertexCount();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kFar));
    for (int v = 0; v < n; ++v) {
        dist[v][v] = 0;
        for (int u : g.neighbors(v)) dist[v][u] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
    return dist;
}

struct ProfileOracle {
    std::vector<std::vector<int>> n2, n2prime;
    std::vector<int> deg2;
};

inline ProfileOracle profileFromDistances(const squarewatch::Graph& g) {
    const auto dist = floydWarshall(g);
    const int n = g.vertexCount();
    ProfileOracle p;
    p.n2.resize(n);
    p.n2prime.resize(n);
    p.deg2.resize(n);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u)
            if (dist[v][u] == 2) p.n2[v].push_back(u);
        for (int u : p.n2[v])
            for (int w : g.neighbors(u))
                if (dist[v][w] == 3) {
                    p.n2prime[v].push_back(u);
                    break;
                }
        p.deg2[v] = static_cast<int>(p.n2[v].size());
    }
    return p;
}

inline long long sumDeg2(const squarewatch::Graph& g) {
    long long s = 0;
    for (int d : profileFromDistances(g).deg2) s += d;
    return s;
}

// Reference graph6 decoder: expands the whole payload to a bit vector first.
inline squarewatch::Graph decodeGraph6Reference(const std::string& s) {
    size_t pos = 0;
    long long n;
    auto val = [&](size_t i) {
        if (i >= s.size()) throw std::runtime_error("reference decoder: truncated");
        return static_cast<int>(static_cast<unsigned char>(s[i])) - 63;
    };
    if (val(0) < 63) {
        n = val(0);
        pos = 1;
    } else if (s.size() > 1 && static_cast<unsigned char>(s[1]) == 126) {
        n = 0;
        for (int i = 2; i < 8; ++i) n = n * 64 + val(i);
        pos = 8;
    } else {
        n = 0;
        for (int i = 1; i < 4; ++i) n = n * 64 + val(i);
        pos = 4;
    }
    std::vector<int> bits;
    for (size_t i = pos; i < s.size(); ++i) {
        int v = val(i);
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    std::vector<std::pair<int, int>> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            if (k >= static_cast<long long>(bits.size()))
                throw std::runtime_error("reference decoder: not enough bits");
            if (bits[k]) edges.emplace_back(i, j);
        }
    return squarewatch::Graph::fromEdges(static_cast<int>(n), edges);
}

// Seeded Erdos-Renyi-style simple graph for round-trip tests.
inline squarewatch::Graph randomSimpleGraph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 100 < 37) edges.emplace_back(i, j);
    return squarewatch::Graph::fromEdges(n, edges);
}

}  // namespace oracles

#endif
