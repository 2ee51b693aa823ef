#include "squarewatch/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace squarewatch {

Graph Graph::fromEdges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return fromAdjacency(std::move(adj));
}

Graph Graph::fromAdjacency(std::vector<std::vector<int>> adjacency) {
    const int n = static_cast<int>(adjacency.size());
    Graph g;
    long long twice_edges = 0;
    for (int v = 0; v < n; ++v) {
        auto& list = adjacency[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
        for (int u : list) {
            if (u < 0 || u >= n) throw std::invalid_argument("neighbor id out of range");
            if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(v));
        }
        twice_edges += static_cast<long long>(list.size());
    }
    // symmetry
    for (int v = 0; v < n; ++v)
        for (int u : adjacency[v])
            if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
                throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) +
                                            " and " + std::to_string(u));
    g.adj_ = std::move(adjacency);
    g.edge_count_ = twice_edges / 2;
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int v = 0; v < vertexCount(); ++v)
        for (int u : adj_[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

bool Dist2Profile::inN2(int v, int u) const {
    const auto& list = n2[v];
    return std::binary_search(list.begin(), list.end(), u);
}

long long Dist2Profile::sumDeg2() const {
    long long s = 0;
    for (int d : deg2) s += d;
    return s;
}

std::vector<int> bfsDistances(const Graph& g, int source) {
    const int n = g.vertexCount();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(n, kInfiniteDistance);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int u : g.neighbors(v)) {
            if (dist[u] == kInfiniteDistance) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
        }
    }
    return dist;
}

Graph graphPower(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("graph power requires k >= 1");
    const int n = g.vertexCount();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> dist = bfsDistances(g, v);
        for (int u = 0; u < n; ++u)
            if (u != v && dist[u] != kInfiniteDistance && dist[u] <= k) adj[v].push_back(u);
    }
    return Graph::fromAdjacency(std::move(adj));
}

Dist2Profile dist2Profile(const Graph& g) {
    const int n = g.vertexCount();
    Dist2Profile profile;
    profile.n2.resize(n);
    profile.n2prime.resize(n);
    profile.deg2.resize(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> dist = bfsDistances(g, v);
        auto& n2 = profile.n2[v];
        for (int u = 0; u < n; ++u)
            if (dist[u] == 2) n2.push_back(u);
        auto& n2p = profile.n2prime[v];
        for (int u : n2) {
            for (int w : g.neighbors(u)) {
                if (dist[w] == 3) {
                    n2p.push_back(u);
                    break;
                }
            }
        }
        profile.deg2[v] = static_cast<int>(n2.size());
    }
    return profile;
}

BasicChecks basicChecks(const Graph& g) {
    const int n = g.vertexCount();
    BasicChecks out;
    if (n == 0) {
        out.connected = true;
        out.regularDegree = 0;
        out.squareComplete = true;
        return out;
    }
    std::vector<int> dist = bfsDistances(g, 0);
    out.connected = std::none_of(dist.begin(), dist.end(),
                                 [](int d) { return d == kInfiniteDistance; });
    int d0 = g.degree(0);
    bool regular = true;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != d0) { regular = false; break; }
    if (regular) out.regularDegree = d0;
    out.squareComplete = true;
    for (int v = 0; v < n && out.squareComplete; ++v) {
        std::vector<int> dv = bfsDistances(g, v);
        for (int u = 0; u < n; ++u) {
            if (u != v && (dv[u] == kInfiniteDistance || dv[u] > 2)) {
                out.squareComplete = false;
                break;
            }
        }
    }
    return out;
}

std::vector<int> componentWithout(const Graph& g, int banned, int start) {
    if (start == banned) throw std::invalid_argument("start equals banned vertex");
    std::vector<char> seen(g.vertexCount(), 0);
    seen[start] = 1;
    if (banned >= 0) seen[banned] = 1;
    std::vector<int> stack{start}, out{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
                out.push_back(u);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace squarewatch
