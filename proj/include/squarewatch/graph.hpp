#ifndef SQUAREWATCH_GRAPH_HPP
#define SQUAREWATCH_GRAPH_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace squarewatch {

using VertexId = int;

/// Sentinel for "no path"; bfsDistances never returns negative values otherwise.
inline constexpr int kInfiniteDistance = -1;

/// Immutable simple undirected graph, adjacency kept as sorted neighbor lists.
/// Construction validates: symmetric, loop-free, duplicate-free, ids in [0, n).
class Graph {
public:
    Graph() = default;

    static Graph fromEdges(int n, std::span<const std::pair<int, int>> edges);
    static Graph fromAdjacency(std::vector<std::vector<int>> adjacency);

    int vertexCount() const { return static_cast<int>(adj_.size()); }
    long long edgeCount() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

/// Distance-2 profile: N2(v), N2'(v) and deg2(v) for every vertex.
/// N2'(v) is the subset of N2(v) adjacent to at least one vertex at distance 3.
struct Dist2Profile {
    std::vector<std::vector<int>> n2;       // sorted
    std::vector<std::vector<int>> n2prime;  // sorted subsets of n2
    std::vector<int> deg2;

    bool lowDegree(int v) const { return deg2[v] <= 3; }
    bool inN2(int v, int u) const;
    long long sumDeg2() const;
};

struct BasicChecks {
    bool connected = false;
    std::optional<int> regularDegree;  // set iff all degrees equal
    bool squareComplete = false;       // every distinct pair within distance 2
};

std::vector<int> bfsDistances(const Graph& g, int source);
Graph graphPower(const Graph& g, int k);
Dist2Profile dist2Profile(const Graph& g);
BasicChecks basicChecks(const Graph& g);

/// Vertices of the connected component containing `start` in g - `banned`.
/// Returns a sorted vertex list; `start` must differ from `banned`.
std::vector<int> componentWithout(const Graph& g, int banned, int start);

}  // namespace squarewatch

#endif
