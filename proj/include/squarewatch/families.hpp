#ifndef SQUAREWATCH_FAMILIES_HPP
#define SQUAREWATCH_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "squarewatch/graph.hpp"

namespace squarewatch {

enum class FamilyKind { Snake, Peanut, TailClosure, ATailClosure, BTailClosure,
                        MultitailClosure, RandomRegular };

std::string familyKindName(FamilyKind kind);

/// Construction metadata: degree, kind-specific parameters and the vertex ids
/// of the named role vertices (u_T, w_T, z, y1, ...). Set-valued roles (X, X',
/// Z, tail tips) are kept in the vector fields.
struct FamilyMeta {
    FamilyKind kind;
    int d = 0;
    std::map<std::string, int> params;
    std::map<std::string, int> roles;
    std::vector<int> headX;
    std::vector<int> headXPrime;
};

/// Graph under construction toward d-regularity. deficiency(v) counts the
/// edges still missing at v; closures require specific deficiency patterns.
class PartialGraph {
public:
    explicit PartialGraph(int targetDegree);

    int targetDegree() const { return target_; }
    int vertexCount() const { return static_cast<int>(adj_.size()); }
    int addVertex();
    std::vector<int> addVertices(int count);
    void addEdge(int u, int v);
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int deficiency(int v) const { return target_ - degree(v); }
    std::vector<int> deficientVertices() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Validates every vertex reached the target degree.
    Graph finish() const;

private:
    int target_;
    std::vector<std::vector<int>> adj_;
};

/// K_q with an m-edge matching removed: vertices 0..q-1, pairs (0,1)..(2m-2,2m-1) unmatched.
Graph makeCliqueMinusMatching(int q, int m);

/// B region plus k-1 chained segments; exactly one vertex (role "w_T") is left
/// at deficiency 1. Roles: "w_T", "apex", "y1", "y2" (the deg2=1 tips).
PartialGraph makeTailFragment(int d, int k);

/// Doubles the partial graph and joins each deficiency-1 vertex to its mirror copy.
Graph mirrorClose(const PartialGraph& p);

/// Closes a single vertex of even deficiency r: adds K_{d+1} minus an
/// (r/2)-matching and joins the r degree-(d-1) cap vertices to `attach`.
/// Returns the ids of the added cap vertices.
std::vector<int> cliqueCap(PartialGraph& g, int attach, int r);

std::pair<Graph, FamilyMeta> makeSnake(int d, int kA, int kB);
std::pair<Graph, FamilyMeta> makePeanut(int d);
std::pair<Graph, FamilyMeta> makeATailGraph(int d, int k, int xPrime);
std::pair<Graph, FamilyMeta> makeBTailGraph(int d, int k, int xPrime);
std::pair<Graph, FamilyMeta> makeMultitailGraph(int d, const std::vector<int>& segmentCounts);

/// Configuration/pairing model with full rejection of loops and multi-edges.
/// Deterministic for a fixed seed; throws after 10000 rejected pairings.
Graph randomRegular(int n, int d, std::uint64_t seed);

}  // namespace squarewatch

#endif
