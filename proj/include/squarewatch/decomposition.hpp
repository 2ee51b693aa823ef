#ifndef SQUAREWATCH_DECOMPOSITION_HPP
#define SQUAREWATCH_DECOMPOSITION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "squarewatch/graph.hpp"

namespace squarewatch {

/// Raised when region structure contradicts the guarantees that hold for
/// connected d-regular inputs with d > 6 (irregular or small-degree input).
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RegionClass { A, B, C, D, E, F, G };
char regionClassName(RegionClass c);

/// An equivalence class of low-degree vertices together with all their
/// neighbors, classified A-G by the minimum deg2 / |N2'| profile of the core.
struct Region {
    std::vector<int> vertices;  // sorted: coreX plus N(coreX)
    std::vector<int> coreX;     // sorted equivalence class, all deg2 <= 3
    RegionClass classLabel = RegionClass::G;

    // class witnesses
    int witnessV = -1;       // A/B: a deg2=1 core vertex; C: deg2=2, |N2'|=1 vertex;
                             // D/E/F/G: core vertex attaining the class minimum
    int witnessU = -1;       // A/B: the unique N2(v); C: the unique N2'(v)
    int tValue = -1;         // A/B: |G_v cap N(u)|
    int kValue = -1;         // E/F/G: min |N2'| over the core
    std::vector<int> cVset;  // C: distance-2-from-u vertices inside G_v
    std::vector<int> cNu;    // C: R cap N(u)

    bool contains(int v) const;
};

std::vector<int> lowDegreeSet(const Dist2Profile& profile);

/// Connected components of the auxiliary graph on X joining x, x' with
/// d(x, x') <= 2. Classes come out sorted, ordered by smallest member.
std::vector<std::vector<int>> regionEquivalence(const Graph& g, const Dist2Profile& profile,
                                                const std::vector<int>& X);

std::vector<Region> buildAndClassifyRegions(const Graph& g, const Dist2Profile& profile,
                                            const std::vector<std::vector<int>>& classes, int d);

/// Maximal chain grown from a B region: later segments are (d+1)-cliques minus
/// the connector edge, linked by single edges. u_T is the unique outside
/// attachment, w_T the unique inside vertex adjacent to it.
struct Tail {
    std::vector<std::vector<int>> segments;  // each sorted; segments[0] is the B region
    std::vector<int> vertices;               // sorted union
    int uT = -1;
    int wT = -1;
    int tipY1 = -1, tipY2 = -1;  // the two deg2=1 vertices of the B region
    int bRegionIndex = -1;

    int segmentCount() const { return static_cast<int>(segments.size()); }
    bool contains(int v) const;
};

std::vector<Tail> findTails(const Graph& g, const Dist2Profile& profile,
                            const std::vector<Region>& regions, int d);

struct TailIntersectionVerdict {
    bool consistent = true;           // every intersecting pair is nested
    bool snakeConfiguration = false;  // an intersecting incomparable pair exists
    std::vector<std::pair<int, int>> offendingPairs;  // proper-tail indices
};
TailIntersectionVerdict checkTailIntersection(const std::vector<Tail>& properTails);

enum class SuperregionKind { Singleton, PlainRegion, Tail, Multitail, ATail, BTail };
std::string superregionKindName(SuperregionKind k);

struct Superregion {
    SuperregionKind kind = SuperregionKind::Singleton;
    std::vector<int> vertices;        // sorted
    std::vector<int> regionIndices;   // constituent regions, if any
    std::vector<Tail> tails;          // Tail: 1, Multitail: m, ATail/BTail: 1
    RegionClass regionClass = RegionClass::G;  // PlainRegion only

    // head data for ATail/BTail
    int uT = -1;                      // tail kinds: the shared attachment vertex
    int headZ = -1;
    bool zInHead = false;
    int headW = -1;                   // BTail: the w vertex
    int headY1 = -1, headY2 = -1;     // ATail: the two y vertices
    std::vector<int> headX;           // sorted
    std::vector<int> headXPrime;      // sorted
    std::vector<int> headVertices;    // sorted
    std::vector<int> zOutside;        // N(z) - R, sorted

    bool contains(int v) const;
};

struct AssemblyResult {
    std::vector<Superregion> superregions;
    std::vector<int> ownerOf;         // vertex -> superregion index (-1 if uncovered)
    std::vector<std::string> flags;   // ambiguous-head / inconsistency notes
};

/// Requires: G is not a snake graph (caller runs detectSnake first).
AssemblyResult assembleSuperregions(const Graph& g, const Dist2Profile& profile,
                                    const std::vector<Region>& regions,
                                    const std::vector<Tail>& tails, int d);

struct PartitionVerdict {
    bool holds = false;
    std::vector<int> uncovered;
    std::vector<int> multiplyCovered;
};
PartitionVerdict verifyPartition(const Graph& g, const AssemblyResult& assembly);

/// U is global (deg2 >= d-2); W and N are designated per superregion. V is the
/// complement of the union. A vertex can sit in U and in W at the same time.
struct ClassTable {
    std::vector<char> inU, inW, inN;
    std::vector<int> wOwner, nOwner;  // superregion index or -1
    std::vector<std::string> issues;  // fraction-bound or designation conflicts

    bool inV(int v) const { return !inU[v] && !inW[v] && !inN[v]; }
    long long countV() const;
    long long countU() const;
};

ClassTable buildClassTable(const Graph& g, const Dist2Profile& profile,
                           const AssemblyResult& assembly, int d);

struct SnakeInfo {
    int d = 0;
    int kTotal = 0;
};
std::optional<SnakeInfo> detectSnake(const Graph& g);
std::optional<SnakeInfo> detectSnake(const Graph& g, const Dist2Profile& profile,
                                     const std::vector<Region>& regions,
                                     const std::vector<Tail>& tails, int d);
std::optional<int> detectPeanut(const Graph& g);

/// Link-vertex procedure for pinning u_T inside a head region (vertices sorted).
/// Returns the candidate set: link vertices when any exist, otherwise the head
/// vertices with two or more outside neighbors.
std::vector<int> linkVertexCandidates(const Graph& g, const std::vector<int>& head);

}  // namespace squarewatch

#endif
