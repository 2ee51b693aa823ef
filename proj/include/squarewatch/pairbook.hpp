#ifndef SQUAREWATCH_PAIRBOOK_HPP
#define SQUAREWATCH_PAIRBOOK_HPP

#include <map>
#include <string>
#include <vector>

#include "squarewatch/decomposition.hpp"
#include "squarewatch/graph.hpp"
#include "squarewatch/rational.hpp"

namespace squarewatch {

enum class PairTag { S1, S2, S3, S4 };
std::string pairTagName(PairTag t);

/// Ordered pair (x, y) at graph distance exactly 2, charged to one superregion
/// and tagged by where x and y sit relative to it and the U/W/N/V classes.
struct OrderedPair {
    int x = -1;
    int y = -1;
    PairTag tag = PairTag::S1;
    int owner = -1;

    bool operator<(const OrderedPair& o) const {
        return std::tie(x, y, owner) < std::tie(o.x, o.y, o.owner);
    }
};

struct Collision {
    int x = -1, y = -1;
    int ownerS4 = -1;  // superregion holding the pair as S4
    int ownerS3 = -1;  // superregion holding the pair as S3
    bool allowedType = false;  // exactly one S4 and one S3 holder
    std::string note;
};

struct PairBook {
    std::vector<std::vector<OrderedPair>> perSuperregion;
    std::vector<std::string> violations;  // distance/tag/count breaches with witnesses

    long long totalPairs() const;
};

/// Per-superregion pair construction. Pairs are tagged from actual class
/// membership; breaches of the distance-2 or tag rules land in `violations`.
PairBook buildPairBook(const Graph& g, const Dist2Profile& profile,
                       const AssemblyResult& assembly, const ClassTable& table, int d);

std::vector<Collision> detectCollisions(const PairBook& book);

struct ResolutionStats {
    int found = 0;
    int resolved = 0;
    std::vector<std::string> unresolved;  // one entry per stuck collision, with case label
};

/// Applies the case-keyed replacement rules: the S3 holder swaps its colliding
/// pair for another admissible (z, y). Cases the analysis rules out entirely
/// are reported, never guessed at.
ResolutionStats resolveCollisions(const Graph& g, const Dist2Profile& profile,
                                  const AssemblyResult& assembly, const ClassTable& table,
                                  PairBook& book, int d);

struct BoundReport {
    long long sumPairs = 0;
    long long fourV = 0;
    long long sumDeg2 = 0;
    Rational rhs;
    bool shortcutU = false;  // |U| >= 3n/(d-3): the direct degree-sum argument applies
    bool shortcutHolds = false;
    bool pairBoundHolds = false;   // sum |S_R| >= 4|V|
    bool theoremHolds = false;     // e(G^2) - e(G) > rhs, exact rational comparison
    std::vector<std::string> perSuperregionViolations;
};

BoundReport aggregateBound(const Graph& g, const Dist2Profile& profile, const PairBook& book,
                           const AssemblyResult& assembly, const ClassTable& table, int d);

}  // namespace squarewatch

#endif
