#include "squarewatch/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace squarewatch {

namespace {

bool sortedContains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<int> sortedUnion(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sortedIntersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sortedDifference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sortedOf(std::initializer_list<int> values) {
    std::vector<int> out(values);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> sortedNeighbors(const Graph& g, int v) { return g.neighbors(v); }

bool isSubset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

char regionClassName(RegionClass c) {
    switch (c) {
        case RegionClass::A: return 'A';
        case RegionClass::B: return 'B';
        case RegionClass::C: return 'C';
        case RegionClass::D: return 'D';
        case RegionClass::E: return 'E';
        case RegionClass::F: return 'F';
        case RegionClass::G: return 'G';
    }
    return '?';
}

std::string superregionKindName(SuperregionKind k) {
    switch (k) {
        case SuperregionKind::Singleton: return "singleton";
        case SuperregionKind::PlainRegion: return "region";
        case SuperregionKind::Tail: return "tail";
        case SuperregionKind::Multitail: return "multitail";
        case SuperregionKind::ATail: return "a-tail";
        case SuperregionKind::BTail: return "b-tail";
    }
    return "unknown";
}

bool Region::contains(int v) const { return sortedContains(vertices, v); }
bool Tail::contains(int v) const { return sortedContains(vertices, v); }
bool Superregion::contains(int v) const { return sortedContains(vertices, v); }

std::vector<int> lowDegreeSet(const Dist2Profile& profile) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(profile.deg2.size()); ++v)
        if (profile.deg2[v] <= 3) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> regionEquivalence(const Graph& g, const Dist2Profile& profile,
                                                const std::vector<int>& X) {
    // union-find over X, joining vertices at graph distance <= 2
    std::map<int, int> parent;
    for (int x : X) parent[x] = x;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int x : X) {
        for (int u : g.neighbors(x))
            if (parent.count(u)) unite(x, u);
        for (int u : profile.n2[x])
            if (parent.count(u)) unite(x, u);
    }
    std::map<int, std::vector<int>> byRoot;
    for (int x : X) byRoot[find(x)].push_back(x);
    std::vector<std::vector<int>> classes;
    for (auto& [root, members] : byRoot) {
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

std::vector<Region> buildAndClassifyRegions(const Graph& g, const Dist2Profile& profile,
                                            const std::vector<std::vector<int>>& classes,
                                            int d) {
    std::vector<Region> regions;
    for (const auto& core : classes) {
        Region r;
        r.coreX = core;
        std::vector<int> verts = core;
        for (int x : core) verts = sortedUnion(verts, sortedNeighbors(g, x));
        r.vertices = std::move(verts);

        int minDeg2 = profile.deg2[core.front()];
        for (int x : core) minDeg2 = std::min(minDeg2, profile.deg2[x]);

        if (minDeg2 < 1)
            throw StructureError("low-degree vertex with empty N2: square is complete");

        if (minDeg2 == 1) {
            int v = -1;
            for (int x : core)
                if (profile.deg2[x] == 1) { v = x; break; }
            int u = profile.n2[v].front();
            for (int x : core)
                if (profile.deg2[x] == 1 && profile.n2[x] != std::vector<int>{u})
                    throw StructureError("deg2=1 vertices of one region disagree on u");
            std::vector<int> gv = componentWithout(g, u, v);
            int t = static_cast<int>(sortedIntersection(sortedNeighbors(g, u), gv).size());
            std::vector<int> expected = t >= d - 2 ? sortedUnion(gv, {u}) : gv;
            if (r.vertices != expected)
                throw StructureError("A/B region does not match G_v shape (d <= 6 or irregular?)");
            r.classLabel = t == d - 1 ? RegionClass::B : RegionClass::A;
            r.witnessV = v;
            r.witnessU = u;
            r.tValue = t;
        } else if (minDeg2 == 2) {
            int v = -1;
            for (int x : core)
                if (profile.deg2[x] == 2 && profile.n2prime[x].size() == 1) { v = x; break; }
            if (v >= 0) {
                r.classLabel = RegionClass::C;
                r.witnessV = v;
                r.witnessU = profile.n2prime[v].front();
                std::vector<int> gv = componentWithout(g, r.witnessU, v);
                std::vector<int> distU = bfsDistances(g, r.witnessU);
                for (int x : gv)
                    if (distU[x] == 2) r.cVset.push_back(x);
                r.cNu = sortedIntersection(sortedNeighbors(g, r.witnessU), r.vertices);
            } else {
                r.classLabel = RegionClass::D;
                for (int x : core)
                    if (profile.deg2[x] == 2) { r.witnessV = x; break; }
            }
        } else {
            int k = 4;
            for (int x : core) {
                int size = static_cast<int>(profile.n2prime[x].size());
                if (size < k) {
                    k = size;
                    r.witnessV = x;
                }
            }
            if (k == 0)
                throw StructureError("deg2=3 vertex with empty N2': square is complete");
            r.kValue = k;
            r.classLabel = k == 1 ? RegionClass::E : (k == 2 ? RegionClass::F : RegionClass::G);
        }

        const int size = static_cast<int>(r.vertices.size());
        if (size < d + 1 || size > d + 4 || size > d + minDeg2 + 1)
            throw StructureError("region size violates the d+1 <= |R| <= d+t+1 <= d+4 bounds");
        regions.push_back(std::move(r));
    }
    return regions;
}

namespace {

// Validates that S is a (d+1)-clique minus exactly the edge {inV, outV}, glued
// to the rest of the graph only through inV (to prev) and one edge at outV.
bool validSegment(const Graph& g, const std::vector<int>& S, int inV, int outV, int prev,
                  const std::vector<char>& tailMask) {
    const int d = g.degree(inV);
    if (static_cast<int>(S.size()) != d + 1) return false;
    for (int s : S)
        if (tailMask[s]) return false;
    int missing = 0;
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j)
            if (!g.adjacent(S[i], S[j])) {
                ++missing;
                int a = std::min(S[i], S[j]), b = std::max(S[i], S[j]);
                if (a != std::min(inV, outV) || b != std::max(inV, outV)) return false;
            }
    if (missing != 1) return false;
    for (int s : S) {
        std::vector<int> outside = sortedDifference(g.neighbors(s), S);
        if (s == inV) {
            if (outside != std::vector<int>{prev}) return false;
        } else if (s == outV) {
            if (outside.size() != 1 || outside[0] == prev) return false;
        } else if (!outside.empty()) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Tail> findTails(const Graph& g, const Dist2Profile& profile,
                            const std::vector<Region>& regions, int d) {
    std::vector<Tail> tails;
    for (int ri = 0; ri < static_cast<int>(regions.size()); ++ri) {
        const Region& b = regions[ri];
        if (b.classLabel != RegionClass::B) continue;
        Tail tail;
        tail.bRegionIndex = ri;
        tail.segments.push_back(b.vertices);
        tail.vertices = b.vertices;
        std::vector<char> mask(g.vertexCount(), 0);
        for (int v : b.vertices) mask[v] = 1;

        // tips: the B-region core vertices away from the apex
        std::vector<int> tips;
        for (int v : b.vertices)
            if (profile.deg2[v] == 1) tips.push_back(v);
        if (tips.size() != 2) throw StructureError("B region without exactly two deg2=1 tips");
        tail.tipY1 = tips[0];
        tail.tipY2 = tips[1];

        int front = b.witnessU;  // the apex: d-1 neighbors inside, one outside
        while (true) {
            std::vector<int> outside = sortedDifference(g.neighbors(front), tail.vertices);
            if (outside.size() != 1)
                throw StructureError("tail front vertex lacks a unique outside neighbor");
            int cand = outside[0];
            if (mask[cand]) throw StructureError("tail chain folded back onto itself");

            std::vector<int> s0 = sortedUnion(sortedDifference(g.neighbors(cand), {front}),
                                              {cand});
            std::vector<int> body = sortedDifference(s0, {cand});
            std::vector<int> partners;
            if (!body.empty()) {
                partners = g.neighbors(body[0]);
                for (size_t i = 1; i < body.size(); ++i)
                    partners = sortedIntersection(partners, g.neighbors(body[i]));
                partners = sortedDifference(partners, s0);
                partners = sortedDifference(partners, {front});
            }
            if (partners.size() != 1) {
                tail.uT = cand;
                tail.wT = front;
                break;
            }
            int y = partners[0];
            std::vector<int> segment = sortedUnion(s0, {y});
            if (!validSegment(g, segment, cand, y, front, mask)) {
                tail.uT = cand;
                tail.wT = front;
                break;
            }
            tail.segments.push_back(segment);
            for (int v : segment) mask[v] = 1;
            tail.vertices = sortedUnion(tail.vertices, segment);
            front = y;
        }
        tails.push_back(std::move(tail));
    }
    (void)d;
    return tails;
}

TailIntersectionVerdict checkTailIntersection(const std::vector<Tail>& properTails) {
    TailIntersectionVerdict verdict;
    // prefixes of a single chain are nested; only cross-chain pairs can offend
    struct Prefix {
        int owner;
        std::vector<int> vertices;
    };
    std::vector<Prefix> prefixes;
    for (int i = 0; i < static_cast<int>(properTails.size()); ++i) {
        std::vector<int> acc;
        for (const auto& seg : properTails[i].segments) {
            acc = sortedUnion(acc, seg);
            prefixes.push_back({i, acc});
        }
    }
    for (size_t a = 0; a < prefixes.size(); ++a)
        for (size_t b = a + 1; b < prefixes.size(); ++b) {
            if (prefixes[a].owner == prefixes[b].owner) continue;
            const auto& va = prefixes[a].vertices;
            const auto& vb = prefixes[b].vertices;
            if (sortedIntersection(va, vb).empty()) continue;
            if (isSubset(va, vb) || isSubset(vb, va)) continue;
            verdict.consistent = false;
            verdict.snakeConfiguration = true;
            verdict.offendingPairs.emplace_back(prefixes[a].owner, prefixes[b].owner);
        }
    // mutually attached disjoint tails close a d-regular structure: the
    // one-segment-per-side snake, which never produces an incomparable overlap
    for (size_t a = 0; a < properTails.size(); ++a)
        for (size_t b = a + 1; b < properTails.size(); ++b)
            if (properTails[a].contains(properTails[b].uT) &&
                properTails[b].contains(properTails[a].uT))
                verdict.snakeConfiguration = true;
    std::sort(verdict.offendingPairs.begin(), verdict.offendingPairs.end());
    verdict.offendingPairs.erase(
        std::unique(verdict.offendingPairs.begin(), verdict.offendingPairs.end()),
        verdict.offendingPairs.end());
    return verdict;
}

namespace {

// The matching partner of x inside X: its unique non-neighbor there.
int partnerIn(const Graph& g, const std::vector<int>& X, int x) {
    for (int other : X)
        if (other != x && !g.adjacent(x, other)) return other;
    return -1;
}

// Missing edges of G[X] must form a perfect matching on exactly XPrime.
bool cliqueMinusMatchingOn(const Graph& g, const std::vector<int>& X,
                           const std::vector<int>& XPrime) {
    std::map<int, int> partner;
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = i + 1; j < X.size(); ++j)
            if (!g.adjacent(X[i], X[j])) {
                if (partner.count(X[i]) || partner.count(X[j])) return false;
                partner[X[i]] = X[j];
                partner[X[j]] = X[i];
            }
    if (partner.size() != XPrime.size()) return false;
    for (int x : XPrime)
        if (!partner.count(x)) return false;
    return true;
}

struct HeadMatch {
    int z = -1;
    bool zInHead = false;
    int w = -1;        // BTail only
    int y1 = -1, y2 = -1;  // ATail only
    std::vector<int> X, XPrime, zOutside, headVertices;
};

std::optional<HeadMatch> matchATailHead(const Graph& g, const Region& head, const Tail& tail,
                                        int d) {
    const int uT = tail.uT, wT = tail.wT;
    if (!sortedIntersection(head.vertices, tail.vertices).empty()) return std::nullopt;
    std::vector<int> rest = sortedDifference(g.neighbors(uT), {wT});
    if (static_cast<int>(rest.size()) != d - 1) return std::nullopt;

    // z is the unique u_T-neighbor sparsely connected inside rest (|X'| <= d-5
    // edges, versus d-3 for every X member)
    int z = -1;
    for (int r : rest) {
        int inCount = static_cast<int>(sortedIntersection(g.neighbors(r), rest).size());
        if (inCount == d - 3) continue;
        if (z != -1) return std::nullopt;
        z = r;
    }
    if (z == -1) return std::nullopt;

    HeadMatch m;
    m.z = z;
    m.X = sortedDifference(rest, {z});
    m.XPrime = sortedIntersection(m.X, g.neighbors(z));
    const int xp = static_cast<int>(m.XPrime.size());
    if (xp % 2 != 0 || xp > d - 5) return std::nullopt;
    if (!cliqueMinusMatchingOn(g, m.X, m.XPrime)) return std::nullopt;

    std::vector<int> xFree = sortedDifference(m.X, m.XPrime);
    if (xFree.empty()) return std::nullopt;
    std::vector<int> ys = sortedDifference(g.neighbors(xFree[0]), sortedUnion(m.X, {uT}));
    if (ys.size() != 2) return std::nullopt;
    m.y1 = ys[0];
    m.y2 = ys[1];
    if (!g.adjacent(m.y1, m.y2) || !g.adjacent(z, m.y1) || !g.adjacent(z, m.y2))
        return std::nullopt;

    // exact neighborhoods (regularity then forbids stray edges)
    if (g.neighbors(m.y1) != sortedUnion(m.X, sortedOf({m.y2, z}))) return std::nullopt;
    if (g.neighbors(m.y2) != sortedUnion(m.X, sortedOf({m.y1, z}))) return std::nullopt;
    for (int x : m.X) {
        std::vector<int> expect = sortedUnion(sortedDifference(m.X, {x}),
                                              sortedOf({uT, m.y1, m.y2}));
        if (sortedContains(m.XPrime, x)) {
            expect = sortedUnion(expect, {z});
            expect = sortedDifference(expect, {partnerIn(g, m.XPrime, x)});
        }
        if (g.neighbors(x) != expect) return std::nullopt;
    }

    m.zOutside = sortedDifference(g.neighbors(z),
                                  sortedUnion(m.XPrime, sortedOf({uT, m.y1, m.y2})));
    if (static_cast<int>(m.zOutside.size()) != d - 3 - xp || m.zOutside.size() < 2)
        return std::nullopt;
    if (!sortedIntersection(m.zOutside, tail.vertices).empty()) return std::nullopt;
    if (!sortedIntersection(m.zOutside, head.vertices).empty()) return std::nullopt;

    m.zInHead = head.contains(z);
    std::vector<int> expectedHead = sortedUnion(m.X, sortedOf({uT, m.y1, m.y2}));
    if (m.zInHead) expectedHead = sortedUnion(expectedHead, {z});
    if (head.vertices != expectedHead) return std::nullopt;
    m.headVertices = expectedHead;
    return m;
}

std::optional<HeadMatch> matchBTailHead(const Graph& g, const Region& head, const Tail& tail,
                                        int d) {
    const int uT = tail.uT, wT = tail.wT;
    if (!sortedIntersection(head.vertices, tail.vertices).empty()) return std::nullopt;
    std::vector<int> X = sortedDifference(g.neighbors(uT), {wT});
    if (static_cast<int>(X.size()) != d - 1) return std::nullopt;

    HeadMatch m;
    m.X = X;
    int w = -1, z = -1;
    for (int x : X) {
        std::vector<int> outside = sortedDifference(g.neighbors(x), sortedUnion(X, {uT}));
        if (outside.size() == 1) {
            if (w == -1) w = outside[0];
            else if (w != outside[0]) return std::nullopt;
        } else if (outside.size() == 2) {
            m.XPrime.push_back(x);
        } else {
            return std::nullopt;
        }
    }
    if (w == -1) return std::nullopt;
    for (int x : m.XPrime) {
        std::vector<int> out = sortedDifference(g.neighbors(x), sortedUnion(X, {uT}));
        out = sortedDifference(out, {w});
        if (out.size() != 1) return std::nullopt;
        if (z == -1) z = out[0];
        else if (z != out[0]) return std::nullopt;
    }
    const int xp = static_cast<int>(m.XPrime.size());
    if (z == -1 || xp % 2 != 0 || xp < 2 || xp > d - 3) return std::nullopt;
    m.w = w;
    m.z = z;
    if (!cliqueMinusMatchingOn(g, m.X, m.XPrime)) return std::nullopt;
    if (g.neighbors(w) != sortedUnion(X, {z})) return std::nullopt;

    m.zOutside = sortedDifference(g.neighbors(z), sortedUnion(m.XPrime, {w}));
    if (static_cast<int>(m.zOutside.size()) != d - 1 - xp || m.zOutside.size() < 2)
        return std::nullopt;
    if (!sortedIntersection(m.zOutside, tail.vertices).empty()) return std::nullopt;
    if (!sortedIntersection(m.zOutside, head.vertices).empty()) return std::nullopt;

    m.zInHead = head.contains(z);
    std::vector<int> expectedHead = sortedUnion(X, sortedOf({uT, w}));
    if (m.zInHead) expectedHead = sortedUnion(expectedHead, {z});
    if (head.vertices != expectedHead) return std::nullopt;
    m.headVertices = expectedHead;
    return m;
}

}  // namespace

AssemblyResult assembleSuperregions(const Graph& g, const Dist2Profile& profile,
                                    const std::vector<Region>& regions,
                                    const std::vector<Tail>& tails, int d) {
    const int n = g.vertexCount();
    AssemblyResult out;
    out.ownerOf.assign(n, -1);

    std::vector<int> regionOf(n, -1);
    for (int ri = 0; ri < static_cast<int>(regions.size()); ++ri)
        for (int v : regions[ri].vertices) {
            if (regionOf[v] != -1)
                out.flags.push_back("regions overlap at vertex " + std::to_string(v));
            regionOf[v] = ri;
        }

    auto place = [&](Superregion&& s) {
        int idx = static_cast<int>(out.superregions.size());
        for (int v : s.vertices) {
            if (out.ownerOf[v] != -1)
                out.flags.push_back("superregions overlap at vertex " + std::to_string(v));
            out.ownerOf[v] = idx;
        }
        out.superregions.push_back(std::move(s));
    };
    std::vector<char> regionConsumed(regions.size(), 0);
    auto consumeRegionsInside = [&](const std::vector<int>& vertices) {
        for (int ri = 0; ri < static_cast<int>(regions.size()); ++ri) {
            if (regionConsumed[ri]) continue;
            if (isSubset(regions[ri].vertices, vertices)) regionConsumed[ri] = 1;
            else if (!sortedIntersection(regions[ri].vertices, vertices).empty())
                out.flags.push_back("region " + std::to_string(ri) +
                                    " straddles a superregion boundary");
        }
    };

    // multitails: proper tails sharing the attachment vertex
    std::map<int, std::vector<int>> byAttachment;
    for (int ti = 0; ti < static_cast<int>(tails.size()); ++ti)
        byAttachment[tails[ti].uT].push_back(ti);
    std::vector<char> tailUsed(tails.size(), 0);
    for (const auto& [uT, idxs] : byAttachment) {
        if (idxs.size() < 2) continue;
        Superregion s;
        s.kind = SuperregionKind::Multitail;
        s.uT = uT;
        for (int ti : idxs) {
            s.tails.push_back(tails[ti]);
            s.vertices = sortedUnion(s.vertices, tails[ti].vertices);
            tailUsed[ti] = 1;
        }
        consumeRegionsInside(s.vertices);
        place(std::move(s));
    }

    // lone tails: A/B-tail heads or plain tail superregions
    for (int ti = 0; ti < static_cast<int>(tails.size()); ++ti) {
        if (tailUsed[ti]) continue;
        const Tail& tail = tails[ti];
        Superregion s;
        s.uT = tail.uT;
        s.tails.push_back(tail);
        int headRegion = tail.uT >= 0 ? regionOf[tail.uT] : -1;
        std::optional<HeadMatch> a, b;
        if (headRegion >= 0 && !regionConsumed[headRegion]) {
            a = matchATailHead(g, regions[headRegion], tail, d);
            b = matchBTailHead(g, regions[headRegion], tail, d);
        }
        if (a && b) {
            out.flags.push_back("head region of tail " + std::to_string(ti) +
                                " matches both A and B patterns; left unmerged");
            a.reset();
            b.reset();
        }
        if (a || b) {
            const HeadMatch& m = a ? *a : *b;
            s.kind = a ? SuperregionKind::ATail : SuperregionKind::BTail;
            s.headZ = m.z;
            s.zInHead = m.zInHead;
            s.headW = m.w;
            s.headY1 = m.y1;
            s.headY2 = m.y2;
            s.headX = m.X;
            s.headXPrime = m.XPrime;
            s.headVertices = m.headVertices;
            s.zOutside = m.zOutside;
            s.vertices = sortedUnion(tail.vertices, m.headVertices);
            s.regionIndices.push_back(headRegion);
            regionConsumed[headRegion] = 1;
        } else {
            s.kind = SuperregionKind::Tail;
            s.vertices = tail.vertices;
        }
        consumeRegionsInside(tail.vertices);
        place(std::move(s));
    }

    // remaining regions stand alone
    for (int ri = 0; ri < static_cast<int>(regions.size()); ++ri) {
        if (regionConsumed[ri]) continue;
        if (regions[ri].classLabel == RegionClass::B)
            out.flags.push_back("B region " + std::to_string(ri) + " not absorbed by any tail");
        Superregion s;
        s.kind = SuperregionKind::PlainRegion;
        s.regionClass = regions[ri].classLabel;
        s.vertices = regions[ri].vertices;
        s.regionIndices.push_back(ri);
        place(std::move(s));
    }

    // everything else is a singleton
    for (int v = 0; v < n; ++v) {
        if (out.ownerOf[v] != -1) continue;
        if (regionOf[v] != -1) {
            out.flags.push_back("vertex " + std::to_string(v) +
                                " sits in a region but escaped assembly");
        }
        Superregion s;
        s.kind = SuperregionKind::Singleton;
        s.vertices = {v};
        place(std::move(s));
    }
    (void)profile;
    return out;
}

PartitionVerdict verifyPartition(const Graph& g, const AssemblyResult& assembly) {
    PartitionVerdict v;
    std::vector<int> cover(g.vertexCount(), 0);
    for (const auto& s : assembly.superregions)
        for (int x : s.vertices) ++cover[x];
    for (int x = 0; x < g.vertexCount(); ++x) {
        if (cover[x] == 0) v.uncovered.push_back(x);
        if (cover[x] > 1) v.multiplyCovered.push_back(x);
    }
    v.holds = v.uncovered.empty() && v.multiplyCovered.empty();
    return v;
}

long long ClassTable::countV() const {
    long long c = 0;
    for (size_t v = 0; v < inU.size(); ++v)
        if (inV(static_cast<int>(v))) ++c;
    return c;
}

long long ClassTable::countU() const {
    long long c = 0;
    for (char f : inU) c += f != 0;
    return c;
}

ClassTable buildClassTable(const Graph& g, const Dist2Profile& profile,
                           const AssemblyResult& assembly, int d) {
    const int n = g.vertexCount();
    ClassTable table;
    table.inU.assign(n, 0);
    table.inW.assign(n, 0);
    table.inN.assign(n, 0);
    table.wOwner.assign(n, -1);
    table.nOwner.assign(n, -1);
    for (int v = 0; v < n; ++v) table.inU[v] = profile.deg2[v] >= d - 2;

    auto designate = [&](std::vector<char>& flag, std::vector<int>& owner, int v, int sr) {
        if (v < 0) return;
        if (flag[v] && owner[v] != sr)
            table.issues.push_back("vertex " + std::to_string(v) +
                                   " designated by two superregions");
        if (table.inW[v] && table.inN[v])
            table.issues.push_back("vertex " + std::to_string(v) + " in both W and N");
        flag[v] = 1;
        owner[v] = sr;
    };

    for (int si = 0; si < static_cast<int>(assembly.superregions.size()); ++si) {
        const Superregion& s = assembly.superregions[si];
        switch (s.kind) {
            case SuperregionKind::Singleton:
                break;
            case SuperregionKind::PlainRegion: {
                if (s.regionClass == RegionClass::A) {
                    // two lowest-id members of X with deg2 = |V|
                    std::vector<int> V, cands;
                    for (int v : s.vertices)
                        if (profile.deg2[v] == 1) V.push_back(v);
                    // |V| = d+1-t >= 3 whenever the scope preconditions hold;
                    // flag the breach instead of assuming it
                    if (V.size() < 3)
                        table.issues.push_back("A region with |V| = " +
                                               std::to_string(V.size()) + " < 3");
                    for (int v : s.vertices)
                        if (!sortedContains(V, v) &&
                            profile.deg2[v] == static_cast<int>(V.size()))
                            cands.push_back(v);
                    if (cands.size() < 2) {
                        table.issues.push_back("A region lacks two W candidates");
                    } else {
                        designate(table.inW, table.wOwner, cands[0], si);
                        designate(table.inW, table.wOwner, cands[1], si);
                    }
                } else if (s.regionClass == RegionClass::C) {
                    // lowest-id vertex of R cap N(u), u from any deg2=2, |N2'|=1 witness
                    int u = -1;
                    for (int v : s.vertices)
                        if (profile.deg2[v] == 2 && profile.n2prime[v].size() == 1) {
                            u = profile.n2prime[v].front();
                            break;
                        }
                    if (u < 0) {
                        table.issues.push_back("C region lost its witness vertex");
                    } else {
                        std::vector<int> nu = sortedIntersection(g.neighbors(u), s.vertices);
                        if (nu.empty())
                            table.issues.push_back("C region has no vertex adjacent to u");
                        else
                            designate(table.inW, table.wOwner, nu.front(), si);
                    }
                }
                break;
            }
            case SuperregionKind::Tail:
            case SuperregionKind::Multitail:
                for (const Tail& t : s.tails) {
                    designate(table.inW, table.wOwner, t.wT, si);
                    designate(table.inN, table.nOwner, t.tipY1, si);
                    designate(table.inN, table.nOwner, t.tipY2, si);
                }
                break;
            case SuperregionKind::ATail:
                designate(table.inW, table.wOwner, s.uT, si);
                designate(table.inN, table.nOwner, s.tails[0].tipY1, si);
                designate(table.inN, table.nOwner, s.tails[0].tipY2, si);
                designate(table.inN, table.nOwner, s.headY1, si);
                designate(table.inN, table.nOwner, s.headY2, si);
                break;
            case SuperregionKind::BTail:
                designate(table.inW, table.wOwner, s.headW, si);
                designate(table.inN, table.nOwner, s.tails[0].tipY1, si);
                designate(table.inN, table.nOwner, s.tails[0].tipY2, si);
                break;
        }
    }

    // the per-superregion density bound |R cap (W u N - U)| <= 2|R|/(d+1)
    for (int si = 0; si < static_cast<int>(assembly.superregions.size()); ++si) {
        const Superregion& s = assembly.superregions[si];
        long long marked = 0;
        for (int v : s.vertices)
            if ((table.inW[v] || table.inN[v]) && !table.inU[v]) ++marked;
        if (marked * (d + 1) > 2 * static_cast<long long>(s.vertices.size()))
            table.issues.push_back("superregion " + std::to_string(si) +
                                   " exceeds the (W u N - U) density bound");
    }
    return table;
}

std::vector<int> linkVertexCandidates(const Graph& g, const std::vector<int>& head) {
    std::vector<int> links, multi;
    for (int a : head) {
        std::vector<int> outside = sortedDifference(g.neighbors(a), head);
        if (outside.size() >= 2) multi.push_back(a);
        if (outside.size() == 1) {
            int v = outside[0];
            if (sortedIntersection(g.neighbors(v), head).size() == 1) links.push_back(a);
        }
    }
    return links.empty() ? multi : links;
}

std::optional<SnakeInfo> detectSnake(const Graph& g, const Dist2Profile& profile,
                                     const std::vector<Region>& regions,
                                     const std::vector<Tail>& tails, int d) {
    if (d % 2 == 0) return std::nullopt;
    int bCount = 0;
    for (const Region& r : regions)
        if (r.classLabel == RegionClass::B) ++bCount;
    if (bCount != 2 || tails.size() != 2) return std::nullopt;
    const Tail& t1 = tails[0];
    const Tail& t2 = tails[1];
    if (t1.segmentCount() != t2.segmentCount()) return std::nullopt;
    std::vector<int> all = sortedUnion(t1.vertices, t2.vertices);
    if (static_cast<int>(all.size()) != g.vertexCount()) return std::nullopt;
    if (!t2.contains(t1.uT) || !t1.contains(t2.uT)) return std::nullopt;
    (void)profile;
    return SnakeInfo{d, t1.segmentCount() + 1};
}

std::optional<SnakeInfo> detectSnake(const Graph& g) {
    BasicChecks checks = basicChecks(g);
    if (!checks.connected || !checks.regularDegree || checks.squareComplete) return std::nullopt;
    int d = *checks.regularDegree;
    if (d < 3 || d % 2 == 0) return std::nullopt;
    try {
        Dist2Profile profile = dist2Profile(g);
        auto classes = regionEquivalence(g, profile, lowDegreeSet(profile));
        auto regions = buildAndClassifyRegions(g, profile, classes, d);
        auto tails = findTails(g, profile, regions, d);
        return detectSnake(g, profile, regions, tails, d);
    } catch (const StructureError&) {
        return std::nullopt;
    }
}

std::optional<int> detectPeanut(const Graph& g) {
    BasicChecks checks = basicChecks(g);
    if (!checks.connected || !checks.regularDegree) return std::nullopt;
    const int d = *checks.regularDegree;
    const int n = g.vertexCount();
    if (d % 2 != 0 || d < 4 || n != 2 * d + 3) return std::nullopt;

    for (int hub = 0; hub < n; ++hub) {
        // the hub must split G into two components of d+1 vertices each
        int other = hub == 0 ? 1 : 0;
        std::vector<int> comp1 = componentWithout(g, hub, other);
        if (static_cast<int>(comp1.size()) != d + 1) continue;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (v != hub && !sortedContains(comp1, v)) rest.push_back(v);
        if (static_cast<int>(rest.size()) != d + 1) continue;
        if (componentWithout(g, hub, rest[0]) != rest) continue;

        std::vector<int> in1 = sortedIntersection(g.neighbors(hub), comp1);
        std::vector<int> in2 = sortedIntersection(g.neighbors(hub), rest);
        std::vector<int> r1, r2core;
        if (in1.size() == 2 && in2.size() == static_cast<size_t>(d - 2)) {
            r1 = comp1;
            r2core = rest;
        } else if (in2.size() == 2 && in1.size() == static_cast<size_t>(d - 2)) {
            r1 = rest;
            r2core = comp1;
        } else {
            continue;
        }

        // complement of G[R1] is the single edge between the hub's two neighbors
        std::vector<int> w12 = sortedIntersection(g.neighbors(hub), r1);
        bool ok = w12.size() == 2 && !g.adjacent(w12[0], w12[1]);
        for (size_t i = 0; i < r1.size() && ok; ++i)
            for (size_t j = i + 1; j < r1.size() && ok; ++j) {
                bool isW = (r1[i] == w12[0] && r1[j] == w12[1]);
                if (g.adjacent(r1[i], r1[j]) == isW) ok = false;
            }
        if (!ok) continue;

        // complement of G[R2] is the 3-star at the hub plus a perfect matching
        std::vector<int> vs = sortedDifference(r2core, g.neighbors(hub));
        if (vs.size() != 3) continue;
        std::vector<int> matched = sortedDifference(r2core, vs);
        for (size_t i = 0; i < vs.size() && ok; ++i)
            for (int x : r2core)
                if (x != vs[i] && !g.adjacent(vs[i], x)) { ok = false; break; }
        std::map<int, int> partner;
        for (size_t i = 0; i < matched.size() && ok; ++i)
            for (size_t j = i + 1; j < matched.size() && ok; ++j)
                if (!g.adjacent(matched[i], matched[j])) {
                    if (partner.count(matched[i]) || partner.count(matched[j])) ok = false;
                    partner[matched[i]] = matched[j];
                    partner[matched[j]] = matched[i];
                }
        if (ok && partner.size() == matched.size()) return d;
    }
    return std::nullopt;
}

}  // namespace squarewatch
