#include "squarewatch/pairbook.hpp"

#include <algorithm>
#include <set>

namespace squarewatch {

namespace {

bool sortedContains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
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

}  // namespace

std::string pairTagName(PairTag t) {
    switch (t) {
        case PairTag::S1: return "S1";
        case PairTag::S2: return "S2";
        case PairTag::S3: return "S3";
        case PairTag::S4: return "S4";
    }
    return "?";
}

long long PairBook::totalPairs() const {
    long long total = 0;
    for (const auto& list : perSuperregion) total += static_cast<long long>(list.size());
    return total;
}

namespace {

// The four tags are mutually exclusive by the class definitions; a pair that
// fits none of them is a construction breach.
std::optional<PairTag> tagFor(int x, int y, const Superregion& s, const ClassTable& table) {
    const bool xIn = s.contains(x), yIn = s.contains(y);
    if (xIn && yIn) return PairTag::S1;
    if (xIn && !yIn && table.inV(x)) return PairTag::S2;
    if (yIn && !xIn && table.inV(y) && table.inU[x]) return PairTag::S3;
    if (xIn && !yIn && table.inW[x]) return PairTag::S4;
    return std::nullopt;
}

class BookBuilder {
public:
    BookBuilder(const Graph& g, const Dist2Profile& profile, const AssemblyResult& assembly,
                const ClassTable& table, int d, PairBook& book)
        : g_(g), profile_(profile), assembly_(assembly), table_(table), d_(d), book_(book) {}

    void build() {
        book_.perSuperregion.resize(assembly_.superregions.size());
        for (int si = 0; si < static_cast<int>(assembly_.superregions.size()); ++si) {
            const Superregion& s = assembly_.superregions[si];
            pending_.clear();
            switch (s.kind) {
                case SuperregionKind::Singleton: buildSingleton(s); break;
                case SuperregionKind::PlainRegion: buildPlainRegion(s); break;
                case SuperregionKind::Tail: buildTail(s); break;
                case SuperregionKind::Multitail: buildMultitail(s); break;
                case SuperregionKind::ATail: buildATail(s); break;
                case SuperregionKind::BTail: buildBTail(s); break;
            }
            materialize(si, s);
        }
    }

private:
    void add(int x, int y) { pending_.insert({x, y}); }

    void materialize(int si, const Superregion& s) {
        for (auto [x, y] : pending_) {
            if (!profile_.inN2(x, y)) {
                book_.violations.push_back("pair (" + std::to_string(x) + "," +
                                           std::to_string(y) + ") of superregion " +
                                           std::to_string(si) + " is not at distance 2");
                continue;
            }
            auto tag = tagFor(x, y, s, table_);
            if (!tag) {
                book_.violations.push_back("pair (" + std::to_string(x) + "," +
                                           std::to_string(y) + ") of superregion " +
                                           std::to_string(si) + " fits no S1..S4 tag");
                continue;
            }
            book_.perSuperregion[si].push_back({x, y, *tag, si});
        }
    }

    void buildSingleton(const Superregion& s) {
        int v = s.vertices.front();
        if (!table_.inV(v)) return;
        for (int u : profile_.n2[v]) add(v, u);
    }

    void buildPlainRegion(const Superregion& s) {
        switch (s.regionClass) {
            case RegionClass::A: buildARegion(s); break;
            case RegionClass::C: buildCRegion(s); break;
            case RegionClass::B:
                book_.violations.push_back("B region survived as a plain superregion");
                break;
            default: buildDefgRegion(s); break;
        }
    }

    void buildDefgRegion(const Superregion& s) {
        for (int v : s.vertices) {
            if (!table_.inV(v)) continue;
            for (int a : profile_.n2[v]) add(v, a);
            std::vector<int> av;
            if (profile_.deg2[v] == 2) av = profile_.n2prime[v];
            else if (profile_.deg2[v] == 3 && !profile_.n2prime[v].empty())
                av = {profile_.n2prime[v].front()};
            if (profile_.deg2[v] <= 3 &&
                profile_.deg2[v] + static_cast<int>(av.size()) < 4)
                book_.violations.push_back("vertex " + std::to_string(v) +
                                           " cannot reach 4 pairs: deg2 + |A_v| < 4");
            for (int a : av) add(a, v);
        }
    }

    void buildARegion(const Superregion& s) {
        std::vector<int> V;
        for (int v : s.vertices)
            if (profile_.deg2[v] == 1) V.push_back(v);
        if (V.empty()) {
            book_.violations.push_back("A region without deg2=1 vertices");
            return;
        }
        int u = profile_.n2[V.front()].front();
        for (int v : V)
            if (profile_.n2[v] != std::vector<int>{u})
                book_.violations.push_back("A region deg2=1 vertices disagree on u");
        std::vector<int> X = sortedDifference(s.vertices, V);
        const int sizeV = static_cast<int>(V.size());
        for (int x : X) {
            if (table_.inW[x] || table_.inU[x]) continue;
            for (int y : profile_.n2[x]) add(x, y);
            if (sizeV == 3) {
                std::vector<int> outside = sortedDifference(profile_.n2[x], s.vertices);
                if (outside.empty()) {
                    book_.violations.push_back("A region |V|=3 vertex " + std::to_string(x) +
                                               " lacks an outside distance-2 partner");
                } else {
                    int z = outside.front();
                    if (!sortedContains(profile_.n2prime[x], z))
                        book_.violations.push_back("S' pair source " + std::to_string(z) +
                                                   " is not in N2'(" + std::to_string(x) + ")");
                    add(z, x);
                }
            }
        }
        for (int v : V) {
            add(v, u);
            add(u, v);
        }
        for (int w : X)
            if (table_.inW[w])
                for (int y : profile_.n2[w]) add(w, y);
    }

    void buildCRegion(const Superregion& s) {
        int u = -1;
        for (int v : s.vertices)
            if (profile_.deg2[v] == 2 && profile_.n2prime[v].size() == 1) {
                u = profile_.n2prime[v].front();
                break;
            }
        if (u < 0) {
            book_.violations.push_back("C region lost its witness");
            return;
        }
        std::vector<int> nu = sortedIntersection(g_.neighbors(u), s.vertices);
        std::vector<int> V = sortedDifference(s.vertices, nu);
        // Lemma 3.4 shape: R = V + (R cap N(u)), with V the distance-2 set of u
        std::vector<int> distU = bfsDistances(g_, u);
        for (int v : V)
            if (distU[v] != 2)
                book_.violations.push_back("C region vertex " + std::to_string(v) +
                                           " is neither adjacent to u nor at distance 2");
        int w = -1;
        std::vector<int> X;
        for (int x : nu) {
            if (table_.inW[x] && w < 0) w = x;
            else X.push_back(x);
        }
        if (w < 0) {
            book_.violations.push_back("C region without a designated W vertex");
            return;
        }
        for (int x : V) for (int y : sortedIntersection(profile_.n2[x], s.vertices)) add(x, y);
        for (int x : X) for (int y : sortedIntersection(profile_.n2[x], s.vertices)) add(x, y);
        for (int v : V) {
            add(v, u);
            add(u, v);
        }
        for (int y : profile_.n2[w]) add(w, y);
        if (static_cast<int>(V.size()) < d_ - 2) {
            std::vector<int> outs = sortedDifference(g_.neighbors(u), s.vertices);
            if (outs.size() < 2) {
                book_.violations.push_back("C region: u has fewer than 2 neighbors outside R");
            } else {
                for (int x : X) {
                    add(x, outs[0]);
                    add(x, outs[1]);
                }
            }
        }
    }

    // S_{T1}: both directions over deg2=2 vertices inside the tail.
    // S_{T2}/S_{T3}: the d-1 last-segment vertices against u_T.
    void addTailCore(const Tail& t) {
        for (int x : t.vertices) {
            if (profile_.deg2[x] != 2) continue;
            for (int y : sortedIntersection(profile_.n2[x], t.vertices)) {
                add(x, y);
                add(y, x);
            }
            if (sortedContains(profile_.n2[x], t.uT)) {
                add(x, t.uT);
                add(t.uT, x);
            }
        }
    }

    void buildTail(const Superregion& s) {
        const Tail& t = s.tails.front();
        addTailCore(t);
        for (int y : sortedDifference(g_.neighbors(t.uT), t.vertices)) add(t.wT, y);
    }

    void buildMultitail(const Superregion& s) {
        for (const Tail& t : s.tails) {
            addTailCore(t);
            for (int y : sortedDifference(g_.neighbors(t.uT), t.vertices)) add(t.wT, y);
        }
    }

    void buildATail(const Superregion& s) {
        const Tail& t = s.tails.front();
        addTailCore(t);
        add(s.uT, s.headY1);
        add(s.uT, s.headY2);
        for (int z : s.zOutside) add(s.uT, z);
        std::vector<int> xFree = sortedDifference(s.headX, s.headXPrime);
        for (int x : s.headXPrime) {
            for (int other : s.headXPrime)
                if (other != x && !g_.adjacent(x, other)) add(x, other);
        }
        for (int x : xFree) {
            add(x, t.wT);
            add(t.wT, x);
            add(x, s.headZ);
            add(s.headZ, x);
        }
        for (int x : s.headXPrime) {
            if (!table_.inV(x)) continue;
            add(x, t.wT);
            add(t.wT, x);
            add(x, s.zOutside[0]);
            add(x, s.zOutside[1]);
        }
    }

    void buildBTail(const Superregion& s) {
        const Tail& t = s.tails.front();
        addTailCore(t);
        for (int y : s.zOutside) add(s.headW, y);
        for (int x : s.headXPrime)
            for (int other : s.headXPrime)
                if (other != x && !g_.adjacent(x, other)) add(x, other);
        for (int x : s.headX) {
            add(x, t.wT);
            add(t.wT, x);
        }
        for (int x : sortedDifference(s.headX, s.headXPrime)) {
            add(x, s.headZ);
            add(s.headZ, x);
        }
        for (int x : s.headXPrime) {
            if (!table_.inV(x)) continue;
            add(x, s.zOutside[0]);
            add(x, s.zOutside[1]);
        }
    }

    const Graph& g_;
    const Dist2Profile& profile_;
    const AssemblyResult& assembly_;
    const ClassTable& table_;
    const int d_;
    PairBook& book_;
    std::set<std::pair<int, int>> pending_;
};

}  // namespace

PairBook buildPairBook(const Graph& g, const Dist2Profile& profile,
                       const AssemblyResult& assembly, const ClassTable& table, int d) {
    PairBook book;
    BookBuilder(g, profile, assembly, table, d, book).build();
    return book;
}

std::vector<Collision> detectCollisions(const PairBook& book) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, PairTag>>> index;
    for (const auto& list : book.perSuperregion)
        for (const OrderedPair& p : list) index[{p.x, p.y}].emplace_back(p.owner, p.tag);
    std::vector<Collision> out;
    for (const auto& [key, holders] : index) {
        if (holders.size() < 2) continue;
        Collision c;
        c.x = key.first;
        c.y = key.second;
        if (holders.size() == 2) {
            for (auto [owner, tag] : holders) {
                if (tag == PairTag::S4) c.ownerS4 = owner;
                if (tag == PairTag::S3) c.ownerS3 = owner;
            }
            c.allowedType = c.ownerS4 >= 0 && c.ownerS3 >= 0;
        }
        if (!c.allowedType) {
            c.note = "pair held by";
            for (auto [owner, tag] : holders)
                c.note += " " + std::to_string(owner) + ":" + pairTagName(tag);
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// Swap the S3 holder's (x,y) for (z,y); the replacement must retag as S3.
bool replaceS3Pair(PairBook& book, const ClassTable& table, const AssemblyResult& assembly,
                   int ownerS3, int x, int y, int z, std::string& error) {
    auto& list = book.perSuperregion[ownerS3];
    for (OrderedPair& p : list)
        if (p.x == z && p.y == y) {
            error = "replacement pair already present";
            return false;
        }
    for (OrderedPair& p : list) {
        if (p.x == x && p.y == y && p.tag == PairTag::S3) {
            auto tag = tagFor(z, y, assembly.superregions[ownerS3], table);
            if (!tag || *tag != PairTag::S3) {
                error = "replacement does not tag as S3";
                return false;
            }
            p.x = z;
            return true;
        }
    }
    error = "colliding S3 pair vanished from its book";
    return false;
}

}  // namespace

ResolutionStats resolveCollisions(const Graph& g, const Dist2Profile& profile,
                                  const AssemblyResult& assembly, const ClassTable& table,
                                  PairBook& book, int d) {
    ResolutionStats stats;
    stats.found = static_cast<int>(detectCollisions(book).size());
    const long long passLimit = std::max<long long>(1, book.totalPairs());
    std::set<std::pair<int, int>> reported;

    for (long long pass = 0; pass < passLimit; ++pass) {
        std::vector<Collision> collisions = detectCollisions(book);
        bool progress = false;
        bool pendingWork = false;
        for (const Collision& c : collisions) {
            if (reported.count({c.x, c.y})) continue;
            if (!c.allowedType) {
                stats.unresolved.push_back("non-(S4,S3) overlap: (" + std::to_string(c.x) + "," +
                                           std::to_string(c.y) + ") " + c.note);
                reported.insert({c.x, c.y});
                continue;
            }
            pendingWork = true;
            const Superregion& holder = assembly.superregions[c.ownerS4];
            const int x = c.x, y = c.y;
            auto fail = [&](const std::string& label) {
                stats.unresolved.push_back(label + ": (" + std::to_string(x) + "," +
                                           std::to_string(y) + ") S4 owner " +
                                           superregionKindName(holder.kind) + " " +
                                           std::to_string(c.ownerS4) + ", S3 owner " +
                                           std::to_string(c.ownerS3));
                reported.insert({x, y});
            };
            auto tryReplace = [&](int z, const std::string& label) {
                std::string error;
                if (replaceS3Pair(book, table, assembly, c.ownerS3, x, y, z, error)) {
                    ++stats.resolved;
                    progress = true;
                } else {
                    fail(label + " [" + error + "]");
                }
            };

            switch (holder.kind) {
                case SuperregionKind::Singleton:
                    fail("singleton holds an S4 pair (internal error)");
                    break;
                case SuperregionKind::PlainRegion: {
                    if (holder.regionClass == RegionClass::A) {
                        if (profile.deg2[y] != 3) {
                            fail("case 8.2: deg2(y) != 3 is ruled out for non-peanut input");
                            break;
                        }
                        std::vector<int> ws;
                        for (int v : holder.vertices)
                            if (table.inW[v]) ws.push_back(v);
                        std::vector<int> zs = sortedDifference(profile.n2[y], ws);
                        if (zs.size() != 1) {
                            fail("case 8.2: N2(y) minus the region W pair is not a single vertex");
                            break;
                        }
                        int z = zs.front();
                        if (!sortedContains(profile.n2prime[y], z)) {
                            fail("case 8.2: z outside N2'(y) forces a peanut");
                            break;
                        }
                        if (table.inW[z]) {
                            fail("case 8.2: z in W is ruled out by the degree-sum parity argument");
                            break;
                        }
                        tryReplace(z, "case 8.2");
                    } else if (holder.regionClass == RegionClass::C) {
                        std::vector<int> commons =
                            sortedIntersection(g.neighbors(x), g.neighbors(y));
                        if (commons.size() != 1) {
                            fail("case 8.4: x and y lack a unique common neighbor");
                            break;
                        }
                        int u = commons.front();
                        std::vector<int> others = sortedDifference(
                            sortedIntersection(g.neighbors(u), holder.vertices), {x});
                        if (others.empty()) {
                            fail("case 8.4: no second R cap N(u) vertex (Lemma 3.5 breach)");
                            break;
                        }
                        int xPrime = others.front();
                        if (!table.inU[xPrime] || table.inW[xPrime] ||
                            !sortedContains(profile.n2[y], xPrime)) {
                            fail("case 8.4: replacement vertex fails the U/W/distance checks");
                            break;
                        }
                        tryReplace(xPrime, "case 8.4");
                    } else {
                        fail("D/E/F/G region holds an S4 pair (W is empty there)");
                    }
                    break;
                }
                case SuperregionKind::Tail: {
                    const int deg2y = profile.deg2[y];
                    const int n2py = static_cast<int>(profile.n2prime[y].size());
                    if (deg2y == 1) {
                        fail("case 8.6.1: y in an A or B region (impossible or snake)");
                    } else if (deg2y == 2 && n2py == 1) {
                        fail("case 8.6.2: configuration forces an A/B region (impossible)");
                    } else if (deg2y == 2 && n2py == 2) {
                        fail("case 8.6.3: R u R' would merge into a larger tail structure");
                    } else if (deg2y == 3 && n2py == 1) {
                        fail("case 8.6.4: odd degree sum (impossible)");
                    } else if (deg2y == 3 && n2py == 2) {
                        std::vector<int> zs = sortedDifference(profile.n2prime[y], {x});
                        if (zs.size() != 1) {
                            fail("case 8.6.5: N2'(y) does not split as {x,z}");
                        } else if (table.inW[zs.front()]) {
                            fail("case 8.6.5: z in W (multitail/parity contradiction)");
                        } else {
                            tryReplace(zs.front(), "case 8.6.5");
                        }
                    } else if (deg2y == 3 && n2py == 3) {
                        std::vector<int> zs = sortedDifference(profile.n2prime[y], {x});
                        int pick = -1;
                        for (int z : zs)
                            if (!table.inW[z]) { pick = z; break; }
                        if (pick < 0) fail("case 8.6.6: both alternatives sit in W (impossible)");
                        else tryReplace(pick, "case 8.6.6");
                    } else {
                        fail("case 8.6: unexpected (deg2, |N2'|) profile for y");
                    }
                    break;
                }
                case SuperregionKind::Multitail:
                    fail("case 8.3: multitail S4 collisions are impossible");
                    break;
                case SuperregionKind::ATail:
                case SuperregionKind::BTail:
                    fail("case 8.5: A/B tail S4 collisions are impossible");
                    break;
            }
        }
        if (!pendingWork || !progress) break;
    }
    // collisions that survived every pass without a verdict can only mean the
    // replacement passes cycled, which the case analysis rules out
    for (const Collision& c : detectCollisions(book))
        if (c.allowedType && !reported.count({c.x, c.y}))
            stats.unresolved.push_back("resolution cycle at (" + std::to_string(c.x) + "," +
                                       std::to_string(c.y) + ")");
    (void)d;
    return stats;
}

BoundReport aggregateBound(const Graph& g, const Dist2Profile& profile, const PairBook& book,
                           const AssemblyResult& assembly, const ClassTable& table, int d) {
    BoundReport report;
    const int n = g.vertexCount();
    report.sumPairs = book.totalPairs();
    report.fourV = 4 * table.countV();
    report.sumDeg2 = profile.sumDeg2();
    report.rhs = theoremRhs(n, d);
    report.shortcutU = table.countU() * (d - 3) >= 3LL * n;
    report.shortcutHolds = report.shortcutU && report.sumDeg2 >= 4LL * n;
    report.pairBoundHolds = report.sumPairs >= report.fourV;
    report.theoremHolds = Rational(report.sumDeg2, 2) > report.rhs;
    for (int si = 0; si < static_cast<int>(assembly.superregions.size()); ++si) {
        const Superregion& s = assembly.superregions[si];
        long long vCount = 0;
        for (int v : s.vertices)
            if (table.inV(v)) ++vCount;
        long long pairs = static_cast<long long>(book.perSuperregion[si].size());
        if (pairs < 4 * vCount)
            report.perSuperregionViolations.push_back(
                "superregion " + std::to_string(si) + " (" + superregionKindName(s.kind) +
                "): |S_R| = " + std::to_string(pairs) + " < 4|R cap V| = " +
                std::to_string(4 * vCount));
    }
    return report;
}

}  // namespace squarewatch
