#include "squarewatch/families.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace squarewatch {

std::string familyKindName(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Snake: return "snake";
        case FamilyKind::Peanut: return "peanut";
        case FamilyKind::TailClosure: return "tail-closure";
        case FamilyKind::ATailClosure: return "a-tail-closure";
        case FamilyKind::BTailClosure: return "b-tail-closure";
        case FamilyKind::MultitailClosure: return "multitail-closure";
        case FamilyKind::RandomRegular: return "random-regular";
    }
    return "unknown";
}

PartialGraph::PartialGraph(int targetDegree) : target_(targetDegree) {
    if (targetDegree < 1) throw std::invalid_argument("target degree must be positive");
}

int PartialGraph::addVertex() {
    adj_.emplace_back();
    return vertexCount() - 1;
}

std::vector<int> PartialGraph::addVertices(int count) {
    std::vector<int> ids(count);
    for (int i = 0; i < count; ++i) ids[i] = addVertex();
    return ids;
}

void PartialGraph::addEdge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge in construction");
    if (u < 0 || v < 0 || u >= vertexCount() || v >= vertexCount())
        throw std::invalid_argument("edge endpoint out of range in construction");
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end())
        throw std::invalid_argument("duplicate edge in construction");
    if (degree(u) >= target_ || degree(v) >= target_)
        throw std::invalid_argument("edge exceeds target degree");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

std::vector<int> PartialGraph::deficientVertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertexCount(); ++v)
        if (deficiency(v) > 0) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> PartialGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < vertexCount(); ++v)
        for (int u : adj_[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

Graph PartialGraph::finish() const {
    for (int v = 0; v < vertexCount(); ++v)
        if (deficiency(v) != 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has deficiency " +
                                        std::to_string(deficiency(v)));
    return Graph::fromAdjacency(adj_);
}

Graph makeCliqueMinusMatching(int q, int m) {
    if (q < 0 || m < 0 || 2 * m > q)
        throw std::invalid_argument("matching does not fit in clique");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) {
            bool matched = v == u + 1 && u % 2 == 0 && u < 2 * m;
            if (!matched) edges.emplace_back(u, v);
        }
    return Graph::fromEdges(q, edges);
}

namespace {

// Adds one B region: 2 tips, d-1 matched body vertices, an apex adjacent to the
// body only. The apex is left one edge short. Returns {apex, y1, y2}.
struct BRegionIds { int apex, y1, y2; };

BRegionIds addBRegion(PartialGraph& g) {
    const int d = g.targetDegree();
    std::vector<int> gv = g.addVertices(d + 1);  // tips = gv[0], gv[1]; body = gv[2..d]
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            bool matched = i >= 2 && j == i + 1 && i % 2 == 0;
            if (!matched) g.addEdge(gv[i], gv[j]);
        }
    int apex = g.addVertex();
    for (int i = 2; i <= d; ++i) g.addEdge(apex, gv[i]);
    return {apex, gv[0], gv[1]};
}

// Adds a (d+1)-clique minus the edge {in, out}; returns {in, out}.
std::pair<int, int> addSegment(PartialGraph& g) {
    const int d = g.targetDegree();
    std::vector<int> seg = g.addVertices(d + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (!(i == 0 && j == 1)) g.addEdge(seg[i], seg[j]);
    return {seg[0], seg[1]};
}

void requireOddDegree(int d, int minimum) {
    if (d % 2 == 0)
        throw std::invalid_argument("B regions require an odd degree, got d=" + std::to_string(d));
    if (d < minimum)
        throw std::invalid_argument("degree too small: d=" + std::to_string(d) +
                                    " < " + std::to_string(minimum));
}

}  // namespace

PartialGraph makeTailFragment(int d, int k) {
    requireOddDegree(d, 5);
    if (k < 1) throw std::invalid_argument("tail needs at least one segment");
    PartialGraph g(d);
    BRegionIds b = addBRegion(g);
    int out = b.apex;
    for (int i = 2; i <= k; ++i) {
        auto [in, next_out] = addSegment(g);
        g.addEdge(out, in);
        out = next_out;
    }
    // roles are conveyed via makeSnake / tail-based constructors; the fragment
    // itself only guarantees the single deficiency-1 vertex.
    if (g.deficientVertices() != std::vector<int>{out} || g.deficiency(out) != 1)
        throw std::logic_error("tail fragment wiring broke the deficiency contract");
    return g;
}

Graph mirrorClose(const PartialGraph& p) {
    for (int v : p.deficientVertices())
        if (p.deficiency(v) != 1)
            throw std::invalid_argument("mirrorClose needs all deficiencies equal to 1, vertex " +
                                        std::to_string(v) + " has " +
                                        std::to_string(p.deficiency(v)));
    const int n = p.vertexCount();
    PartialGraph doubled(p.targetDegree());
    doubled.addVertices(2 * n);
    for (auto [u, v] : p.edges()) {
        doubled.addEdge(u, v);
        doubled.addEdge(u + n, v + n);
    }
    for (int v : p.deficientVertices()) doubled.addEdge(v, v + n);
    return doubled.finish();
}

std::vector<int> cliqueCap(PartialGraph& g, int attach, int r) {
    if (r < 2 || r % 2 != 0)
        throw std::invalid_argument("cliqueCap needs an even deficiency >= 2, got " +
                                    std::to_string(r));
    if (g.deficiency(attach) != r)
        throw std::invalid_argument("cliqueCap attach vertex has deficiency " +
                                    std::to_string(g.deficiency(attach)) + ", expected " +
                                    std::to_string(r));
    const int d = g.targetDegree();
    std::vector<int> cap = g.addVertices(d + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            bool matched = j == i + 1 && i % 2 == 0 && i < r;
            if (!matched) g.addEdge(cap[i], cap[j]);
        }
    for (int i = 0; i < r; ++i) g.addEdge(attach, cap[i]);
    return cap;
}

std::pair<Graph, FamilyMeta> makeSnake(int d, int kA, int kB) {
    requireOddDegree(d, 7);
    if (kA < 1 || kB < 1) throw std::invalid_argument("snake tails need at least one segment");
    PartialGraph g(d);
    // tail A
    BRegionIds bA = addBRegion(g);
    int outA = bA.apex;
    for (int i = 2; i <= kA; ++i) {
        auto [in, next_out] = addSegment(g);
        g.addEdge(outA, in);
        outA = next_out;
    }
    // tail B
    BRegionIds bB = addBRegion(g);
    int outB = bB.apex;
    for (int i = 2; i <= kB; ++i) {
        auto [in, next_out] = addSegment(g);
        g.addEdge(outB, in);
        outB = next_out;
    }
    g.addEdge(outA, outB);
    FamilyMeta meta{FamilyKind::Snake, d, {{"kA", kA}, {"kB", kB}}, {}, {}, {}};
    meta.roles["w_T"] = outA;
    meta.roles["w_T'"] = outB;
    meta.roles["y1"] = bA.y1;
    meta.roles["y2"] = bA.y2;
    meta.roles["y1'"] = bB.y1;
    meta.roles["y2'"] = bB.y2;
    return {g.finish(), meta};
}

std::pair<Graph, FamilyMeta> makePeanut(int d) {
    if (d % 2 != 0)
        throw std::invalid_argument("a peanut graph exists only for even d, got " +
                                    std::to_string(d));
    if (d < 8) throw std::invalid_argument("peanut needs d >= 8");
    const int n = 2 * d + 3;
    PartialGraph g(d);
    std::vector<int> all = g.addVertices(n);
    // R1 = vertices 0..d, complement is the single edge w1w2 = (0,1).
    for (int u = 0; u <= d; ++u)
        for (int v = u + 1; v <= d; ++v)
            if (!(u == 0 && v == 1)) g.addEdge(u, v);
    // R2 = vertices d+1..2d+2: u = d+1, v1..v3 = d+2..d+4, matched rest.
    const int hub = d + 1;
    for (int u = hub; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool nonEdge = (u == hub && v <= d + 4) ||
                           (u > d + 4 && v == u + 1 && (u - d - 5) % 2 == 0);
            if (!nonEdge) g.addEdge(u, v);
        }
    g.addEdge(hub, 0);
    g.addEdge(hub, 1);
    FamilyMeta meta{FamilyKind::Peanut, d, {}, {}, {}, {}};
    meta.roles["w1"] = 0;
    meta.roles["w2"] = 1;
    meta.roles["u"] = hub;
    meta.roles["v1"] = d + 2;
    meta.roles["v2"] = d + 3;
    meta.roles["v3"] = d + 4;
    return {g.finish(), meta};
}

std::pair<Graph, FamilyMeta> makeATailGraph(int d, int k, int xPrime) {
    requireOddDegree(d, 7);
    if (k < 1) throw std::invalid_argument("A tail needs at least one segment");
    if (xPrime % 2 != 0) throw std::invalid_argument("|X'| must be even");
    if (xPrime == d - 3)
        throw std::invalid_argument("|X'| = d-3 is excluded: the graph would be a snake");
    if (xPrime < 0 || xPrime > d - 3) throw std::invalid_argument("|X'| out of range");
    PartialGraph g(d);
    BRegionIds b = addBRegion(g);
    int wT = b.apex;
    for (int i = 2; i <= k; ++i) {
        auto [in, next_out] = addSegment(g);
        g.addEdge(wT, in);
        wT = next_out;
    }
    int uT = g.addVertex();
    int z = g.addVertex();
    std::vector<int> X = g.addVertices(d - 2);
    int y1 = g.addVertex();
    int y2 = g.addVertex();
    g.addEdge(uT, z);
    for (int x : X) g.addEdge(uT, x);
    for (int i = 0; i < d - 2; ++i)
        for (int j = i + 1; j < d - 2; ++j) {
            bool matched = j == i + 1 && i % 2 == 0 && i < xPrime;
            if (!matched) g.addEdge(X[i], X[j]);
        }
    for (int x : X) {
        g.addEdge(x, y1);
        g.addEdge(x, y2);
    }
    g.addEdge(y1, y2);
    g.addEdge(z, y1);
    g.addEdge(z, y2);
    for (int i = 0; i < xPrime; ++i) g.addEdge(z, X[i]);
    g.addEdge(wT, uT);
    cliqueCap(g, z, d - 3 - xPrime);
    FamilyMeta meta{FamilyKind::ATailClosure, d, {{"k", k}, {"xPrime", xPrime}}, {}, {}, {}};
    meta.roles["u_T"] = uT;
    meta.roles["w_T"] = wT;
    meta.roles["z"] = z;
    meta.roles["y1"] = y1;
    meta.roles["y2"] = y2;
    meta.roles["v1"] = b.y1;
    meta.roles["v2"] = b.y2;
    meta.headX = X;
    meta.headXPrime.assign(X.begin(), X.begin() + xPrime);
    return {g.finish(), meta};
}

std::pair<Graph, FamilyMeta> makeBTailGraph(int d, int k, int xPrime) {
    requireOddDegree(d, 7);
    if (k < 1) throw std::invalid_argument("B tail needs at least one segment");
    if (xPrime % 2 != 0) throw std::invalid_argument("|X'| must be even");
    if (xPrime < 2 || xPrime > d - 3)
        throw std::invalid_argument("|X'| must lie in [2, d-3]: 0 gives an ordinary tail, "
                                    "d-1 a snake");
    PartialGraph g(d);
    BRegionIds b = addBRegion(g);
    int wT = b.apex;
    for (int i = 2; i <= k; ++i) {
        auto [in, next_out] = addSegment(g);
        g.addEdge(wT, in);
        wT = next_out;
    }
    std::vector<int> X = g.addVertices(d - 1);
    int w = g.addVertex();
    int z = g.addVertex();
    int uT = g.addVertex();
    for (int i = 0; i < d - 1; ++i)
        for (int j = i + 1; j < d - 1; ++j) {
            bool matched = j == i + 1 && i % 2 == 0 && i < xPrime;
            if (!matched) g.addEdge(X[i], X[j]);
        }
    for (int x : X) {
        g.addEdge(uT, x);
        g.addEdge(w, x);
    }
    for (int i = 0; i < xPrime; ++i) g.addEdge(z, X[i]);
    g.addEdge(w, z);
    g.addEdge(uT, wT);
    cliqueCap(g, z, d - 1 - xPrime);
    FamilyMeta meta{FamilyKind::BTailClosure, d, {{"k", k}, {"xPrime", xPrime}}, {}, {}, {}};
    meta.roles["u_T"] = uT;
    meta.roles["w_T"] = wT;
    meta.roles["w"] = w;
    meta.roles["z"] = z;
    meta.roles["v1"] = b.y1;
    meta.roles["v2"] = b.y2;
    meta.headX = X;
    meta.headXPrime.assign(X.begin(), X.begin() + xPrime);
    return {g.finish(), meta};
}

std::pair<Graph, FamilyMeta> makeMultitailGraph(int d, const std::vector<int>& segmentCounts) {
    requireOddDegree(d, 7);
    const int m = static_cast<int>(segmentCounts.size());
    if (m < 2 || m > d - 2) throw std::invalid_argument("multitail needs 2 <= m <= d-2 tails");
    if ((d - m) % 2 != 0)
        throw std::invalid_argument("d-m must be even so the hub cap exists (d=" +
                                    std::to_string(d) + ", m=" + std::to_string(m) + ")");
    for (int k : segmentCounts)
        if (k < 1) throw std::invalid_argument("each tail needs at least one segment");
    PartialGraph g(d);
    std::vector<int> wTs;
    FamilyMeta meta{FamilyKind::MultitailClosure, d, {{"m", m}}, {}, {}, {}};
    for (int t = 0; t < m; ++t) {
        BRegionIds b = addBRegion(g);
        int out = b.apex;
        for (int i = 2; i <= segmentCounts[t]; ++i) {
            auto [in, next_out] = addSegment(g);
            g.addEdge(out, in);
            out = next_out;
        }
        wTs.push_back(out);
        meta.params["k" + std::to_string(t + 1)] = segmentCounts[t];
        meta.roles["w_T" + std::to_string(t + 1)] = out;
    }
    int hub = g.addVertex();
    for (int w : wTs) g.addEdge(hub, w);
    if (d - m >= 2) cliqueCap(g, hub, d - m);
    meta.roles["u_T"] = hub;
    return {g.finish(), meta};
}

Graph randomRegular(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0 || d >= std::max(n, 1))
        throw std::invalid_argument("need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("n*d must be even for a d-regular graph");
    std::mt19937_64 rng(seed);
    auto bounded = [&rng](std::uint64_t k) {
        // rejection sampling keeps the pairing exactly uniform
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % k;
        std::uint64_t x;
        do { x = rng(); } while (x >= limit);
        return x % k;
    };
    // Stub pairing with edge-level rejection: draw two random unpaired stubs,
    // accept unless they form a loop or a repeated edge, restart the pairing
    // when it wedges. Pure whole-pairing rejection has acceptance probability
    // around exp(-(d-1)/2 - (d-1)^2/4), hopeless already at d = 7.
    const int points = n * d;
    std::vector<int> stub(points);
    constexpr int kRetryBudget = 10000;
    constexpr int kStuckDraws = 500;
    for (int attempt = 1; attempt <= kRetryBudget; ++attempt) {
        for (int i = 0; i < points; ++i) stub[i] = i / d;
        std::vector<std::set<int>> adj(n);
        int live = points;
        int rejections = 0;
        while (live > 0 && rejections < kStuckDraws) {
            std::uint64_t i = bounded(static_cast<std::uint64_t>(live));
            std::swap(stub[i], stub[live - 1]);
            std::uint64_t j = bounded(static_cast<std::uint64_t>(live - 1));
            int u = stub[live - 1], v = stub[j];
            if (u == v || adj[u].count(v)) {
                std::swap(stub[i], stub[live - 1]);  // undo, keep the multiset intact
                ++rejections;
                continue;
            }
            std::swap(stub[j], stub[live - 2]);
            adj[u].insert(v);
            adj[v].insert(u);
            live -= 2;
            rejections = 0;
        }
        if (live == 0) {
            std::vector<std::vector<int>> lists(n);
            for (int v = 0; v < n; ++v) lists[v].assign(adj[v].begin(), adj[v].end());
            return Graph::fromAdjacency(std::move(lists));
        }
    }
    throw std::runtime_error("random regular generator: exhausted " +
                             std::to_string(kRetryBudget) + " pairing attempts (n=" +
                             std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

}  // namespace squarewatch
