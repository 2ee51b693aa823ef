// Acceptance suite: one verdict line per criterion, nonzero exit when any
// criterion fails. Criterion bodies deliberately re-derive everything from the
// public API so a regression in any module surfaces here.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "squarewatch/analyze.hpp"
#include "squarewatch/families.hpp"
#include "squarewatch/graph6.hpp"
#include "squarewatch/pairbook.hpp"

using namespace squarewatch;

namespace {

int failures = 0;

double seconds(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
}

void verdict(int criterion, bool pass, double elapsed, const std::string& detail) {
    std::printf("CRITERION %d: %s (%.2fs) %s\n", criterion, pass ? "PASS" : "FAIL", elapsed,
                detail.c_str());
    if (!pass) ++failures;
}

struct CorpusCell {
    int d = 0, n = 0;
    int accepted = 0, skippedComplete = 0, skippedDisconnected = 0;
    int violations = 0;
    std::string reportBytes;  // concatenated JSON, timing off
};

std::vector<CorpusCell> runCorpus() {
    std::vector<CorpusCell> cells;
    for (int d : {7, 8, 9, 10, 11, 12})
        for (int n : {30, 60, 120}) {
            CorpusCell cell;
            cell.d = d;
            cell.n = n;
            std::vector<Graph> graphs;
            std::vector<std::string> ids;
            std::uint64_t seed = 1000003ULL * d + 10007ULL * n;
            for (int tries = 0; static_cast<int>(graphs.size()) < 100 && tries < 5000;
                 ++tries, ++seed) {
                Graph g = randomRegular(n, d, seed);
                BasicChecks checks = basicChecks(g);
                if (!checks.connected) {
                    ++cell.skippedDisconnected;
                    continue;
                }
                if (checks.squareComplete) {
                    ++cell.skippedComplete;
                    continue;
                }
                graphs.push_back(std::move(g));
                ids.push_back("d" + std::to_string(d) + "_n" + std::to_string(n) + "_s" +
                              std::to_string(seed));
            }
            cell.accepted = static_cast<int>(graphs.size());
            std::vector<Report> reports = batchAnalyze(graphs, ids, 4, {false});
            std::ostringstream bytes;
            for (const Report& r : reports) {
                bytes << r.json.dump() << "\n";
                if (r.status != "pass") ++cell.violations;
            }
            cell.reportBytes = bytes.str();
            cells.push_back(std::move(cell));
        }
    return cells;
}

struct FamilyInstance {
    std::string name;
    Graph graph;
};

std::vector<FamilyInstance> structuredFamilies() {
    std::vector<FamilyInstance> out;
    for (int d : {7, 9})
        for (int k : {1, 2}) {
            for (int xp = 0; xp <= d - 5; xp += 2)
                out.push_back({"atail_d" + std::to_string(d) + "_k" + std::to_string(k) +
                                   "_xp" + std::to_string(xp),
                               makeATailGraph(d, k, xp).first});
            for (int xp = 2; xp <= d - 3; xp += 2)
                out.push_back({"btail_d" + std::to_string(d) + "_k" + std::to_string(k) +
                                   "_xp" + std::to_string(xp),
                               makeBTailGraph(d, k, xp).first});
        }
    for (int d : {7, 9}) {
        out.push_back({"multitail_d" + std::to_string(d) + "_111",
                       makeMultitailGraph(d, {1, 1, 1}).first});
        out.push_back({"multitail_d" + std::to_string(d) + "_122",
                       makeMultitailGraph(d, {1, 2, 2}).first});
        out.push_back({"multitail_d" + std::to_string(d) + "_222",
                       makeMultitailGraph(d, {2, 2, 2}).first});
    }
    return out;
}

}  // namespace

int main() {
    // 1. snake exact formulas (spec pins sum deg2 = (4k-2)(d-1)+8; the
    //    construction forced by the tail definition exceeds that by 2(k-2) for
    //    k >= 3 interior-segment connector pairs, so those combos fail here by
    //    design rather than quietly loosening the assertion)
    {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        for (int d : {7, 9, 11})
            for (int ka : {1, 2})
                for (int kb : {1, 2}) {
                    auto [g, meta] = makeSnake(d, ka, kb);
                    const int k = ka + kb;
                    long long wantN = 1LL * k * (d + 1) + 2;
                    long long wantSum = (4LL * k - 2) * (d - 1) + 8;
                    long long gotSum = dist2Profile(g).sumDeg2();
                    auto det = detectSnake(g);
                    bool okN = g.vertexCount() == wantN;
                    bool okSum = gotSum == wantSum;
                    bool okDet = det && det->d == d && det->kTotal == k;
                    if (!(okN && okSum && okDet)) {
                        pass = false;
                        detail += "[d=" + std::to_string(d) + ",kA=" + std::to_string(ka) +
                                  ",kB=" + std::to_string(kb) + ": " +
                                  (okN ? "" : "n mismatch ") +
                                  (okSum ? ""
                                         : "sumdeg2 " + std::to_string(gotSum) + " != " +
                                               std::to_string(wantSum) + " ") +
                                  (okDet ? "" : "detect failed") + "] ";
                    }
                }
        double t = seconds(start);
        if (!detail.empty())
            detail += "-- interior connector pairs add 2(k-2) the published formula omits";
        verdict(1, pass && t < 1.0, t, detail);
    }

    // 2. peanut exact formulas
    {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        for (int d : {8, 10, 12}) {
            auto [g, meta] = makePeanut(d);
            bool ok = g.vertexCount() == 2 * d + 3 &&
                      dist2Profile(g).sumDeg2() == 7LL * d - 4 &&
                      detectPeanut(g) == d;
            if (!ok) {
                pass = false;
                detail += "[d=" + std::to_string(d) + "] ";
            }
        }
        double t = seconds(start);
        verdict(2, pass && t < 1.0, t, detail);
    }

    // 3. theorem bound over the random corpus; reports retained for criterion 7
    std::vector<CorpusCell> corpus;
    {
        auto start = std::chrono::steady_clock::now();
        corpus = runCorpus();
        bool pass = true;
        std::string detail;
        for (const CorpusCell& cell : corpus) {
            if (cell.accepted < 100 || cell.violations > 0) {
                pass = false;
                detail += "[d=" + std::to_string(cell.d) + ",n=" + std::to_string(cell.n) +
                          ": accepted " + std::to_string(cell.accepted) + ", violations " +
                          std::to_string(cell.violations) + "] ";
            }
        }
        double t = seconds(start);
        detail += "18 cells x 100 graphs";
        verdict(3, pass && t < 120.0, t, detail);
    }

    // 4. lemma oracle suite across criteria 1-3 plus the closure families
    std::vector<FamilyInstance> families = structuredFamilies();
    {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        long long checked = 0;
        auto runSuite = [&](const Graph& g, const std::string& name) {
            for (auto& [lemma, result] : lemmaSuite(g)) {
                ++checked;
                if (result.status == "fail") {
                    pass = false;
                    if (detail.size() < 300)
                        detail += "[" + name + " " + lemma + ": " + result.note + "] ";
                }
            }
        };
        for (int d : {7, 9, 11})
            for (int ka : {1, 2})
                for (int kb : {1, 2})
                    runSuite(makeSnake(d, ka, kb).first,
                             "snake" + std::to_string(d) + std::to_string(ka) +
                                 std::to_string(kb));
        for (int d : {8, 10, 12}) runSuite(makePeanut(d).first, "peanut" + std::to_string(d));
        for (const FamilyInstance& f : families) runSuite(f.graph, f.name);
        // the random corpus lemma results already live in the criterion-3 reports
        long long corpusFails = 0;
        for (const CorpusCell& cell : corpus) {
            std::istringstream in(cell.reportBytes);
            std::string line;
            while (std::getline(in, line)) {
                auto j = nlohmann::ordered_json::parse(line);
                for (auto& [name, entry] : j["lemmas"].items())
                    if (entry["status"] == "fail") ++corpusFails;
            }
        }
        if (corpusFails > 0) {
            pass = false;
            detail += "[corpus lemma failures: " + std::to_string(corpusFails) + "] ";
        }
        double t = seconds(start);
        detail += std::to_string(checked) + " family verdicts + corpus reports";
        verdict(4, pass && t < 120.0, t, detail);
    }

    // 5. pairbook soundness on the structured families
    {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        for (const FamilyInstance& f : families) {
            const Graph& g = f.graph;
            BasicChecks checks = basicChecks(g);
            int d = checks.regularDegree.value_or(-1);
            Dist2Profile profile = dist2Profile(g);
            auto classes = regionEquivalence(g, profile, lowDegreeSet(profile));
            auto regions = buildAndClassifyRegions(g, profile, classes, d);
            auto tails = findTails(g, profile, regions, d);
            AssemblyResult assembly = assembleSuperregions(g, profile, regions, tails, d);
            ClassTable table = buildClassTable(g, profile, assembly, d);
            PairBook book = buildPairBook(g, profile, assembly, table, d);
            bool ok = book.violations.empty();
            for (const Collision& c : detectCollisions(book)) ok = ok && c.allowedType;
            for (size_t si = 0; si < book.perSuperregion.size(); ++si) {
                long long vCount = 0;
                for (int v : assembly.superregions[si].vertices)
                    if (table.inV(v)) ++vCount;
                if (static_cast<long long>(book.perSuperregion[si].size()) < 4 * vCount)
                    ok = false;
                for (const OrderedPair& p : book.perSuperregion[si])
                    if (!profile.inN2(p.x, p.y)) ok = false;
            }
            ResolutionStats stats =
                resolveCollisions(g, profile, assembly, table, book, d);
            if (!stats.unresolved.empty() || !detectCollisions(book).empty()) ok = false;
            if (!ok) {
                pass = false;
                detail += "[" + f.name + "] ";
            }
        }
        double t = seconds(start);
        detail += std::to_string(families.size()) + " closure instances (snakes and "
                  "peanuts are refused by the pair machinery by design)";
        verdict(5, pass, t, detail);
    }

    // 6. graph6 round trip and reference-decoder agreement
    {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            int n = 1 + static_cast<int>(seed % 62);
            Graph g = oracles::randomSimpleGraph(n, seed);
            std::string bytes = emitGraph6(g);
            if (!(parseGraph6(bytes) == g) || emitGraph6(parseGraph6(bytes)) != bytes) {
                pass = false;
                detail += "[roundtrip seed " + std::to_string(seed) + "] ";
                break;
            }
        }
        std::vector<std::pair<int, int>> k4edges;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) k4edges.emplace_back(i, j);
        Graph k4 = Graph::fromEdges(4, k4edges);
        if (!(oracles::decodeGraph6Reference(emitGraph6(k4)) == k4)) pass = false;
        Graph v1 = Graph::fromEdges(1, {});
        if (!(oracles::decodeGraph6Reference(emitGraph6(v1)) == v1)) pass = false;
        for (std::uint64_t seed = 5000; seed < 5020; ++seed) {
            Graph g = oracles::randomSimpleGraph(3 + static_cast<int>(seed % 50), seed);
            if (!(oracles::decodeGraph6Reference(emitGraph6(g)) == g)) {
                pass = false;
                detail += "[reference seed " + std::to_string(seed) + "] ";
            }
        }
        verdict(6, pass, seconds(start), detail + "1000 round trips, 22 reference checks");
    }

    // 7. determinism: identical seeds reproduce criterion 3 byte for byte
    {
        auto start = std::chrono::steady_clock::now();
        std::vector<CorpusCell> again = runCorpus();
        bool pass = again.size() == corpus.size();
        for (size_t i = 0; pass && i < corpus.size(); ++i)
            pass = corpus[i].reportBytes == again[i].reportBytes;
        verdict(7, pass, seconds(start), "rerun of the 1800-graph corpus is byte-identical");
    }

    // 8. external enumeration fixture, or the documented downgrade
    {
        auto start = std::chrono::steady_clock::now();
        const char* env = std::getenv("SQUAREWATCH_FIXTURE");
#ifdef SQUAREWATCH_FIXTURE_DEFAULT
        std::string path = env ? env : SQUAREWATCH_FIXTURE_DEFAULT;
#else
        std::string path = env ? env : "fixtures/conn7reg_le12.g6";
#endif
        std::ifstream in(path, std::ios::binary);
        bool pass = true;
        std::string detail;
        if (in) {
            LoadResult loaded = loadGraphs(in);
            int bad = static_cast<int>(loaded.errors.size());
            std::vector<Graph> graphs;
            std::vector<std::string> ids;
            for (auto& item : loaded.graphs) {
                graphs.push_back(item.graph);
                ids.push_back(path + ":" + std::to_string(item.line));
            }
            std::vector<Report> reports = batchAnalyze(graphs, ids, 4, {false});
            int violations = 0;
            for (const Report& r : reports) violations += r.status == "violation";
            pass = bad == 0 && violations == 0 && !reports.empty();
            detail = "fixture " + path + ": " + std::to_string(reports.size()) +
                     " graphs, " + std::to_string(violations) + " violations";
        } else {
            // test manifest: the 7-regular <= 12-vertex enumeration fixture is
            // not provided, so this criterion downgrades to the seeded-random
            // corpus of criterion 3, as the specification allows
            int violations = 0, accepted = 0;
            for (const CorpusCell& cell : corpus) {
                violations += cell.violations;
                accepted += cell.accepted;
            }
            pass = violations == 0 && accepted == 1800;
            detail = "fixture unavailable; downgraded to the criterion-3 corpus (" +
                     std::to_string(accepted) + " graphs, " + std::to_string(violations) +
                     " violations)";
        }
        verdict(8, pass, seconds(start), detail);
    }

    std::printf("acceptance: %d criterion failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
