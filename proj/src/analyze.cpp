#include "squarewatch/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "squarewatch/rational.hpp"

namespace squarewatch {

namespace {

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

bool inTheoremScope(const AnalysisData& data) {
    return data.checks.connected && data.checks.regularDegree && data.d > 6 &&
           !data.checks.squareComplete;
}

}  // namespace

AnalysisData runPipeline(const Graph& g) {
    AnalysisData data;
    data.checks = basicChecks(g);
    if (data.checks.regularDegree) data.d = *data.checks.regularDegree;
    data.profile = dist2Profile(g);
    if (!data.checks.connected || !data.checks.regularDegree) return data;

    try {
        auto classes = regionEquivalence(g, data.profile, lowDegreeSet(data.profile));
        data.regions = buildAndClassifyRegions(g, data.profile, classes, data.d);
        data.tails = findTails(g, data.profile, data.regions, data.d);
        data.tailVerdict = checkTailIntersection(data.tails);
        data.structureBuilt = true;
    } catch (const StructureError& e) {
        data.structureError = e.what();
        return data;
    }

    data.snake = detectSnake(g, data.profile, data.regions, data.tails, data.d);
    data.peanut = detectPeanut(g);
    if (data.snake) return data;  // superregion machinery requires a non-snake input

    data.assembly = assembleSuperregions(g, data.profile, data.regions, data.tails, data.d);
    data.table = buildClassTable(g, data.profile, *data.assembly, data.d);

    // the pair certificate is defined away from the two exception families
    if (data.peanut) return data;
    if (!inTheoremScope(data)) return data;

    data.book = buildPairBook(g, data.profile, *data.assembly, *data.table, data.d);
    data.preCollisions = detectCollisions(*data.book);
    data.resolution =
        resolveCollisions(g, data.profile, *data.assembly, *data.table, *data.book, data.d);
    data.bound = aggregateBound(g, data.profile, *data.book, *data.assembly, *data.table, data.d);
    return data;
}

namespace {

using LemmaList = std::vector<std::pair<std::string, LemmaResult>>;

void put(LemmaList& list, const std::string& name, bool pass, const std::string& witness) {
    list.emplace_back(name, LemmaResult{pass ? "pass" : "fail", pass ? "" : witness});
}

void skip(LemmaList& list, const std::string& name, const std::string& why) {
    list.emplace_back(name, LemmaResult{"skipped", why});
}

LemmaList evaluateLemmas(const Graph& g, const AnalysisData& data) {
    LemmaList out;
    if (!data.checks.connected || !data.checks.regularDegree) {
        for (const char* name :
             {"lemma_2_1", "lemma_3_2_part1", "lemma_3_2_part2", "lemma_3_2_part3",
              "lemma_3_2_part4", "lemma_3_2_part5", "lemma_3_3", "lemma_3_4", "lemma_3_5",
              "lemma_4_2", "lemma_4_3", "lemma_5_2", "lemma_5_3", "partition_theorem"})
            skip(out, name, "input is not a connected regular graph");
        return out;
    }
    const int d = data.d;
    const Dist2Profile& profile = data.profile;

    {  // deg2(u) >= d - deg2(v) + 1 for u in N2'(v)
        bool ok = true;
        std::string witness;
        for (int v = 0; v < g.vertexCount() && ok; ++v)
            for (int u : profile.n2prime[v])
                if (profile.deg2[u] < d - profile.deg2[v] + 1) {
                    ok = false;
                    witness = "v=" + std::to_string(v) + " u=" + std::to_string(u) +
                              " deg2(u)=" + std::to_string(profile.deg2[u]);
                    break;
                }
        put(out, "lemma_2_1", ok, witness);
    }

    if (!data.structureBuilt) {
        for (const char* name :
             {"lemma_3_2_part1", "lemma_3_2_part2", "lemma_3_2_part3", "lemma_3_2_part4",
              "lemma_3_2_part5", "lemma_3_3", "lemma_3_4", "lemma_3_5", "lemma_4_2",
              "lemma_4_3", "lemma_5_2", "lemma_5_3", "partition_theorem"})
            skip(out, name, "region structure unavailable: " + data.structureError);
        return out;
    }

    {  // Lemma 3.2, five parts
        bool p1 = true, p2 = true, p3 = true, p4 = true, p5 = true;
        std::string w1, w2, w3, w4, w5;
        for (size_t ri = 0; ri < data.regions.size(); ++ri) {
            const Region& r = data.regions[ri];
            const int size = static_cast<int>(r.vertices.size());
            if (p1 && size < d + 1) { p1 = false; w1 = "region " + std::to_string(ri); }
            if (p2) {
                for (int v : r.coreX) {
                    std::vector<int> ball = sortedUnion(
                        sortedUnion(g.neighbors(v), profile.n2[v]), {v});
                    if (!std::includes(ball.begin(), ball.end(), r.vertices.begin(),
                                       r.vertices.end())) {
                        p2 = false;
                        w2 = "region " + std::to_string(ri) + " v=" + std::to_string(v);
                        break;
                    }
                }
            }
            int t = 4;
            for (int v : r.vertices) t = std::min(t, profile.deg2[v]);
            if (p3 && size > d + t + 1) { p3 = false; w3 = "region " + std::to_string(ri); }
            if (p4 && size > d + 4) { p4 = false; w4 = "region " + std::to_string(ri); }
        }
        for (size_t a = 0; a < data.regions.size() && p5; ++a)
            for (size_t b = a + 1; b < data.regions.size(); ++b)
                if (!sortedIntersection(data.regions[a].vertices, data.regions[b].vertices)
                         .empty()) {
                    p5 = false;
                    w5 = "regions " + std::to_string(a) + " and " + std::to_string(b);
                    break;
                }
        put(out, "lemma_3_2_part1", p1, w1);
        put(out, "lemma_3_2_part2", p2, w2);
        put(out, "lemma_3_2_part3", p3, w3);
        put(out, "lemma_3_2_part4", p4, w4);
        put(out, "lemma_3_2_part5", p5, w5);
    }

    {  // C-region structure: Lemma 3.3 (shape), 3.4 (G_v = R, |V| >= 4), 3.5 (two u-neighbors)
        bool has = false, l33 = true, l34 = true, l35 = true;
        std::string w33, w34, w35;
        for (size_t ri = 0; ri < data.regions.size(); ++ri) {
            const Region& r = data.regions[ri];
            if (r.classLabel != RegionClass::C) continue;
            has = true;
            std::vector<int> cover = sortedUnion(sortedUnion(r.cVset, r.cNu), {r.witnessU});
            if (l33 && !std::includes(cover.begin(), cover.end(), r.vertices.begin(),
                                      r.vertices.end())) {
                l33 = false;
                w33 = "region " + std::to_string(ri);
            }
            std::vector<int> gv = componentWithout(g, r.witnessU, r.witnessV);
            if (l34 && (gv != r.vertices || r.cVset.size() < 4 || r.contains(r.witnessU))) {
                l34 = false;
                w34 = "region " + std::to_string(ri);
            }
            if (l35 && r.cNu.size() < 2) {
                l35 = false;
                w35 = "region " + std::to_string(ri);
            }
        }
        if (!has) {
            skip(out, "lemma_3_3", "no C regions");
            skip(out, "lemma_3_4", "no C regions");
            skip(out, "lemma_3_5", "no C regions");
        } else {
            put(out, "lemma_3_3", l33, w33);
            put(out, "lemma_3_4", l34, w34);
            put(out, "lemma_3_5", l35, w35);
        }
    }

    if (data.book) {
        bool ok = true;
        std::string witness;
        for (const Collision& c : data.preCollisions)
            if (!c.allowedType) {
                ok = false;
                witness = "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ") " + c.note;
                break;
            }
        put(out, "lemma_4_2", ok, witness);

        bool ok43 = true;
        std::string w43;
        for (size_t si = 0; si < data.book->perSuperregion.size() && ok43; ++si) {
            std::map<int, int> s3count;
            for (const OrderedPair& p : data.book->perSuperregion[si])
                if (p.tag == PairTag::S3) ++s3count[p.y];
            for (auto [y, count] : s3count)
                if (profile.deg2[y] <= 3 && count > 4 - profile.deg2[y]) {
                    ok43 = false;
                    w43 = "superregion " + std::to_string(si) + " y=" + std::to_string(y);
                    break;
                }
        }
        put(out, "lemma_4_3", ok43, w43);
    } else {
        skip(out, "lemma_4_2", "pair certificate not built for this input");
        skip(out, "lemma_4_3", "pair certificate not built for this input");
    }

    {  // tail intersection: incomparable overlap is legal only on a snake
        bool ok = data.tailVerdict.consistent || data.snake.has_value();
        std::string witness;
        if (!ok && !data.tailVerdict.offendingPairs.empty())
            witness = "tails " + std::to_string(data.tailVerdict.offendingPairs[0].first) +
                      " and " + std::to_string(data.tailVerdict.offendingPairs[0].second) +
                      " intersect without containment on a non-snake graph";
        put(out, "lemma_5_2", ok, witness);
    }

    if (data.assembly) {
        bool has = false, ok = true;
        std::string witness;
        for (size_t si = 0; si < data.assembly->superregions.size(); ++si) {
            const Superregion& s = data.assembly->superregions[si];
            if (s.kind != SuperregionKind::ATail && s.kind != SuperregionKind::BTail) continue;
            has = true;
            std::vector<int> cands = linkVertexCandidates(g, s.headVertices);
            if (cands != std::vector<int>{s.uT}) {
                ok = false;
                witness = "superregion " + std::to_string(si) + " candidates != {u_T}";
                break;
            }
        }
        if (!has) skip(out, "lemma_5_3", "no A/B tails");
        else put(out, "lemma_5_3", ok, witness);
    } else {
        skip(out, "lemma_5_3", data.snake ? "snake graph" : "assembly unavailable");
    }

    if (data.snake) {
        skip(out, "partition_theorem", "snake graphs are excluded by the theorem statement");
    } else if (!data.assembly) {
        skip(out, "partition_theorem", "assembly unavailable");
    } else {
        PartitionVerdict v = verifyPartition(g, *data.assembly);
        std::string witness;
        if (!v.holds) {
            if (!v.uncovered.empty())
                witness = "uncovered vertex " + std::to_string(v.uncovered.front());
            else
                witness = "vertex " + std::to_string(v.multiplyCovered.front()) +
                          " in two superregions";
        }
        put(out, "partition_theorem", v.holds, witness);
    }
    return out;
}

}  // namespace

std::vector<std::pair<std::string, LemmaResult>> lemmaSuite(const Graph& g,
                                                            const AnalysisData& data) {
    return evaluateLemmas(g, data);
}

std::vector<std::pair<std::string, LemmaResult>> lemmaSuite(const Graph& g) {
    AnalysisData data = runPipeline(g);
    return evaluateLemmas(g, data);
}

Report analyze(const Graph& g, const std::string& inputId, const AnalyzeOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    AnalysisData data = runPipeline(g);
    LemmaList lemmas = evaluateLemmas(g, data);

    nlohmann::ordered_json j;
    j["input"] = inputId;
    j["n"] = g.vertexCount();
    j["d"] = data.d;
    j["connected"] = data.checks.connected;
    j["regular"] = data.checks.regularDegree.has_value();
    j["square_complete"] = data.checks.squareComplete;

    const long long e = g.edgeCount();
    const long long sumDeg2 = data.profile.sumDeg2();
    j["edges"] = e;
    j["edges_square"] = e + sumDeg2 / 2;
    j["sum_deg2"] = sumDeg2;

    if (data.d >= 4) {
        Rational rhs = theoremRhs(g.vertexCount(), data.d);
        j["rhs"] = {{"num", rhs.num()}, {"den", rhs.den()}, {"decimal", rhs.decimal()}};
    } else {
        j["rhs"] = nullptr;
    }

    std::vector<std::string> violations;
    std::string status;
    if (!data.checks.connected || !data.checks.regularDegree || data.d <= 6 ||
        data.checks.squareComplete) {
        status = "out-of-scope";
        std::string reason;
        if (!data.checks.connected) reason = "disconnected";
        else if (!data.checks.regularDegree) reason = "not regular";
        else if (data.d <= 6) reason = "d <= 6";
        else reason = "square complete";
        j["scope_note"] = reason;
    } else if (data.snake) {
        status = "exception-snake";
        j["exception"] = {{"kind", "snake"}, {"d", data.snake->d},
                          {"k_total", data.snake->kTotal}};
    } else if (data.peanut) {
        status = "exception-peanut";
        j["exception"] = {{"kind", "peanut"}, {"d", *data.peanut}};
    } else {
        status = "pass";
        if (!data.structureBuilt)
            violations.push_back("structure: " + data.structureError);
        if (data.assembly)
            for (const std::string& f : data.assembly->flags)
                violations.push_back("assembly: " + f);
        if (data.table)
            for (const std::string& f : data.table->issues)
                violations.push_back("class-table: " + f);
        if (data.book) {
            for (const std::string& f : data.book->violations)
                violations.push_back("pairs: " + f);
            for (const std::string& f : data.resolution.unresolved)
                violations.push_back("collision: " + f);
            if (data.bound) {
                for (const std::string& f : data.bound->perSuperregionViolations)
                    violations.push_back("bound: " + f);
                if (!data.bound->pairBoundHolds)
                    violations.push_back("bound: sum |S_R| < 4|V|");
                if (!data.bound->theoremHolds)
                    violations.push_back("bound: e(G^2) - e(G) <= rhs");
            }
        } else {
            violations.push_back("pipeline: pair certificate missing for in-scope input");
        }
        for (const auto& [name, result] : lemmas)
            if (result.status == "fail")
                violations.push_back("lemma " + name + ": " + result.note);
        if (!violations.empty()) status = "violation";
    }
    j["status"] = status;

    // superregion census (when assembled)
    nlohmann::ordered_json census;
    const char* censusKeys[] = {"singleton", "region_A", "region_C", "region_D", "region_E",
                                "region_F", "region_G", "tail", "multitail", "a_tail", "b_tail"};
    for (const char* key : censusKeys) census[key] = 0;
    if (data.assembly) {
        for (const Superregion& s : data.assembly->superregions) {
            switch (s.kind) {
                case SuperregionKind::Singleton: census["singleton"] = census["singleton"].get<int>() + 1; break;
                case SuperregionKind::PlainRegion: {
                    std::string key = std::string("region_") + regionClassName(s.regionClass);
                    census[key] = census[key].get<int>() + 1;
                    break;
                }
                case SuperregionKind::Tail: census["tail"] = census["tail"].get<int>() + 1; break;
                case SuperregionKind::Multitail: census["multitail"] = census["multitail"].get<int>() + 1; break;
                case SuperregionKind::ATail: census["a_tail"] = census["a_tail"].get<int>() + 1; break;
                case SuperregionKind::BTail: census["b_tail"] = census["b_tail"].get<int>() + 1; break;
            }
        }
        j["superregions"] = census;
    } else {
        j["superregions"] = nullptr;
    }

    nlohmann::ordered_json lj;
    for (const auto& [name, result] : lemmas) {
        nlohmann::ordered_json entry;
        entry["status"] = result.status;
        if (!result.note.empty()) entry["note"] = result.note;
        lj[name] = entry;
    }
    j["lemmas"] = lj;

    if (data.book) {
        j["pairs"] = {{"total", data.book->totalPairs()},
                      {"four_v", data.bound ? data.bound->fourV : 0},
                      {"sum_bound_holds", data.bound && data.bound->pairBoundHolds},
                      {"shortcut_u", data.bound && data.bound->shortcutU},
                      {"collisions_found", data.resolution.found},
                      {"collisions_resolved", data.resolution.resolved},
                      {"collisions_unresolved",
                       static_cast<int>(data.resolution.unresolved.size())}};
    } else {
        j["pairs"] = nullptr;
    }

    if (!violations.empty()) j["violations"] = violations;

    if (opts.timing) {
        const auto end = std::chrono::steady_clock::now();
        j["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    }

    Report report;
    report.input = inputId;
    report.status = status;
    report.json = std::move(j);
    return report;
}

std::vector<Report> batchAnalyze(const std::vector<Graph>& graphs,
                                 const std::vector<std::string>& inputIds, int jobs,
                                 const AnalyzeOptions& opts) {
    std::vector<Report> reports(graphs.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, std::max<int>(1, static_cast<int>(graphs.size())));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            reports[i] = analyze(graphs[i], inputIds[i], opts);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return reports;
}

nlohmann::ordered_json batchSummary(const std::vector<Report>& reports) {
    nlohmann::ordered_json summary;
    summary["graphs"] = reports.size();
    std::map<std::string, int> byStatus;
    for (const Report& r : reports) ++byStatus[r.status];
    nlohmann::ordered_json statuses;
    for (const char* key :
         {"pass", "exception-snake", "exception-peanut", "out-of-scope", "violation"})
        statuses[key] = byStatus.count(key) ? byStatus[key] : 0;
    summary["statuses"] = statuses;
    return summary;
}

}  // namespace squarewatch
