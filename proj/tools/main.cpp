#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "squarewatch/analyze.hpp"
#include "squarewatch/families.hpp"
#include "squarewatch/graph6.hpp"

namespace {

using namespace squarewatch;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::uint64_t resolveSeed(std::uint64_t seedFlag, bool seedGiven) {
    if (seedGiven) return seedFlag;
    if (const char* env = std::getenv("SQUAREWATCH_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "SQUAREWATCH_SEED is not a valid integer\n";
            std::exit(kExitUsage);
        }
    }
    return seedFlag;
}

LoadResult loadFromPath(const std::string& path) {
    if (path == "-") return loadGraphs(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(kExitUsage);
    }
    return loadGraphs(in);
}

void writeOutput(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << outPath << "\n";
        std::exit(kExitUsage);
    }
    out << text;
}

std::string renderGraphs(const std::vector<Graph>& graphs, const std::string& format) {
    std::ostringstream out;
    for (const Graph& g : graphs) {
        if (format == "adj") out << emitAdjacencyList(g);
        else out << emitGraph6(g) << "\n";
    }
    return out.str();
}

int statusExitCode(const std::vector<Report>& reports, bool parseErrors) {
    for (const Report& r : reports)
        if (r.status == "violation") return kExitViolation;
    return parseErrors ? kExitUsage : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squarewatch: structural verification for squares of regular graphs"};
    app.require_subcommand(1);

    // analyze
    std::string analyzePath;
    bool analyzeNoTiming = false;
    auto* cmdAnalyze = app.add_subcommand("analyze", "analyze a single graph file");
    cmdAnalyze->add_option("file", analyzePath)->required();
    cmdAnalyze->add_flag("--no-timing", analyzeNoTiming);

    // batch
    std::string batchPath;
    int jobs = 1;
    bool batchNoTiming = false;
    auto* cmdBatch = app.add_subcommand("batch", "analyze a graph6 stream, one report per line");
    cmdBatch->add_option("file", batchPath, "input path or - for stdin")->required();
    cmdBatch->add_option("--jobs", jobs, "worker threads");
    cmdBatch->add_flag("--no-timing", batchNoTiming);

    // lemmas
    std::string lemmasPath;
    auto* cmdLemmas = app.add_subcommand("lemmas", "run the lemma oracle suite");
    cmdLemmas->add_option("file", lemmasPath)->required();

    // generate
    auto* cmdGenerate = app.add_subcommand("generate", "construct a named family");
    cmdGenerate->require_subcommand(1);
    std::string outPath, format = "g6";
    int genD = 7, genKA = 1, genKB = 1, genK = 1, genXPrime = 0, genN = 30, genCount = 1;
    std::uint64_t genSeed = 1;
    bool genSeedGiven = false;
    std::vector<int> genCounts;
    auto addCommonOutput = [&](CLI::App* sub) {
        sub->add_option("--out", outPath, "output file (default stdout)");
        sub->add_option("--format", format)->check(CLI::IsMember({"g6", "adj"}));
    };
    auto* genSnake = cmdGenerate->add_subcommand("snake");
    genSnake->add_option("--d", genD)->required();
    genSnake->add_option("--ka", genKA)->required();
    genSnake->add_option("--kb", genKB)->required();
    addCommonOutput(genSnake);
    auto* genPeanut = cmdGenerate->add_subcommand("peanut");
    genPeanut->add_option("--d", genD)->required();
    addCommonOutput(genPeanut);
    auto* genATail = cmdGenerate->add_subcommand("atail");
    genATail->add_option("--d", genD)->required();
    genATail->add_option("--k", genK)->required();
    genATail->add_option("--xprime", genXPrime)->required();
    addCommonOutput(genATail);
    auto* genBTail = cmdGenerate->add_subcommand("btail");
    genBTail->add_option("--d", genD)->required();
    genBTail->add_option("--k", genK)->required();
    genBTail->add_option("--xprime", genXPrime)->required();
    addCommonOutput(genBTail);
    auto* genMultitail = cmdGenerate->add_subcommand("multitail");
    genMultitail->add_option("--d", genD)->required();
    genMultitail->add_option("--counts", genCounts, "segment count per tail")->required();
    addCommonOutput(genMultitail);
    auto* genRandom = cmdGenerate->add_subcommand("random");
    genRandom->add_option("--n", genN)->required();
    genRandom->add_option("--d", genD)->required();
    genRandom->add_option("--count", genCount);
    genRandom->add_option("--seed", genSeed)->each([&](const std::string&) { genSeedGiven = true; });
    addCommonOutput(genRandom);

    // random (top-level corpus generator)
    int rndN = 30, rndD = 7, rndCount = 1;
    std::uint64_t rndSeed = 1;
    bool rndSeedGiven = false;
    std::string rndOut, rndFormat = "g6";
    auto* cmdRandom = app.add_subcommand("random", "emit seeded random d-regular graphs");
    cmdRandom->add_option("--n", rndN)->required();
    cmdRandom->add_option("--d", rndD)->required();
    cmdRandom->add_option("--count", rndCount);
    cmdRandom->add_option("--seed", rndSeed)->each([&](const std::string&) { rndSeedGiven = true; });
    cmdRandom->add_option("--out", rndOut);
    cmdRandom->add_option("--format", rndFormat)->check(CLI::IsMember({"g6", "adj"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmdAnalyze) {
            LoadResult loaded = loadFromPath(analyzePath);
            for (const auto& [line, message] : loaded.errors)
                std::cerr << analyzePath << ":" << line << ": " << message << "\n";
            if (loaded.graphs.size() != 1) {
                std::cerr << "analyze expects exactly one graph, found "
                          << loaded.graphs.size() << "\n";
                return kExitUsage;
            }
            AnalyzeOptions opts;
            opts.timing = !analyzeNoTiming;
            Report report = analyze(loaded.graphs[0].graph, analyzePath, opts);
            std::cout << report.json.dump() << "\n";
            return statusExitCode({report}, !loaded.errors.empty());
        }

        if (*cmdBatch) {
            LoadResult loaded = loadFromPath(batchPath);
            std::vector<Graph> graphs;
            std::vector<std::string> ids;
            for (const auto& item : loaded.graphs) {
                graphs.push_back(item.graph);
                ids.push_back(batchPath + ":" + std::to_string(item.line));
            }
            AnalyzeOptions opts;
            opts.timing = !batchNoTiming;
            std::vector<Report> reports = batchAnalyze(graphs, ids, jobs, opts);
            size_t nextError = 0;
            // reports in input order; parse failures emitted inline at their line slots
            for (const Report& r : reports) {
                while (nextError < loaded.errors.size()) {
                    int errLine = loaded.errors[nextError].first;
                    int lineOfReport = std::stoi(r.input.substr(r.input.rfind(':') + 1));
                    if (errLine > lineOfReport) break;
                    nlohmann::ordered_json ej = {{"input", batchPath + ":" + std::to_string(errLine)},
                                                 {"error", loaded.errors[nextError].second}};
                    std::cout << ej.dump() << "\n";
                    ++nextError;
                }
                std::cout << r.json.dump() << "\n";
            }
            for (; nextError < loaded.errors.size(); ++nextError) {
                nlohmann::ordered_json ej = {
                    {"input", batchPath + ":" + std::to_string(loaded.errors[nextError].first)},
                    {"error", loaded.errors[nextError].second}};
                std::cout << ej.dump() << "\n";
            }
            std::cout << batchSummary(reports).dump() << "\n";
            return statusExitCode(reports, !loaded.errors.empty());
        }

        if (*cmdLemmas) {
            LoadResult loaded = loadFromPath(lemmasPath);
            for (const auto& [line, message] : loaded.errors)
                std::cerr << lemmasPath << ":" << line << ": " << message << "\n";
            bool anyFail = false;
            for (const auto& item : loaded.graphs) {
                auto verdicts = lemmaSuite(item.graph);
                nlohmann::ordered_json j;
                j["input"] = lemmasPath + ":" + std::to_string(item.line);
                nlohmann::ordered_json lj;
                for (const auto& [name, result] : verdicts) {
                    nlohmann::ordered_json entry;
                    entry["status"] = result.status;
                    if (!result.note.empty()) entry["note"] = result.note;
                    lj[name] = entry;
                    if (result.status == "fail") anyFail = true;
                }
                j["lemmas"] = lj;
                std::cout << j.dump() << "\n";
            }
            if (anyFail) return kExitViolation;
            return loaded.errors.empty() ? kExitOk : kExitUsage;
        }

        if (*cmdGenerate) {
            std::vector<Graph> graphs;
            if (*genSnake) graphs.push_back(makeSnake(genD, genKA, genKB).first);
            else if (*genPeanut) graphs.push_back(makePeanut(genD).first);
            else if (*genATail) graphs.push_back(makeATailGraph(genD, genK, genXPrime).first);
            else if (*genBTail) graphs.push_back(makeBTailGraph(genD, genK, genXPrime).first);
            else if (*genMultitail) graphs.push_back(makeMultitailGraph(genD, genCounts).first);
            else if (*genRandom) {
                std::uint64_t seed = resolveSeed(genSeed, genSeedGiven);
                for (int i = 0; i < genCount; ++i)
                    graphs.push_back(randomRegular(genN, genD, seed + static_cast<std::uint64_t>(i)));
            }
            writeOutput(renderGraphs(graphs, format), outPath);
            return kExitOk;
        }

        if (*cmdRandom) {
            std::uint64_t seed = resolveSeed(rndSeed, rndSeedGiven);
            std::vector<Graph> graphs;
            for (int i = 0; i < rndCount; ++i)
                graphs.push_back(randomRegular(rndN, rndD, seed + static_cast<std::uint64_t>(i)));
            writeOutput(renderGraphs(graphs, rndFormat), rndOut);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
