#ifndef SQUAREWATCH_ANALYZE_HPP
#define SQUAREWATCH_ANALYZE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "squarewatch/decomposition.hpp"
#include "squarewatch/graph.hpp"
#include "squarewatch/pairbook.hpp"

namespace squarewatch {

struct LemmaResult {
    std::string status;  // pass | fail | skipped
    std::string note;    // first counterexample or skip reason
};

struct AnalyzeOptions {
    bool timing = true;
};

/// Everything the pipeline computed for one graph; optional stages stay empty
/// when out of scope (disconnected, irregular, d <= 6, complete square, snake).
struct AnalysisData {
    BasicChecks checks;
    int d = -1;
    Dist2Profile profile;
    bool structureBuilt = false;
    std::string structureError;
    std::vector<Region> regions;
    std::vector<Tail> tails;
    TailIntersectionVerdict tailVerdict;
    std::optional<SnakeInfo> snake;
    std::optional<int> peanut;
    std::optional<AssemblyResult> assembly;
    std::optional<ClassTable> table;
    std::optional<PairBook> book;  // after resolution
    std::vector<Collision> preCollisions;
    ResolutionStats resolution;
    std::optional<BoundReport> bound;
};

AnalysisData runPipeline(const Graph& g);

std::vector<std::pair<std::string, LemmaResult>> lemmaSuite(const Graph& g);
std::vector<std::pair<std::string, LemmaResult>> lemmaSuite(const Graph& g,
                                                            const AnalysisData& data);

struct Report {
    std::string input;
    std::string status;  // pass | exception-snake | exception-peanut | out-of-scope | violation
    nlohmann::ordered_json json;
};

Report analyze(const Graph& g, const std::string& inputId, const AnalyzeOptions& opts = {});

/// One report per graph, order preserved regardless of the worker count.
std::vector<Report> batchAnalyze(const std::vector<Graph>& graphs,
                                 const std::vector<std::string>& inputIds, int jobs,
                                 const AnalyzeOptions& opts = {});

nlohmann::ordered_json batchSummary(const std::vector<Report>& reports);

}  // namespace squarewatch

#endif
