#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mcd/generators.hpp"
#include "mcd/graph.hpp"

namespace mcd {

inline constexpr const char* kToolName = "mcd";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct RunOptions {
    int jobs = 0;                      // 0 = library default
    std::uint64_t seed = 0;
    int count = 1000;                  // random/maximal corpus size
    double p = -1.0;                   // edge probability; negative = draw per graph
    std::vector<std::pair<long long, long long>> alphas{{1, 24}, {1, 15}};
    long long budget = -1;             // search: max graphs scanned, -1 = unlimited
};

struct NRange {
    int lo = 0;
    int hi = 0;
};
NRange parse_n_range(const std::string& text);    // "5..9" or "7"

struct Corpus {
    std::string description;
    std::vector<CorpusItem> items;
};

// verify/search corpora: enumerated | all | random | maximal | file:PATH
Corpus make_corpus(const std::string& spec, const NRange& range, const RunOptions& opt);

// analyze inputs: a path ("-" = stdin), or named:EXPR, blowup:PAT:[sizes],
// balanced:PAT:N, g6:STRING
Corpus make_input_source(const std::string& input);

// short pattern names (C5, K4, K3,3, P4, HM) or full named_graph expressions
Graph parse_pattern(const std::string& text);

struct Report {
    nlohmann::json doc;
    long long violations = 0;
};

// One fully analyzed record per graph: order, degrees, delta2, odd girth,
// freeness predicates, homomorphism to C5 (constructive route first, then
// the exhaustive search), and blow-up recognition.
Report run_analyze(const std::string& input, const RunOptions& opt);

// Scan a corpus with one of the statement checkers and count violations.
Report run_verify(const std::string& theorem, const std::string& corpus_spec, const NRange& range,
                  const RunOptions& opt);
std::vector<std::string> verify_theorem_ids();

// Conjunctive predicate over named invariants, e.g.
//   "triangle-free & delta2 = n/8 & !hom-c5"
Report run_search(const std::string& predicate, const std::string& corpus_spec, const NRange& range,
                  const RunOptions& opt);

// Write one graph6 line per generated graph; returns how many.
long long run_generate(const std::string& family, std::ostream& out, const RunOptions& opt);

std::string render_report(const Report& report, const std::string& format);   // "json" | "text"

} // namespace mcd
