#include "qsep/corpus.hpp"

#include <json.hpp>

#include <cmath>
#include <future>
#include <istream>
#include <limits>

#include "qsep/parse.hpp"

namespace qsep {

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"1/sqrt(2)|01> + 1/sqrt(2)|10>", std::nullopt, 1.0, "bell pair"},
        {"1/2|00> + 1/2|01> + 1/2|10> + 1/2|11>", std::nullopt, 0.0,
         "product of two plus states"},
        {"1/2|00> + sqrt(3)/2|11>", std::nullopt, 0.5, "two-qubit schmidt pair"},
        {"1/sqrt(5)|011> + 2/sqrt(5)|100>", std::nullopt, 0.4,
         "three-qubit two-term superposition"},
        {"1/2|02> + sqrt(3)/2|20>", std::nullopt, 1.0, "qutrit pair, extremal levels"},
        {"1/2|01> + sqrt(3)/2|20>", std::nullopt, 1.0, "qutrit pair, mixed levels"},
        {"1/sqrt(3)|00> + 1/sqrt(3)|11> + 1/sqrt(3)|22>", std::nullopt, 2.0,
         "maximally entangled qutrit pair"},
        {"1/sqrt(3)|00> + 1/sqrt(2)|11> + 1/sqrt(6)|20>", std::nullopt, 1.75,
         "unbalanced three-term qutrit pair"},
        {"1/sqrt(5)|01> + 2/sqrt(5)|10>", 4, 1.2, "ququart pair, low levels"},
        {"1/sqrt(5)|03> + 2/sqrt(5)|30>", 4, 1.2, "ququart pair, extremal levels"},
        {"1/sqrt(5)|12> + 2/sqrt(5)|21>", 4, 1.2, "ququart pair, middle levels"},
    };
    return corpus;
}

std::vector<CorpusEntry> load_corpus_jsonl(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("corpus line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
        if (!j.is_object() || !j.contains("expr") || !j.contains("expected_E") ||
            !j["expr"].is_string() || !j["expected_E"].is_number()) {
            throw std::runtime_error("corpus line " + std::to_string(line_no) +
                                     ": need {\"expr\": str, \"expected_E\": num}");
        }
        CorpusEntry entry;
        entry.expr = j["expr"].get<std::string>();
        entry.expected_E = j["expected_E"].get<double>();
        if (j.contains("dim") && !j["dim"].is_null()) {
            entry.dim = j["dim"].get<int>();
        }
        if (j.contains("source") && j["source"].is_string()) {
            entry.source = j["source"].get<std::string>();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

namespace {

CorpusVerdict verify_one(const CorpusEntry& entry, const MeasureOptions& options) {
    CorpusVerdict verdict;
    verdict.entry = entry;
    try {
        const ParseResult parsed = parse_state(entry.expr, entry.dim);
        const MeasureReport report = entanglement(parsed.state, options);
        verdict.computed_E = report.E;
        verdict.abs_diff = std::abs(report.E - entry.expected_E);
        verdict.passed = verdict.abs_diff <= kCorpusTolerance;
    } catch (const std::exception& e) {
        verdict.computed_E = std::numeric_limits<double>::quiet_NaN();
        verdict.abs_diff = std::numeric_limits<double>::infinity();
        verdict.passed = false;
        verdict.error = e.what();
    }
    return verdict;
}

}  // namespace

std::vector<CorpusVerdict> corpus_verify(const std::vector<CorpusEntry>& entries,
                                         const MeasureOptions& options) {
    // entries are independent; evaluate concurrently, assemble in input order
    std::vector<std::future<CorpusVerdict>> futures;
    futures.reserve(entries.size());
    for (const CorpusEntry& entry : entries) {
        futures.push_back(std::async(std::launch::async, verify_one, std::cref(entry),
                                     std::cref(options)));
    }
    std::vector<CorpusVerdict> verdicts;
    verdicts.reserve(entries.size());
    for (std::future<CorpusVerdict>& f : futures) verdicts.push_back(f.get());
    return verdicts;
}

}  // namespace qsep
