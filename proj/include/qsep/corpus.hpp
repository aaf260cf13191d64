#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsep/measure.hpp"

namespace qsep {

/// |computed E - expected E| must stay within this for a corpus row to pass.
inline constexpr double kCorpusTolerance = 1e-9;

struct CorpusEntry {
    std::string expr;
    std::optional<int> dim;
    double expected_E = 0.0;
    std::string source;
};

struct CorpusVerdict {
    CorpusEntry entry;
    double computed_E = 0.0;
    double abs_diff = 0.0;
    bool passed = false;
    std::string error;  // nonempty when the entry failed to evaluate
};

/// The embedded golden set: eleven pure states with known measure values
/// (Bell pair, balanced plus pair, Schmidt pairs, qutrit and ququart
/// two-term superpositions, the three-term qutrit cases).
const std::vector<CorpusEntry>& builtin_corpus();

/// Reads one JSON object per line: {"expr": str, "dim": int|null,
/// "expected_E": num, "source": str}. dim and source are optional.
/// Throws std::runtime_error on malformed lines.
std::vector<CorpusEntry> load_corpus_jsonl(std::istream& in);

/// Evaluates E for every entry and compares against expected_E at
/// kCorpusTolerance. Failures (including entries that do not parse) are
/// data in the verdicts, never exceptions.
std::vector<CorpusVerdict> corpus_verify(const std::vector<CorpusEntry>& entries,
                                         const MeasureOptions& options = {});

}  // namespace qsep
