#pragma once

#include <string>
#include <vector>

#include "qsep/corpus.hpp"
#include "qsep/measure.hpp"
#include "qsep/state.hpp"

namespace qsep {

inline constexpr const char* kToolVersion = "0.1.0";

/// Serializes a measure run to one JSON document:
///
/// {"input": str, "dims": [int], "lambda_max": int, "method": str,
///  "sites": [{"site": int, "l": int, "distinct_eigenvalues": [int],
///             "eta": float, "alpha": float|null, "factorable": bool,
///             "max_expectation": float,
///             "direction": {"theta": float, "phi": float}|null}],
///  "gamma": float, "E": float, "warnings": [str],
///  "version": str, "elapsed_ms": float}
///
/// Floats are written with 17 significant digits so every double
/// round-trips exactly. `extra_warnings` (e.g. from parsing) are listed
/// before the report's own.
std::string report_to_json(const std::string& input, const PureState& state,
                           const MeasureReport& report,
                           const std::vector<std::string>& extra_warnings,
                           double elapsed_ms);

/// Human-readable table, 6 significant digits.
std::string report_to_table(const std::string& input, const PureState& state,
                            const MeasureReport& report,
                            const std::vector<std::string>& extra_warnings);

/// One row per corpus verdict plus a summary line.
std::string corpus_to_table(const std::vector<CorpusVerdict>& verdicts);

}  // namespace qsep
