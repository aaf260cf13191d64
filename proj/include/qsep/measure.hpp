#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsep/errors.hpp"
#include "qsep/expectation.hpp"
#include "qsep/state.hpp"

namespace qsep {

/// Warning codes carried on a MeasureReport.
inline constexpr const char* kWarnSeparableNonzeroE = "separable-nonzero-E";
inline constexpr const char* kWarnNegativeE = "negative-E";

/// Per-site eigenvalue bookkeeping behind the separability index.
///
/// eta is the mean of the *distinct* eigenvalues present among the
/// state's components (the offset a fully entangled combination of those
/// levels would measure); alpha = l*(d-1) / sum_j |lambda_ij - eta| over
/// all l components *without* deduplication. A factorable site (constant
/// digit across components) short-circuits the calibration: eta is
/// reported as 0 and alpha is absent.
struct SiteProfile {
    int site = 0;                         // 1-based
    int l = 0;                            // component count of the state
    std::vector<int> distinct_eigenvalues;  // descending
    double eta = 0.0;
    std::optional<double> alpha;          // absent iff factorable
    bool factorable = false;
};

struct SiteReport {
    SiteProfile profile;
    MaxExpectation max_expectation;
};

struct MeasureOptions {
    Method method = Method::analytic;
    int grid_steps = 64;
    int refine_rounds = 8;
};

struct GammaBreakdown {
    double gamma = 0.0;
    std::vector<SiteReport> sites;
};

/// Full result: separability index gamma, lambda_max = d-1, and the
/// measure E = lambda_max - gamma, reported unclamped together with
/// per-site detail and diagnostic warnings.
struct MeasureReport {
    double gamma = 0.0;
    int lambda_max = 0;
    double E = 0.0;
    std::vector<SiteReport> sites;
    Method method = Method::analytic;
    std::vector<std::string> warnings;
};

/// Eigenvalue bookkeeping for one site. Requires a uniform local
/// dimension (UnsupportedStateError otherwise); throws NumericError if
/// the alpha denominator vanishes on a non-factorable site.
SiteProfile site_profile(const PureState& state, int site);

/// Separability index: gamma = (sum_i term_i) / N with
///   term_i = lambda_max                             for factorable sites,
///   term_i = alpha_i * |max<sigma_i> - eta_i|       otherwise.
/// For qubits this reduces to the plain mean of per-site maxima.
/// Requires uniform d and N >= 2.
GammaBreakdown separability_index(const PureState& state,
                                  const MeasureOptions& options = {});

/// E = (d-1) - gamma, with warnings:
///   separable-nonzero-E   fully product state but |E| > 1e-9
///   negative-E            E < -1e-9
MeasureReport entanglement(const PureState& state,
                           const MeasureOptions& options = {});

}  // namespace qsep
