#include "qsep/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qsep/spin_ops.hpp"

namespace qsep {

namespace {

constexpr double kWarnThreshold = 1e-9;

int require_uniform_dim(const PureState& state) {
    const auto d = state.uniform_dim();
    if (!d) {
        throw UnsupportedStateError(
            "heterogeneous local dimensions are not supported by the measure");
    }
    return *d;
}

}  // namespace

SiteProfile site_profile(const PureState& state, int site) {
    const int d = require_uniform_dim(state);
    state.dim(site);  // range check

    const std::vector<BasisComponent> comps = components(state);

    SiteProfile profile;
    profile.site = site;
    profile.l = static_cast<int>(comps.size());
    profile.factorable = is_factorable_site(state, site);

    std::vector<int> lambdas;
    lambdas.reserve(comps.size());
    for (const BasisComponent& comp : comps) {
        lambdas.push_back(eigenvalue_of_digit(d, comp.digits[site - 1]));
    }
    std::vector<int> distinct = lambdas;
    std::sort(distinct.begin(), distinct.end(), std::greater<int>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    profile.distinct_eigenvalues = std::move(distinct);

    if (profile.factorable) {
        // The site tensors out as a basis state; the calibration pair is
        // undefined here and the index term is pinned to lambda_max.
        profile.eta = 0.0;
        return profile;
    }

    long long distinct_sum = 0;
    for (int lam : profile.distinct_eigenvalues) distinct_sum += lam;
    profile.eta = static_cast<double>(std::llabs(distinct_sum)) /
                  static_cast<double>(profile.distinct_eigenvalues.size());

    double deviation_sum = 0.0;  // over all components, repetitions kept
    for (int lam : lambdas) deviation_sum += std::abs(lam - profile.eta);
    if (deviation_sum <= kZeroAmplitude) {
        throw NumericError("calibration denominator vanished at site " +
                           std::to_string(site));
    }
    profile.alpha = static_cast<double>(profile.l) * (d - 1) / deviation_sum;
    return profile;
}

GammaBreakdown separability_index(const PureState& state, const MeasureOptions& options) {
    const int d = require_uniform_dim(state);
    const int n = state.num_sites();
    if (n < 2) {
        throw UnsupportedStateError("the measure needs at least 2 sites");
    }

    GammaBreakdown breakdown;
    breakdown.sites.reserve(n);
    double sum = 0.0;
    for (int site = 1; site <= n; ++site) {
        SiteReport report;
        report.profile = site_profile(state, site);
        report.max_expectation =
            options.method == Method::analytic
                ? max_expectation_analytic(state, site)
                : max_expectation_grid(state, site, options.grid_steps,
                                       options.refine_rounds);
        const double term =
            report.profile.factorable
                ? static_cast<double>(d - 1)
                : *report.profile.alpha *
                      std::abs(report.max_expectation.value - report.profile.eta);
        sum += term;
        breakdown.sites.push_back(std::move(report));
    }
    breakdown.gamma = sum / n;
    return breakdown;
}

MeasureReport entanglement(const PureState& state, const MeasureOptions& options) {
    GammaBreakdown breakdown = separability_index(state, options);
    const int lambda_max = require_uniform_dim(state) - 1;

    MeasureReport report;
    report.gamma = breakdown.gamma;
    report.lambda_max = lambda_max;
    report.E = lambda_max - breakdown.gamma;
    report.sites = std::move(breakdown.sites);
    report.method = options.method;

    if (product_check(state).fully_product && std::abs(report.E) > kWarnThreshold) {
        report.warnings.emplace_back(kWarnSeparableNonzeroE);
    }
    if (report.E < -kWarnThreshold) {
        report.warnings.emplace_back(kWarnNegativeE);
    }
    return report;
}

}  // namespace qsep
