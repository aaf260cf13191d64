#include "qsep/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace qsep {

namespace {

// 17 significant digits: every double survives the round trip exactly.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string join_warnings(const std::vector<std::string>& extra,
                          const std::vector<std::string>& own) {
    std::string out = "[";
    bool first = true;
    for (const auto* list : {&extra, &own}) {
        for (const std::string& w : *list) {
            if (!first) out += ", ";
            out += quote(w);
            first = false;
        }
    }
    out += "]";
    return out;
}

}  // namespace

std::string report_to_json(const std::string& input, const PureState& state,
                           const MeasureReport& report,
                           const std::vector<std::string>& extra_warnings,
                           double elapsed_ms) {
    std::string out = "{";
    out += "\"input\": " + quote(input) + ", ";
    out += "\"dims\": [";
    for (std::size_t i = 0; i < state.dims().size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(state.dims()[i]);
    }
    out += "], ";
    out += "\"lambda_max\": " + std::to_string(report.lambda_max) + ", ";
    out += std::string("\"method\": \"") + method_name(report.method) + "\", ";

    out += "\"sites\": [";
    for (std::size_t i = 0; i < report.sites.size(); ++i) {
        const SiteProfile& p = report.sites[i].profile;
        const MaxExpectation& mx = report.sites[i].max_expectation;
        if (i) out += ", ";
        out += "{";
        out += "\"site\": " + std::to_string(p.site) + ", ";
        out += "\"l\": " + std::to_string(p.l) + ", ";
        out += "\"distinct_eigenvalues\": [";
        for (std::size_t k = 0; k < p.distinct_eigenvalues.size(); ++k) {
            if (k) out += ", ";
            out += std::to_string(p.distinct_eigenvalues[k]);
        }
        out += "], ";
        out += "\"eta\": " + fmt_double(p.eta) + ", ";
        out += "\"alpha\": " + (p.alpha ? fmt_double(*p.alpha) : "null") + ", ";
        out += std::string("\"factorable\": ") + (p.factorable ? "true" : "false") + ", ";
        out += "\"max_expectation\": " + fmt_double(mx.value) + ", ";
        if (mx.direction) {
            out += "\"direction\": {\"theta\": " + fmt_double(mx.direction->theta) +
                   ", \"phi\": " + fmt_double(mx.direction->phi) + "}";
        } else {
            out += "\"direction\": null";
        }
        out += "}";
    }
    out += "], ";

    out += "\"gamma\": " + fmt_double(report.gamma) + ", ";
    out += "\"E\": " + fmt_double(report.E) + ", ";
    out += "\"warnings\": " + join_warnings(extra_warnings, report.warnings) + ", ";
    out += std::string("\"version\": \"") + kToolVersion + "\", ";
    out += "\"elapsed_ms\": " + fmt_double(elapsed_ms);
    out += "}";
    return out;
}

std::string report_to_table(const std::string& input, const PureState& state,
                            const MeasureReport& report,
                            const std::vector<std::string>& extra_warnings) {
    std::ostringstream os;
    os << "state:      " << input << "\n";
    os << "dims:       [";
    for (std::size_t i = 0; i < state.dims().size(); ++i) {
        if (i) os << ", ";
        os << state.dims()[i];
    }
    os << "]   lambda_max: " << report.lambda_max
       << "   method: " << method_name(report.method) << "\n\n";

    os << std::left << std::setw(5) << "site" << std::setw(5) << "l" << std::setw(14)
       << "eigenvalues" << std::setw(10) << "eta" << std::setw(10) << "alpha"
       << std::setw(13) << "max<sigma>" << std::setw(24) << "direction(theta,phi)"
       << "factorable\n";
    for (const SiteReport& site : report.sites) {
        const SiteProfile& p = site.profile;
        std::string eigs = "{";
        for (std::size_t k = 0; k < p.distinct_eigenvalues.size(); ++k) {
            if (k) eigs += ",";
            eigs += std::to_string(p.distinct_eigenvalues[k]);
        }
        eigs += "}";
        std::string dir = "-";
        if (site.max_expectation.direction) {
            dir = "(" + fmt6(site.max_expectation.direction->theta) + ", " +
                  fmt6(site.max_expectation.direction->phi) + ")";
        }
        os << std::left << std::setw(5) << p.site << std::setw(5) << p.l << std::setw(14)
           << eigs << std::setw(10) << fmt6(p.eta) << std::setw(10)
           << (p.alpha ? fmt6(*p.alpha) : "-") << std::setw(13)
           << fmt6(site.max_expectation.value) << std::setw(24) << dir
           << (p.factorable ? "yes" : "no") << "\n";
    }

    os << "\ngamma: " << fmt6(report.gamma) << "\n";
    os << "E:     " << fmt6(report.E) << "\n";
    os << "warnings:";
    if (extra_warnings.empty() && report.warnings.empty()) {
        os << " none";
    } else {
        for (const std::string& w : extra_warnings) os << " " << w;
        for (const std::string& w : report.warnings) os << " " << w;
    }
    os << "\n";
    return os.str();
}

std::string corpus_to_table(const std::vector<CorpusVerdict>& verdicts) {
    std::ostringstream os;
    std::size_t passed = 0;
    os << std::left << std::setw(8) << "status" << std::setw(14) << "expected"
       << std::setw(14) << "computed" << std::setw(12) << "|diff|"
       << "expr\n";
    for (const CorpusVerdict& v : verdicts) {
        os << std::left << std::setw(8) << (v.passed ? "PASS" : "FAIL") << std::setw(14)
           << fmt6(v.entry.expected_E) << std::setw(14) << fmt6(v.computed_E)
           << std::setw(12) << fmt6(v.abs_diff) << v.entry.expr;
        if (v.entry.dim) os << "  (dim " << *v.entry.dim << ")";
        if (!v.error.empty()) os << "  [" << v.error << "]";
        os << "\n";
        if (v.passed) ++passed;
    }
    os << "summary: " << passed << "/" << verdicts.size() << " passed\n";
    return os.str();
}

}  // namespace qsep
