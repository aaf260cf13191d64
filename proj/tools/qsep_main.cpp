#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qsep/corpus.hpp"
#include "qsep/expectation.hpp"
#include "qsep/measure.hpp"
#include "qsep/parse.hpp"
#include "qsep/report.hpp"

namespace {

struct Args {
    std::string expr;
    int dim = 0;  // 0 = infer from the expression
    std::string method = "analytic";
    int grid_steps = 64;
    int refine = 8;
    bool json = false;
    int site = 1;
    double theta = 0.0;
    double phi = 0.0;
    long long shots = 10000;
    std::uint64_t seed = 1;
    std::string corpus_path;
    bool builtin = false;
};

std::optional<int> dim_arg(const Args& a) {
    return a.dim > 0 ? std::optional<int>(a.dim) : std::nullopt;
}

qsep::MeasureOptions measure_options(const Args& a) {
    return {a.method == "grid" ? qsep::Method::grid : qsep::Method::analytic,
            a.grid_steps, a.refine};
}

int run_measure(const Args& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const qsep::ParseResult parsed = qsep::parse_state(a.expr, dim_arg(a));
    const qsep::MeasureReport report = qsep::entanglement(parsed.state, measure_options(a));
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    if (a.json) {
        std::cout << qsep::report_to_json(a.expr, parsed.state, report, parsed.warnings,
                                          elapsed_ms)
                  << "\n";
    } else {
        std::cout << qsep::report_to_table(a.expr, parsed.state, report, parsed.warnings);
    }
    return 0;
}

int run_expect(const Args& a) {
    const qsep::ParseResult parsed = qsep::parse_state(a.expr, dim_arg(a));
    const double value =
        qsep::expectation_at(parsed.state, a.site, qsep::Direction(a.theta, a.phi));
    std::printf("%.12g\n", value);
    return 0;
}

int run_maxexpect(const Args& a) {
    const qsep::ParseResult parsed = qsep::parse_state(a.expr, dim_arg(a));
    const qsep::MaxExpectation mx =
        a.method == "grid"
            ? qsep::max_expectation_grid(parsed.state, a.site, a.grid_steps, a.refine)
            : qsep::max_expectation_analytic(parsed.state, a.site);
    std::printf("max expectation: %.12g\n", mx.value);
    if (mx.direction) {
        std::printf("direction: theta=%.12g phi=%.12g\n", mx.direction->theta,
                    mx.direction->phi);
    } else {
        std::printf("direction: undefined (every direction ties)\n");
    }
    std::printf("method: %s\n", qsep::method_name(mx.method));
    return 0;
}

int run_sample(const Args& a) {
    const qsep::ParseResult parsed = qsep::parse_state(a.expr, dim_arg(a));
    const qsep::SampleResult result = qsep::sample_measurements(
        parsed.state, a.site, qsep::Direction(a.theta, a.phi), a.shots, a.seed);
    std::printf("outcomes (eigenvalue count):\n");
    for (auto it = result.counts.rbegin(); it != result.counts.rend(); ++it) {
        std::printf("  %+d  %lld\n", it->first, it->second);
    }
    std::printf("mean: %.12g\n", result.mean);
    std::printf("shots: %lld  seed: %llu\n", result.shots,
                static_cast<unsigned long long>(a.seed));
    return 0;
}

int run_corpus(const Args& a) {
    std::vector<qsep::CorpusEntry> entries;
    if (a.builtin) {
        entries = qsep::builtin_corpus();
    } else {
        std::ifstream file(a.corpus_path);
        if (!file) {
            std::cerr << "error: cannot read corpus file '" << a.corpus_path << "'\n";
            return 2;
        }
        try {
            entries = qsep::load_corpus_jsonl(file);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    const std::vector<qsep::CorpusVerdict> verdicts =
        qsep::corpus_verify(entries, measure_options(a));
    std::cout << qsep::corpus_to_table(verdicts);
    for (const qsep::CorpusVerdict& v : verdicts) {
        if (!v.passed) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separability index and entanglement measure for pure qudit states"};
    app.set_version_flag("--version", std::string(qsep::kToolVersion));
    app.require_subcommand(1);

    Args args;

    const auto add_state_options = [&](CLI::App* cmd) {
        cmd->add_option("expr", args.expr, "state expression, e.g. \"1/2|00> + sqrt(3)/2|11>\"")
            ->required();
        cmd->add_option("--dim", args.dim, "local dimension (default: largest digit + 1)")
            ->check(CLI::PositiveNumber);
    };
    const auto add_method_options = [&](CLI::App* cmd) {
        cmd->add_option("--method", args.method, "maximization method")
            ->check(CLI::IsMember({"analytic", "grid"}))
            ->capture_default_str();
        cmd->add_option("--grid-steps", args.grid_steps, "lattice points per axis")
            ->capture_default_str();
        cmd->add_option("--refine", args.refine, "window-halving rounds")
            ->capture_default_str();
    };
    const auto add_site_option = [&](CLI::App* cmd) {
        cmd->add_option("--site", args.site, "site index (1-based)")
            ->required()
            ->check(CLI::PositiveNumber);
    };

    CLI::App* measure = app.add_subcommand("measure", "compute gamma and E for a state");
    add_state_options(measure);
    add_method_options(measure);
    measure->add_flag("--json", args.json, "emit a JSON report");

    CLI::App* expect = app.add_subcommand("expect", "spin expectation at a direction");
    add_state_options(expect);
    add_site_option(expect);
    expect->add_option("--theta", args.theta, "polar angle in radians");
    expect->add_option("--phi", args.phi, "azimuthal angle in radians");

    CLI::App* maxexpect =
        app.add_subcommand("maxexpect", "maximal spin expectation over directions");
    add_state_options(maxexpect);
    add_site_option(maxexpect);
    add_method_options(maxexpect);

    CLI::App* sample =
        app.add_subcommand("sample", "simulated projective measurements at a direction");
    add_state_options(sample);
    add_site_option(sample);
    sample->add_option("--theta", args.theta, "polar angle in radians");
    sample->add_option("--phi", args.phi, "azimuthal angle in radians");
    sample->add_option("--shots", args.shots, "number of measurements")
        ->capture_default_str();
    sample->add_option("--seed", args.seed, "pseudo-random seed")->capture_default_str();

    CLI::App* corpus = app.add_subcommand("corpus", "verify a golden corpus");
    corpus->add_option("path", args.corpus_path, "corpus file, one JSON object per line");
    corpus->add_flag("--builtin", args.builtin, "use the embedded golden set");
    add_method_options(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (measure->parsed()) return run_measure(args);
        if (expect->parsed()) return run_expect(args);
        if (maxexpect->parsed()) return run_maxexpect(args);
        if (sample->parsed()) return run_sample(args);
        if (corpus->parsed()) {
            if (!args.builtin && args.corpus_path.empty()) {
                std::cerr << "error: give a corpus file or --builtin\n";
                return 2;
            }
            return run_corpus(args);
        }
    } catch (const qsep::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qsep::UnsupportedStateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qsep::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
