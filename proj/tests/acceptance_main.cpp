// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, next to each check.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "qsep/corpus.hpp"
#include "qsep/expectation.hpp"
#include "qsep/measure.hpp"
#include "qsep/parse.hpp"
#include "qsep/spin_ops.hpp"
#include "support/test_helpers.hpp"

using namespace qsep;
using testutil::parse;

namespace {

constexpr double pi = std::numbers::pi;
int failures = 0;

void criterion(int id, const std::string& label,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %02d: %s%s%s\n", ok ? "PASS" : "FAIL", id, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool near(double a, double b, double tol, std::string& detail, const char* what) {
    if (std::abs(a - b) <= tol) return true;
    std::ostringstream os;
    os << what << ": got " << a << ", want " << b << " (tol " << tol << ")";
    detail = os.str();
    return false;
}

std::vector<int> random_uniform_dims(std::mt19937_64& rng, int max_sites, int max_dim) {
    std::uniform_int_distribution<int> n_sites(2, max_sites);
    std::uniform_int_distribution<int> local_dim(2, max_dim);
    return std::vector<int>(n_sites(rng), local_dim(rng));
}

}  // namespace

int main() {
    criterion(1, "bell pair: gamma = 0 and E = 1 (tol 1e-12)", [](std::string& detail) {
        const MeasureReport r = entanglement(parse("1/sqrt(2)|01> + 1/sqrt(2)|10>"));
        return near(r.gamma, 0.0, 1e-12, detail, "gamma") &&
               near(r.E, 1.0, 1e-12, detail, "E");
    });

    criterion(2, "balanced plus pair: gamma = 1 and E = 0 (tol 1e-12)",
              [](std::string& detail) {
                  const MeasureReport r =
                      entanglement(parse("1/2|00> + 1/2|01> + 1/2|10> + 1/2|11>"));
                  return near(r.gamma, 1.0, 1e-12, detail, "gamma") &&
                         near(r.E, 0.0, 1e-12, detail, "E");
              });

    criterion(3, "schmidt pair 1/2, sqrt(3)/2: E = 1/2 (tol 1e-9)",
              [](std::string& detail) {
                  const MeasureReport r = entanglement(parse("1/2|00> + sqrt(3)/2|11>"));
                  return near(r.E, 0.5, 1e-9, detail, "E");
              });

    criterion(4, "three-qubit pair: per-site maxima 3/5, gamma 3/5, E 2/5 (tol 1e-9)",
              [](std::string& detail) {
                  const PureState st = parse("1/sqrt(5)|011> + 2/sqrt(5)|100>");
                  const MeasureReport r = entanglement(st);
                  for (int site = 0; site < 3; ++site) {
                      if (!near(r.sites[site].max_expectation.value, 0.6, 1e-9, detail,
                                "per-site max"))
                          return false;
                  }
                  return near(r.gamma, 0.6, 1e-9, detail, "gamma") &&
                         near(r.E, 0.4, 1e-9, detail, "E");
              });

    criterion(5, "qutrit pairs with differing eta/alpha share E = 1 (tol 1e-9)",
              [](std::string& detail) {
                  const MeasureReport a = entanglement(parse("1/2|02> + sqrt(3)/2|20>"));
                  const MeasureReport b = entanglement(parse("1/2|01> + sqrt(3)/2|20>"));
                  if (!near(a.E, 1.0, 1e-9, detail, "E (extremal levels)")) return false;
                  if (!near(b.E, 1.0, 1e-9, detail, "E (mixed levels)")) return false;
                  // the calibrations genuinely differ on site 2: eta 0 vs 1, alpha 1 vs 2
                  const SiteProfile& pa = a.sites[1].profile;
                  const SiteProfile& pb = b.sites[1].profile;
                  if (pa.eta != 0.0 || pb.eta != 1.0) {
                      detail = "site-2 eta pair is not (0, 1)";
                      return false;
                  }
                  if (!pa.alpha || !pb.alpha || *pa.alpha != 1.0 || *pb.alpha != 2.0) {
                      detail = "site-2 alpha pair is not (1, 2)";
                      return false;
                  }
                  return true;
              });

    criterion(6, "qutrit GHZ E = 2; three-term qutrit pair eta2 = 1, alpha2 = 2, E = 7/4",
              [](std::string& detail) {
                  const MeasureReport ghz =
                      entanglement(parse("1/sqrt(3)|00> + 1/sqrt(3)|11> + 1/sqrt(3)|22>"));
                  if (!near(ghz.E, 2.0, 1e-9, detail, "GHZ E")) return false;
                  const MeasureReport r =
                      entanglement(parse("1/sqrt(3)|00> + 1/sqrt(2)|11> + 1/sqrt(6)|20>"));
                  const SiteProfile& p2 = r.sites[1].profile;
                  if (p2.eta != 1.0) {
                      detail = "eta2 != 1";
                      return false;
                  }
                  if (!p2.alpha || *p2.alpha != 2.0) {
                      detail = "alpha2 != 2";
                      return false;
                  }
                  return near(r.E, 1.75, 1e-9, detail, "E");
              });

    criterion(7, "three ququart pairs all give E = 6/5 (tol 1e-9)", [](std::string& detail) {
        for (const char* expr :
             {"1/sqrt(5)|01> + 2/sqrt(5)|10>", "1/sqrt(5)|03> + 2/sqrt(5)|30>",
              "1/sqrt(5)|12> + 2/sqrt(5)|21>"}) {
            const MeasureReport r = entanglement(parse(expr, 4));
            if (!near(r.E, 1.2, 1e-9, detail, expr)) return false;
        }
        return true;
    });

    criterion(8, "separable anomaly: E = 1 - sqrt(2), warned, grid-confirmed",
              [](std::string& detail) {
                  const PureState st =
                      parse("1/sqrt(3)|10> + 1/sqrt(3)|11> + 1/sqrt(3)|12>");
                  const MeasureReport r = entanglement(st);
                  // frozen hand evaluation: pinned site contributes lambda_max = 2;
                  // free site: eta 0, alpha 3/2, max = 4*sqrt(2)/3 => E = 1 - sqrt(2)
                  if (!near(r.E, 1.0 - std::sqrt(2.0), 1e-9, detail, "E")) return false;
                  bool warned = false;
                  for (const std::string& w : r.warnings) {
                      if (w == kWarnSeparableNonzeroE) warned = true;
                  }
                  if (!warned) {
                      detail = "missing separable-nonzero-E warning";
                      return false;
                  }
                  const MeasureReport grid = entanglement(st, {Method::grid, 64, 8});
                  return near(grid.E, r.E, 1e-6, detail, "grid E");
              });

    criterion(9, "oracles: 1000x analytic-vs-grid <= 1e-6, 200x matrix-vs-density <= 1e-12",
              [](std::string& detail) {
                  std::mt19937_64 rng(90001);
                  std::uniform_real_distribution<double> u01(0.0, 1.0);
                  for (int trial = 0; trial < 1000; ++trial) {
                      const PureState st =
                          testutil::random_state(rng, random_uniform_dims(rng, 3, 4));
                      const int site = 1 + static_cast<int>(rng() % st.num_sites());
                      const double analytic = max_expectation_analytic(st, site).value;
                      const double grid = max_expectation_grid(st, site, 64, 8).value;
                      if (!near(grid, analytic, 1e-6, detail,
                                ("trial " + std::to_string(trial)).c_str()))
                          return false;
                  }
                  for (int trial = 0; trial < 200; ++trial) {
                      const PureState st =
                          testutil::random_state(rng, random_uniform_dims(rng, 3, 4));
                      const int site = 1 + static_cast<int>(rng() % st.num_sites());
                      const Direction dir(pi * u01(rng), 2 * pi * u01(rng));
                      const SpinObservable obs = spin_direction_matrix(st.dim(site), dir);
                      const Eigen::MatrixXcd embedded = embed_at_site(obs, st.dims(), site);
                      const double full =
                          (st.amplitudes().adjoint() * embedded * st.amplitudes())
                              .value()
                              .real();
                      if (!near(expectation_at(st, site, dir), full, 1e-12, detail,
                                "path agreement"))
                          return false;
                  }
                  return true;
              });

    criterion(10, "property suite: invariances, closed form, spectrum, embeddings",
              [](std::string& detail) {
                  std::mt19937_64 rng(424243);
                  std::uniform_real_distribution<double> u01(0.0, 1.0);

                  // qubit local-unitary invariance, 200 cases, 1e-9
                  for (int trial = 0; trial < 200; ++trial) {
                      const PureState st = testutil::random_state(rng, {2, 2});
                      PureState rotated = testutil::apply_local_unitary(
                          st, 1, testutil::random_unitary2(rng));
                      rotated = testutil::apply_local_unitary(
                          rotated, 2, testutil::random_unitary2(rng));
                      if (!near(entanglement(rotated).E, entanglement(st).E, 1e-9, detail,
                                "local-unitary invariance"))
                          return false;
                  }

                  // site-permutation invariance, 1e-12
                  for (int trial = 0; trial < 25; ++trial) {
                      const PureState st = testutil::random_state(rng, {3, 3, 3});
                      const PureState permuted = testutil::permute_sites(st, {2, 0, 1});
                      if (!near(entanglement(permuted).E, entanglement(st).E, 1e-12, detail,
                                "site-permutation invariance"))
                          return false;
                  }

                  // global-phase invariance, 1e-12
                  for (int trial = 0; trial < 25; ++trial) {
                      const PureState st =
                          testutil::random_state(rng, random_uniform_dims(rng, 3, 4));
                      const std::complex<double> phase =
                          std::polar(1.0, 2.0 * pi * u01(rng));
                      const PureState shifted(st.dims(), phase * st.amplitudes());
                      const MeasureReport a = entanglement(st);
                      const MeasureReport b = entanglement(shifted);
                      if (!near(b.E, a.E, 1e-12, detail, "global-phase invariance"))
                          return false;
                      for (std::size_t s = 0; s < a.sites.size(); ++s) {
                          if (!near(b.sites[s].max_expectation.value,
                                    a.sites[s].max_expectation.value, 1e-12, detail,
                                    "global-phase per-site max"))
                              return false;
                      }
                  }

                  // two-qubit schmidt closed form E = 1 - |a^2 - b^2|, 1e-9
                  for (int step = 1; step < 40; ++step) {
                      const double t = step * (pi / 2.0) / 40.0;
                      Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(4);
                      amp[0] = std::cos(t);
                      amp[3] = std::sin(t);
                      const PureState st({2, 2}, amp);
                      const double expected =
                          1.0 - std::abs(std::cos(t) * std::cos(t) -
                                         std::sin(t) * std::sin(t));
                      if (!near(entanglement(st).E, expected, 1e-9, detail,
                                "schmidt closed form"))
                          return false;
                  }

                  // spin spectrum on 10,000 random directions, 1e-9
                  std::uniform_int_distribution<int> dim(2, 6);
                  for (int trial = 0; trial < 10000; ++trial) {
                      const int d = dim(rng);
                      const SpinObservable obs = spin_direction_matrix(
                          d, Direction(pi * u01(rng), 2 * pi * u01(rng)));
                      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(obs.matrix);
                      for (int k = 0; k < d; ++k) {
                          if (std::abs(es.eigenvalues()[k] - (-(d - 1) + 2 * k)) > 1e-9) {
                              detail = "spectrum off at d = " + std::to_string(d);
                              return false;
                          }
                      }
                  }

                  // embedded two-level operators, entry for entry at
                  // theta = pi/3, phi = pi/5, 1e-12
                  const double theta = pi / 3.0, phi = pi / 5.0;
                  const double ct = std::cos(theta), st2 = std::sin(theta);
                  const std::complex<double> up = std::polar(st2, -phi);
                  const std::complex<double> dn = std::polar(st2, phi);
                  Eigen::MatrixXcd site1 = Eigen::MatrixXcd::Zero(4, 4);
                  site1(0, 0) = ct;  site1(0, 2) = up;
                  site1(1, 1) = ct;  site1(1, 3) = up;
                  site1(2, 0) = dn;  site1(2, 2) = -ct;
                  site1(3, 1) = dn;  site1(3, 3) = -ct;
                  Eigen::MatrixXcd site2 = Eigen::MatrixXcd::Zero(4, 4);
                  site2(0, 0) = ct;  site2(0, 1) = up;
                  site2(1, 0) = dn;  site2(1, 1) = -ct;
                  site2(2, 2) = ct;  site2(2, 3) = up;
                  site2(3, 2) = dn;  site2(3, 3) = -ct;

                  const SpinObservable qubit_obs =
                      spin_direction_matrix(2, Direction(theta, phi));
                  if ((embed_at_site(qubit_obs, {2, 2}, 1) - site1).cwiseAbs().maxCoeff() >
                      1e-12) {
                      detail = "two-qubit site-1 embedding mismatch";
                      return false;
                  }
                  if ((embed_at_site(qubit_obs, {2, 2}, 2) - site2).cwiseAbs().maxCoeff() >
                      1e-12) {
                      detail = "two-qubit site-2 embedding mismatch";
                      return false;
                  }

                  const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
                  const Eigen::MatrixXcd pauli = testutil::pauli_direction(theta, phi);
                  const Eigen::MatrixXcd expected8[3] = {
                      testutil::kron(testutil::kron(pauli, id2), id2),
                      testutil::kron(testutil::kron(id2, pauli), id2),
                      testutil::kron(testutil::kron(id2, id2), pauli),
                  };
                  for (int site = 1; site <= 3; ++site) {
                      if ((embed_at_site(qubit_obs, {2, 2, 2}, site) - expected8[site - 1])
                              .cwiseAbs()
                              .maxCoeff() > 1e-12) {
                          detail = "three-qubit embedding mismatch at site " +
                                   std::to_string(site);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(11, "sampling: 50 runs at 1e5 shots within 5 SE, seeded runs identical",
              [](std::string& detail) {
                  std::mt19937_64 rng(515151);
                  std::uniform_real_distribution<double> u01(0.0, 1.0);
                  const long long shots = 100000;
                  for (int trial = 0; trial < 50; ++trial) {
                      const PureState st =
                          testutil::random_state(rng, random_uniform_dims(rng, 3, 4));
                      const int site = 1 + static_cast<int>(rng() % st.num_sites());
                      const Direction dir(pi * u01(rng), 2 * pi * u01(rng));

                      const double mean_exact = expectation_at(st, site, dir);
                      const Eigen::MatrixXcd rho = reduced_density(st, site);
                      const Eigen::MatrixXcd sigma =
                          spin_direction_matrix(st.dim(site), dir).matrix;
                      const double second = (rho * sigma * sigma).trace().real();
                      const double se = std::sqrt(
                          std::max(0.0, second - mean_exact * mean_exact) / shots);

                      const SampleResult r =
                          sample_measurements(st, site, dir, shots, 7000 + trial);
                      if (std::abs(r.mean - mean_exact) > 5 * se + 1e-12) {
                          detail = "trial " + std::to_string(trial) + " outside 5 SE";
                          return false;
                      }

                      const SampleResult again =
                          sample_measurements(st, site, dir, shots, 7000 + trial);
                      std::ostringstream fa, fb;
                      for (const auto& [outcome, count] : r.counts) fa << outcome << ":" << count << ";";
                      for (const auto& [outcome, count] : again.counts) fb << outcome << ":" << count << ";";
                      fa << r.mean;
                      fb << again.mean;
                      if (fa.str() != fb.str()) {
                          detail = "seeded reruns differ";
                          return false;
                      }
                  }
                  return true;
              });

    std::printf("%d/11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
