#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qsep/spin_ops.hpp"
#include "qsep/state.hpp"

namespace qsep {

/// How a maximum was obtained: the closed-form spin-vector norm, or the
/// refined lattice search kept as its independent oracle.
enum class Method { analytic, grid };

const char* method_name(Method m);

/// Per-site expectations of the three axis observables,
/// v = (<2Jx>, <2Jy>, <2Jz>) on the reduced state; |v| <= d-1.
using SpinVector = Eigen::Vector3d;

struct MaxExpectation {
    double value = 0.0;                  // in [0, d-1]
    std::optional<Direction> direction;  // absent when value < 1e-12
    Method method = Method::analytic;
};

/// Tr(rho . sigma_n(dir)) for a d x d reduced density matrix.
double expectation_of_density(const Eigen::MatrixXcd& rho, Direction dir);

/// <sigma_n(dir)> on `site` (1-based): Tr(rho_site . sigma_n). Equals the
/// full-matrix form <psi|embed_at_site(sigma_n)|psi> to 1e-12.
double expectation_at(const PureState& state, int site, Direction dir);

/// v_a = Tr(rho_site . 2J_a); expectation_at(state, site, dir) equals
/// n(dir) . v for every direction.
SpinVector spin_vector(const PureState& state, int site);

/// Closed-form maximum over all directions: |spin_vector|, attained at
/// theta = arccos(v_z/|v|), phi = atan2(v_y, v_x). Direction omitted for
/// a vanishing spin vector, where every direction ties.
MaxExpectation max_expectation_analytic(const PureState& state, int site);

/// Brute-force maximum: a coarse_steps x coarse_steps lattice over
/// [0,pi] x [0,2pi), then refine_rounds of window-halving zoom around the
/// incumbent (phi wraps, theta clamps). Ties break lexicographically on
/// (theta, phi). Requires coarse_steps >= 8, refine_rounds >= 0.
MaxExpectation max_expectation_grid(const PureState& state, int site,
                                    int coarse_steps = 64, int refine_rounds = 8);

/// For a single qubit |chi>, the direction whose spin observable has
/// |chi> as its +1 eigenstate; the residual |(sigma_n - I)|chi>| is below
/// 1e-9. Requires N = 1, d = 2.
Direction find_eigen_direction(const PureState& state);

struct SampleResult {
    std::map<int, long long> counts;  // eigenvalue -> occurrences
    double mean = 0.0;
    long long shots = 0;
};

/// Simulated projective measurement of sigma_n(dir) on `site`: draws
/// `shots` outcomes from the Born distribution of the reduced state.
/// Identical (state, site, dir, shots, seed) give identical results.
SampleResult sample_measurements(const PureState& state, int site, Direction dir,
                                 long long shots, std::uint64_t seed);

}  // namespace qsep
