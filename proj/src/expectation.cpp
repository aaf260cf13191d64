#include "qsep/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qsep {

const char* method_name(Method m) {
    return m == Method::analytic ? "analytic" : "grid";
}

double expectation_of_density(const Eigen::MatrixXcd& rho, Direction dir) {
    const int d = static_cast<int>(rho.rows());
    thread_local Eigen::MatrixXcd sigma;
    if (sigma.rows() != d || sigma.cols() != d) sigma.resize(d, d);
    spin_direction_fill(d, dir, sigma);
    // Tr(rho sigma) = sum_ij rho_ji sigma_ij
    return rho.transpose().cwiseProduct(sigma).sum().real();
}

double expectation_at(const PureState& state, int site, Direction dir) {
    return expectation_of_density(reduced_density(state, site), dir);
}

SpinVector spin_vector(const PureState& state, int site) {
    const DensityMatrix rho = reduced_density(state, site);
    constexpr double half_pi = std::numbers::pi / 2.0;
    SpinVector v;
    v.x() = expectation_of_density(rho, Direction(half_pi, 0.0));
    v.y() = expectation_of_density(rho, Direction(half_pi, half_pi));
    v.z() = expectation_of_density(rho, Direction(0.0, 0.0));
    return v;
}

MaxExpectation max_expectation_analytic(const PureState& state, int site) {
    const SpinVector v = spin_vector(state, site);
    const double value = v.norm();
    MaxExpectation result{value, std::nullopt, Method::analytic};
    if (value >= kZeroAmplitude) {
        const double theta = std::acos(std::clamp(v.z() / value, -1.0, 1.0));
        const double phi =
            (std::hypot(v.x(), v.y()) < kZeroAmplitude) ? 0.0 : std::atan2(v.y(), v.x());
        result.direction = Direction(theta, phi);
    }
    return result;
}

MaxExpectation max_expectation_grid(const PureState& state, int site,
                                    int coarse_steps, int refine_rounds) {
    if (coarse_steps < 8) throw std::invalid_argument("coarse_steps must be >= 8");
    if (refine_rounds < 0) throw std::invalid_argument("refine_rounds must be >= 0");

    const DensityMatrix rho = reduced_density(state, site);
    constexpr double pi = std::numbers::pi;

    double best = -std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    double best_phi = 0.0;
    const auto consider = [&](double theta, double phi) {
        const Direction dir(std::clamp(theta, 0.0, pi), phi);
        const double value = expectation_of_density(rho, dir);
        // strict improvement, lexicographic (theta, phi) on exact ties
        if (value > best ||
            (value == best && (dir.theta < best_theta ||
                               (dir.theta == best_theta && dir.phi < best_phi)))) {
            best = value;
            best_theta = dir.theta;
            best_phi = dir.phi;
        }
    };

    const int steps = coarse_steps;
    for (int i = 0; i < steps; ++i) {
        const double theta = pi * i / (steps - 1);
        for (int j = 0; j < steps; ++j) {
            consider(theta, 2.0 * pi * j / steps);
        }
    }

    double theta_window = pi;
    double phi_window = 2.0 * pi;
    for (int round = 0; round < refine_rounds; ++round) {
        theta_window /= 2.0;
        phi_window /= 2.0;
        const double center_theta = best_theta;
        const double center_phi = best_phi;
        const double lo = std::max(0.0, center_theta - theta_window / 2.0);
        const double hi = std::min(pi, center_theta + theta_window / 2.0);
        for (int i = 0; i < steps; ++i) {
            const double theta = lo + (hi - lo) * i / (steps - 1);
            for (int j = 0; j < steps; ++j) {
                // phi wraps modulo 2*pi via the Direction constructor
                consider(theta, center_phi - phi_window / 2.0 + phi_window * j / (steps - 1));
            }
        }
    }

    MaxExpectation result{std::max(best, 0.0), std::nullopt, Method::grid};
    if (result.value >= kZeroAmplitude) {
        result.direction = Direction(best_theta, best_phi);
    }
    return result;
}

Direction find_eigen_direction(const PureState& state) {
    if (state.num_sites() != 1 || state.dims().front() != 2) {
        throw std::invalid_argument("eigen-direction is defined for a single qubit");
    }
    const SpinVector v = spin_vector(state, 1);
    const double norm = v.norm();  // 1 for any pure qubit
    const double theta = std::acos(std::clamp(v.z() / std::max(norm, kZeroAmplitude), -1.0, 1.0));
    const double phi =
        (std::hypot(v.x(), v.y()) < kZeroAmplitude) ? 0.0 : std::atan2(v.y(), v.x());
    return Direction(theta, phi);
}

SampleResult sample_measurements(const PureState& state, int site, Direction dir,
                                 long long shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    const DensityMatrix rho = reduced_density(state, site);
    const int d = static_cast<int>(rho.rows());
    const SpinObservable obs = spin_direction_matrix(d, dir);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(obs.matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition of the observable failed");
    }

    // ascending eigenvalues are -(d-1), -(d-3), ..., d-1 up to rounding
    std::vector<int> outcome(d);
    std::vector<double> probability(d);
    double total = 0.0;
    for (int k = 0; k < d; ++k) {
        outcome[k] = -(d - 1) + 2 * k;
        const Eigen::VectorXcd vec = solver.eigenvectors().col(k);
        probability[k] = std::max(0.0, (vec.adjoint() * rho * vec).value().real());
        total += probability[k];
    }
    for (double& p : probability) p /= total;

    std::vector<double> cdf(d);
    double acc = 0.0;
    for (int k = 0; k < d; ++k) {
        acc += probability[k];
        cdf[k] = acc;
    }
    cdf[d - 1] = 1.0;

    SampleResult result;
    result.shots = shots;
    for (int k = 0; k < d; ++k) result.counts[outcome[k]] = 0;

    std::mt19937_64 rng(seed);
    long long sum = 0;
    for (long long s = 0; s < shots; ++s) {
        // fixed 53-bit mapping keeps the stream platform-independent
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        int k = 0;
        while (k < d - 1 && u >= cdf[k]) ++k;
        ++result.counts[outcome[k]];
        sum += outcome[k];
    }
    result.mean = static_cast<double>(sum) / static_cast<double>(shots);
    return result;
}

}  // namespace qsep
