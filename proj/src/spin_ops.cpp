#include "qsep/spin_ops.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsep {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleSlack = 1e-12;
}  // namespace

Direction::Direction(double theta_in, double phi_in) {
    if (theta_in < -kAngleSlack || theta_in > std::numbers::pi + kAngleSlack) {
        throw std::invalid_argument("theta " + std::to_string(theta_in) +
                                    " outside [0, pi]");
    }
    theta = std::clamp(theta_in, 0.0, std::numbers::pi);
    phi = std::fmod(phi_in, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
}

void spin_direction_fill(int d, Direction dir, Eigen::MatrixXcd& out) {
    const double ct = std::cos(dir.theta);
    const double st = std::sin(dir.theta);
    const std::complex<double> lower = std::polar(st, dir.phi);  // e^{+i phi} sin
    out.setZero();
    for (int k = 0; k < d; ++k) {
        out(k, k) = static_cast<double>(d - 1 - 2 * k) * ct;
    }
    for (int k = 0; k + 1 < d; ++k) {
        const double ladder = std::sqrt(static_cast<double>((k + 1) * (d - 1 - k)));
        out(k + 1, k) = ladder * lower;
        out(k, k + 1) = ladder * std::conj(lower);
    }
}

SpinObservable spin_direction_matrix(int d, Direction dir) {
    if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
    SpinObservable obs{d, dir, Eigen::MatrixXcd(d, d)};
    spin_direction_fill(d, dir, obs.matrix);
    return obs;
}

int eigenvalue_of_digit(int d, int k) {
    if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
    if (k < 0 || k > d - 1) {
        throw std::out_of_range("digit " + std::to_string(k) +
                                " out of range [0, " + std::to_string(d - 1) + "]");
    }
    return d - 1 - 2 * k;
}

Eigen::MatrixXcd embed_at_site(const SpinObservable& obs,
                               const std::vector<int>& dims, int site) {
    const int n = static_cast<int>(dims.size());
    if (site < 1 || site > n) {
        throw std::out_of_range("site " + std::to_string(site) + " out of range [1, " +
                                std::to_string(n) + "]");
    }
    if (dims[site - 1] != obs.dim) {
        throw std::invalid_argument("observable dimension " + std::to_string(obs.dim) +
                                    " does not match site dimension " +
                                    std::to_string(dims[site - 1]));
    }
    Eigen::Index leading = 1, trailing = 1;
    for (int i = 0; i < site - 1; ++i) leading *= dims[i];
    for (int i = site; i < n; ++i) trailing *= dims[i];
    const Eigen::Index total = leading * obs.dim * trailing;
    if (total > kMaxEmbedDim) {
        throw std::length_error("embedded operator dimension " + std::to_string(total) +
                                " exceeds the cap " + std::to_string(kMaxEmbedDim));
    }

    const Eigen::MatrixXcd left = Eigen::kroneckerProduct(
        Eigen::MatrixXcd::Identity(leading, leading), obs.matrix);
    return Eigen::kroneckerProduct(left,
                                   Eigen::MatrixXcd::Identity(trailing, trailing));
}

}  // namespace qsep
