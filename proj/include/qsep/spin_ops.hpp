#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qsep {

/// Embedded operators above this total dimension are refused; full
/// matrices are an oracle/verification path, not the production route.
inline constexpr Eigen::Index kMaxEmbedDim = 1024;

/// Measurement direction on the (generalized) Bloch sphere.
/// theta in [0, pi] is the polar angle from +z, phi the azimuth from +x,
/// reduced modulo 2*pi into [0, 2*pi).
struct Direction {
    double theta;
    double phi;

    /// Throws std::invalid_argument when theta lies outside [0, pi]
    /// (beyond a 1e-12 slack).
    Direction(double theta_in, double phi_in);
};

/// Direction-parameterized spin observable: matrix = 2 n(theta,phi) . J
/// for spin (d-1)/2. Hermitian with spectrum {d-1, d-3, ..., -(d-1)}.
struct SpinObservable {
    int dim;
    Direction direction;
    Eigen::MatrixXcd matrix;
};

/// Builds the d x d spin observable for a direction:
///   diagonal      (d-1-2k) cos(theta)
///   superdiagonal sqrt((k+1)(d-1-k)) e^{-i phi} sin(theta)
/// and the Hermitian mirror below. For d = 2 this is the Pauli vector
/// n . sigma. Throws std::invalid_argument for d < 2.
SpinObservable spin_direction_matrix(int d, Direction dir);

/// Same construction written into a caller-owned d x d buffer; used by
/// hot loops to avoid reallocating. `out` must already be d x d and is
/// fully overwritten.
void spin_direction_fill(int d, Direction dir, Eigen::MatrixXcd& out);

/// Eigenvalue carried by basis digit k at local dimension d: d - 1 - 2k.
/// Throws std::out_of_range unless 0 <= k <= d-1.
int eigenvalue_of_digit(int d, int k);

/// Kronecker-embeds the observable at `site` (1-based) of a system with
/// the given local dimensions: I x ... x obs.matrix x ... x I, ordered
/// consistently with PureState indexing (site 1 most significant).
/// Throws std::invalid_argument on a dimension mismatch,
/// std::out_of_range for a bad site, std::length_error above kMaxEmbedDim.
Eigen::MatrixXcd embed_at_site(const SpinObservable& obs,
                               const std::vector<int>& dims, int site);

}  // namespace qsep
