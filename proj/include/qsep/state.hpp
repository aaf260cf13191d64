#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

namespace qsep {

/// Amplitudes smaller than this (in modulus) do not count as state
/// components; the threshold sits well below any golden coefficient and
/// well above double rounding noise.
inline constexpr double kZeroAmplitude = 1e-12;

/// A site counts as separable from the rest when its reduced purity
/// Tr(rho^2) is within this distance of 1.
inline constexpr double kPurityTolerance = 1e-9;

using Complex = std::complex<double>;
using DensityMatrix = Eigen::MatrixXcd;

/// Normalized pure state of N qudits with per-site local dimensions
/// dims[0..N-1]. Site 1 is the most significant basis digit: |abc> sits
/// at index a*d2*d3 + b*d3 + c. Sites are addressed 1-based throughout.
class PureState {
public:
    /// Validates dims (N >= 1, every d_i >= 2), checks the amplitude
    /// vector length, and normalizes. Throws std::invalid_argument on a
    /// zero vector or shape mismatch.
    PureState(std::vector<int> dims, Eigen::VectorXcd amplitudes);

    int num_sites() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }

    /// Local dimension of a site (1-based). Throws std::out_of_range.
    int dim(int site) const;

    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    Eigen::Index size() const { return amplitudes_.size(); }

    /// The shared local dimension, or nullopt when sites differ.
    std::optional<int> uniform_dim() const;

    /// Basis digit held by `site` (1-based) in basis state `index`.
    int digit_at(Eigen::Index index, int site) const;

    /// Product of local dimensions strictly after `site` (the stride of
    /// that site's digit in the basis index).
    Eigen::Index stride(int site) const;

private:
    std::vector<int> dims_;
    Eigen::VectorXcd amplitudes_;
};

/// One nonzero term of the computational-basis expansion.
struct BasisComponent {
    std::vector<int> digits;  // one digit per site, site 1 first
    Complex coefficient;
};

struct ProductCheck {
    std::vector<bool> site_separable;  // site i-1 separable from the rest
    bool fully_product = false;
};

/// All basis terms with |amplitude| > kZeroAmplitude in ascending
/// basis-index order; the list length is the component count l.
std::vector<BasisComponent> components(const PureState& state);

/// Reduced density matrix of `site` (1-based): partial trace over all
/// other sites. Throws std::out_of_range for a bad site.
DensityMatrix reduced_density(const PureState& state, int site);

/// Flags each site whose reduced state is pure (Tr(rho^2) >= 1 - 1e-9);
/// the overall verdict is "fully product" when every site is flagged.
ProductCheck product_check(const PureState& state);

/// True iff every component of the state holds the same digit at `site`,
/// i.e. the site tensors out as a basis state.
bool is_factorable_site(const PureState& state, int site);

}  // namespace qsep
