#include "qsep/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsep {

namespace {

Eigen::Index total_dimension(const std::vector<int>& dims) {
    Eigen::Index total = 1;
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("every local dimension must be >= 2");
        total *= d;
    }
    return total;
}

}  // namespace

PureState::PureState(std::vector<int> dims, Eigen::VectorXcd amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (dims_.empty()) throw std::invalid_argument("state needs at least one site");
    const Eigen::Index expected = total_dimension(dims_);
    if (amplitudes_.size() != expected) {
        throw std::invalid_argument("amplitude vector has length " +
                                    std::to_string(amplitudes_.size()) +
                                    ", expected " + std::to_string(expected));
    }
    const double norm = amplitudes_.norm();
    if (norm < kZeroAmplitude) {
        throw std::invalid_argument("amplitude vector is zero");
    }
    amplitudes_ /= norm;
}

int PureState::dim(int site) const {
    if (site < 1 || site > num_sites()) {
        throw std::out_of_range("site " + std::to_string(site) +
                                " out of range [1, " + std::to_string(num_sites()) + "]");
    }
    return dims_[site - 1];
}

std::optional<int> PureState::uniform_dim() const {
    const int d = dims_.front();
    for (int di : dims_) {
        if (di != d) return std::nullopt;
    }
    return d;
}

Eigen::Index PureState::stride(int site) const {
    dim(site);  // range check
    Eigen::Index s = 1;
    for (int i = site; i < num_sites(); ++i) s *= dims_[i];
    return s;
}

int PureState::digit_at(Eigen::Index index, int site) const {
    return static_cast<int>((index / stride(site)) % dims_[site - 1]);
}

std::vector<BasisComponent> components(const PureState& state) {
    const int n = state.num_sites();
    std::vector<BasisComponent> out;
    for (Eigen::Index g = 0; g < state.size(); ++g) {
        const Complex c = state.amplitudes()[g];
        if (std::abs(c) <= kZeroAmplitude) continue;
        BasisComponent comp;
        comp.digits.resize(n);
        Eigen::Index rest = g;
        for (int i = n; i >= 1; --i) {
            comp.digits[i - 1] = static_cast<int>(rest % state.dims()[i - 1]);
            rest /= state.dims()[i - 1];
        }
        comp.coefficient = c;
        out.push_back(std::move(comp));
    }
    return out;
}

DensityMatrix reduced_density(const PureState& state, int site) {
    const int d = state.dim(site);
    const Eigen::Index trailing = state.stride(site);
    const Eigen::Index block = trailing * d;
    const Eigen::Index leading = state.size() / block;
    const auto& amp = state.amplitudes();

    DensityMatrix rho = DensityMatrix::Zero(d, d);
    for (Eigen::Index h = 0; h < leading; ++h) {
        const Eigen::Index base = h * block;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b <= a; ++b) {
                Complex sum(0.0, 0.0);
                for (Eigen::Index t = 0; t < trailing; ++t) {
                    sum += amp[base + a * trailing + t] *
                           std::conj(amp[base + b * trailing + t]);
                }
                rho(a, b) += sum;
            }
        }
    }
    // fill the strict upper triangle from the Hermitian mirror
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            rho(a, b) = std::conj(rho(b, a));
        }
    }
    return rho;
}

ProductCheck product_check(const PureState& state) {
    ProductCheck result;
    result.fully_product = true;
    result.site_separable.reserve(state.num_sites());
    for (int site = 1; site <= state.num_sites(); ++site) {
        const DensityMatrix rho = reduced_density(state, site);
        const double purity = rho.squaredNorm();  // Tr(rho^2) for Hermitian rho
        const bool separable = purity >= 1.0 - kPurityTolerance;
        result.site_separable.push_back(separable);
        if (!separable) result.fully_product = false;
    }
    return result;
}

bool is_factorable_site(const PureState& state, int site) {
    state.dim(site);  // range check
    int seen = -1;
    for (Eigen::Index g = 0; g < state.size(); ++g) {
        if (std::abs(state.amplitudes()[g]) <= kZeroAmplitude) continue;
        const int digit = state.digit_at(g, site);
        if (seen < 0) {
            seen = digit;
        } else if (digit != seen) {
            return false;
        }
    }
    return true;
}

}  // namespace qsep
