// gaussian.hpp — Gaussian reservoir states and the quadratic-form route
//
// The decoherence function of a Gaussian reservoir state is
// Gamma = (1/2) Lambda^T sigma Lambda, with Lambda the real/imaginary parts
// of the characteristic-function argument and sigma the covariance matrix.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dephasing/errors.hpp"
#include "dephasing/qubit_register.hpp"
#include "dephasing/reservoir.hpp"
#include "dephasing/susceptibility.hpp"

namespace dephasing {

using LambdaVector = std::vector<std::complex<double>>;

// lambda_k = g_k d~*(k) (1 - e^{i w_k t}) / w_k, with the w = 0 limit -i t.
inline LambdaVector lambda_vector(const DifferenceVector& d, const QubitLayout& layout,
                                  const DiscreteModeSet& modes, double t) {
    detail::check_same_size(d, layout);
    LambdaVector out;
    out.reserve(modes.modes.size());
    for (const Mode& mode : modes.modes) {
        std::complex<double> dk{0.0, 0.0};
        for (std::size_t l = 0; l < d.size(); ++l) {
            if (d[l] == 0) continue;
            const double kr = mode.k * layout.position(l)[0];
            dk += static_cast<double>(d[l]) * std::exp(std::complex<double>(0.0, -kr));
        }
        std::complex<double> kernel;
        if (mode.omega == 0.0) {
            kernel = std::complex<double>(0.0, -t);
        } else {
            kernel = (1.0 - std::exp(std::complex<double>(0.0, mode.omega * t))) / mode.omega;
        }
        out.push_back(mode.g * std::conj(dk) * kernel);
    }
    return out;
}

// Thermal single-mode covariance block diag(Nbar + 1/2, Nbar + 1/2).
inline Eigen::Matrix2d covariance_thermal(double n_bar) {
    if (n_bar < 0.0) throw std::invalid_argument("covariance_thermal: Nbar must be >= 0");
    return (n_bar + 0.5) * Eigen::Matrix2d::Identity();
}

// Squeezed thermal block; determinant (Nbar + 1/2)^2 for any (r, phi).
inline Eigen::Matrix2d covariance_squeezed_thermal(double n_bar, double r, double phi) {
    if (n_bar < 0.0) throw std::invalid_argument("covariance_squeezed_thermal: Nbar must be >= 0");
    const double n = n_bar + 0.5;
    Eigen::Matrix2d s;
    s(0, 0) = n * (std::cosh(2.0 * r) + std::sinh(2.0 * r) * std::cos(phi));
    s(1, 1) = n * (std::cosh(2.0 * r) - std::sinh(2.0 * r) * std::cos(phi));
    s(0, 1) = s(1, 0) = -n * std::sinh(2.0 * r) * std::sin(phi);
    return s;
}

// Thermal occupation, squeezing, and displacement. Displacement is recorded
// but never enters the covariance: displaced states dephase identically.
struct SingleModeGaussianState {
    double n_bar = 0.0;
    double squeeze_r = 0.0;
    double squeeze_phi = 0.0;
    std::complex<double> displacement{0.0};

    Eigen::Matrix2d covariance() const {
        return covariance_squeezed_thermal(n_bar, squeeze_r, squeeze_phi);
    }
};

// Executable form of the displacement-irrelevance statement: the covariance
// of a state is independent of its displacement.
inline bool displacement_irrelevance_check(const SingleModeGaussianState& state) {
    SingleModeGaussianState undisplaced = state;
    undisplaced.displacement = {0.0, 0.0};
    return state.covariance() == undisplaced.covariance();
}

// Gamma = (1/2) Lambda^T sigma Lambda with per-mode 2x2 blocks.
inline double gamma_from_covariance(const LambdaVector& lambda,
                                    const std::vector<Eigen::Matrix2d>& blocks) {
    if (lambda.size() != blocks.size()) {
        throw dimension_mismatch("gamma_from_covariance: block count != lambda entries");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const Eigen::Vector2d v(lambda[i].real(), lambda[i].imag());
        s += v.dot(blocks[i] * v);  // (1/2) * (sqrt2 v)^T sigma (sqrt2 v)
    }
    return s;
}

// Fully general (possibly mode-entangled) covariance path. The matrix must
// be symmetric and 2n x 2n for n lambda entries; physicality (eigenvalues
// >= 1/2) is checked separately by is_physical_covariance.
inline double gamma_from_covariance(const LambdaVector& lambda, const Eigen::MatrixXd& sigma) {
    const auto n = static_cast<Eigen::Index>(lambda.size());
    if (sigma.rows() != 2 * n || sigma.cols() != 2 * n) {
        throw dimension_mismatch("gamma_from_covariance: sigma must be 2n x 2n");
    }
    if (!sigma.isApprox(sigma.transpose(), 1e-12)) {
        throw std::invalid_argument("gamma_from_covariance: sigma must be symmetric");
    }
    Eigen::VectorXd big(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        big(2 * i) = std::numbers::sqrt2 * lambda[static_cast<std::size_t>(i)].real();
        big(2 * i + 1) = std::numbers::sqrt2 * lambda[static_cast<std::size_t>(i)].imag();
    }
    return 0.5 * big.dot(sigma * big);
}

inline bool is_physical_covariance(const Eigen::MatrixXd& sigma, double tol = 1e-12) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sigma);
    return solver.eigenvalues().minCoeff() >= 0.5 - tol;
}

}  // namespace dephasing
