// reservoir.hpp — Spectral densities, occupation densities, discrete modes
//
// Units: v = 1 (omega = |k|) and hbar = k_B = 1 throughout, so frequencies
// and wavenumbers are interchangeable scalars in the isotropic pipeline.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "dephasing/errors.hpp"

namespace dephasing {

// J(omega) = alpha * omega^dim * exp(-omega/omega_c). Non-integer dim covers
// subohmic (dim < 1) and superohmic (dim > 1) reservoirs.
struct OhmicFamily {
    double alpha = 1.0;
    double dim = 1.0;
    double omega_c = 1.0;
};

// J(omega) = (alpha1/2) * omega on [0, omega_max), zero above.
struct BandLimited {
    double alpha1 = 1.0;
    double omega_max = 2.0 * std::numbers::pi;
};

struct TabulatedDensity {
    std::vector<double> grid;    // strictly increasing
    std::vector<double> values;  // >= 0
};

using SpectralDensity = std::variant<OhmicFamily, BandLimited, TabulatedDensity>;

struct Vacuum {};

struct BoseEinstein {
    double T = 0.0;
};

// Gaussian occupation peak: integrates to n_tot over the whole line.
struct GaussianPeak {
    double omega0 = 0.0;
    double sigma = 1.0;
    double n_tot = 0.0;
};

// Unbounded occupation concentrated at omega0; routes through the discrete
// (no-quadrature) code path.
struct DeltaPeak {
    double omega0 = 0.0;
    double n_tot = 0.0;
};

struct TabulatedOccupation {
    std::vector<double> grid;
    std::vector<double> values;
};

using OccupationDensity =
    std::variant<Vacuum, BoseEinstein, GaussianPeak, DeltaPeak, TabulatedOccupation>;

struct Mode {
    double k = 0.0;               // wavenumber (1D pipeline)
    double omega = 0.0;           // frequency >= 0
    std::complex<double> g{1.0};  // coupling
    double n_bar = 0.0;           // occupation >= 0
};

struct DiscreteModeSet {
    std::vector<Mode> modes;
};

namespace detail {
inline double interp_linear(const std::vector<double>& xs, const std::vector<double>& ys,
                            double x) {
    if (xs.empty() || xs.size() != ys.size()) {
        throw std::invalid_argument("tabulated data: grid/values size mismatch");
    }
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}
}  // namespace detail

inline double spectral_density_eval(const SpectralDensity& J, double omega) {
    if (omega < 0.0) throw std::domain_error("spectral_density_eval: omega must be >= 0");
    return std::visit(
        [omega](const auto& j) -> double {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, OhmicFamily>) {
                if (omega == 0.0) return j.dim > 0.0 ? 0.0 : j.alpha;
                return j.alpha * std::pow(omega, j.dim) * std::exp(-omega / j.omega_c);
            } else if constexpr (std::is_same_v<T, BandLimited>) {
                return omega < j.omega_max ? 0.5 * j.alpha1 * omega : 0.0;
            } else {
                return detail::interp_linear(j.grid, j.values, omega);
            }
        },
        J);
}

// Bose-Einstein occupation 1/(e^{omega/T} - 1). The omega = 0 point diverges
// for T > 0 and is handled analytically by the decoherence module's
// near-origin treatment; it is a domain error here.
inline double bose_einstein(double omega, double T) {
    if (T < 0.0) throw std::domain_error("bose_einstein: T must be >= 0");
    if (T == 0.0) {
        if (omega <= 0.0) throw std::domain_error("bose_einstein: omega must be > 0");
        return 0.0;
    }
    if (omega <= 0.0) throw std::domain_error("bose_einstein: omega = 0 diverges for T > 0");
    // Cut to exactly zero once the occupation drops below ~1e-20: far past
    // that 1/expm1 produces subnormals whose rounding noise stalls the
    // adaptive quadrature near the overflow edge of expm1.
    if (omega / T > 46.0) return 0.0;
    return 1.0 / std::expm1(omega / T);
}

inline double gaussian_occupation_eval(const GaussianPeak& N, double omega) {
    if (!(N.sigma > 0.0)) throw std::invalid_argument("gaussian_occupation_eval: sigma must be > 0");
    const double z = (omega - N.omega0) / N.sigma;
    return N.n_tot * std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * N.sigma);
}

inline double occupation_eval(const OccupationDensity& N, double omega) {
    return std::visit(
        [omega](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Vacuum>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, BoseEinstein>) {
                return n.T == 0.0 ? 0.0 : bose_einstein(omega, n.T);
            } else if constexpr (std::is_same_v<T, GaussianPeak>) {
                return gaussian_occupation_eval(n, omega);
            } else if constexpr (std::is_same_v<T, DeltaPeak>) {
                throw std::domain_error("occupation_eval: DeltaPeak has no pointwise density");
            } else {
                return detail::interp_linear(n.grid, n.values, omega);
            }
        },
        N);
}

// True iff the variant guarantees at-least-exponential (or compact-support)
// high-frequency suppression.
inline bool cutoff_check(const SpectralDensity& J) {
    return std::visit(
        [](const auto& j) -> bool {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, OhmicFamily>) {
                return true;
            } else if constexpr (std::is_same_v<T, BandLimited>) {
                return true;
            } else {
                return j.values.empty() || j.values.back() == 0.0;
            }
        },
        J);
}

}  // namespace dephasing
