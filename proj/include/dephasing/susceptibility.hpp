// susceptibility.hpp — Dephasing susceptibility gamma_d(k)
//
// Three independent routes: the double sum over qubit pairs, the modulus of
// the Fourier transform of d, and closed forms for the GHZ / GHZ' vectors on
// a linear array. Also: the Parseval integral over one reciprocal cell, and
// the sampled distribution of susceptibility values over random (i, j) pairs.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dephasing/errors.hpp"
#include "dephasing/quadrature.hpp"
#include "dephasing/qubit_register.hpp"
#include "dephasing/rng.hpp"

namespace dephasing {

namespace detail {
inline void check_same_size(const DifferenceVector& d, const QubitLayout& layout) {
    if (d.size() != layout.size()) {
        throw dimension_mismatch("difference vector and layout sizes disagree");
    }
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
}  // namespace detail

// gamma_d(k) = sum_{lm} d_l d_m cos(k . r_{lm})
inline double gamma_direct(const DifferenceVector& d, const QubitLayout& layout,
                           const std::vector<double>& k) {
    detail::check_same_size(d, layout);
    if (k.size() != layout.spatial_dim()) {
        throw dimension_mismatch("wave vector dimension does not match layout");
    }
    const std::size_t L = d.size();
    double s = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        if (d[l] == 0) continue;
        for (std::size_t m = 0; m < L; ++m) {
            if (d[m] == 0) continue;
            double kr = 0.0;
            for (std::size_t c = 0; c < k.size(); ++c) {
                kr += k[c] * (layout.position(l)[c] - layout.position(m)[c]);
            }
            s += d[l] * d[m] * std::cos(kr);
        }
    }
    return s;
}

// gamma_d(k) = |sum_l e^{-i k . r_l} d_l|^2
inline double gamma_fourier(const DifferenceVector& d, const QubitLayout& layout,
                            const std::vector<double>& k) {
    detail::check_same_size(d, layout);
    if (k.size() != layout.spatial_dim()) {
        throw dimension_mismatch("wave vector dimension does not match layout");
    }
    std::complex<double> dk{0.0, 0.0};
    for (std::size_t l = 0; l < d.size(); ++l) {
        if (d[l] == 0) continue;
        const double kr = detail::dot(k, layout.position(l));
        dk += static_cast<double>(d[l]) * std::exp(std::complex<double>(0.0, -kr));
    }
    return std::norm(dk);
}

// Scalar-k convenience for the 1D array model.
inline double gamma_direct_1d(const DifferenceVector& d, const QubitLayout& layout, double k) {
    return gamma_direct(d, layout, std::vector<double>{k});
}

namespace detail {

// Stable evaluation of sin^2(L*delta)/sin^2(delta) for integer L, where delta
// is the reduced distance to the nearest zero of the denominator. Near the
// removable singularity delta -> 0 the reduction error cancels in the ratio,
// so the value is accurate right through the L^2 peak.
inline double dirichlet_kernel_sq(std::size_t L, double delta) {
    const double den = std::sin(delta);
    if (den == 0.0) return static_cast<double>(L) * static_cast<double>(L);
    const double num = std::sin(static_cast<double>(L) * delta);
    return (num * num) / (den * den);
}

}  // namespace detail

// gamma_GHZ(k) = sin^2(akL/2) / sin^2(ak/2), L even.
inline double gamma_ghz_closed(std::size_t L, double a, double k) {
    if (L < 2 || L % 2 != 0) throw std::invalid_argument("gamma_ghz_closed: L must be even >= 2");
    if (!(a > 0.0)) throw std::invalid_argument("gamma_ghz_closed: a must be > 0");
    // sin^2(x) = sin^2(delta) and, for integer L, sin^2(Lx) = sin^2(L*delta)
    // with delta = x mod pi reduced to [-pi/2, pi/2].
    const double delta = std::remainder(a * k / 2.0, std::numbers::pi);
    return detail::dirichlet_kernel_sq(L, delta);
}

// gamma_GHZ'(k) = sin^2(akL/2) / cos^2(ak/2), L even.
inline double gamma_ghz_prime_closed(std::size_t L, double a, double k) {
    if (L < 2 || L % 2 != 0) {
        throw std::invalid_argument("gamma_ghz_prime_closed: L must be even >= 2");
    }
    if (!(a > 0.0)) throw std::invalid_argument("gamma_ghz_prime_closed: a must be > 0");
    // cos^2(x) = sin^2(delta) with delta the reduced distance to the nearest
    // zero of cos, and for even L, sin^2(Lx) = sin^2(L*delta) there.
    const double delta = std::remainder(a * k / 2.0 - std::numbers::pi / 2.0, std::numbers::pi);
    return detail::dirichlet_kernel_sq(L, delta);
}

// Integral of gamma_d over one reciprocal unit cell [0, 2pi/a). By Parseval
// this equals (2pi/V) ||d||^2 and is bounded by 2pi L / V.
inline double parseval_integral(const DifferenceVector& d, const QubitLayout& layout) {
    detail::check_same_size(d, layout);
    if (!layout.is_lattice() || layout.spatial_dim() != 1) {
        throw unsupported_layout("parseval_integral: requires a 1D lattice layout");
    }
    const double a = layout.spacing();
    const auto f = autocorrelation(d);
    auto gamma = [&](double k) {
        double s = 0.0;
        for (std::size_t r = 0; r < f.size(); ++r) s += f[r] * std::cos(a * k * static_cast<double>(r));
        return s;
    };
    QuadratureOptions opts;
    opts.rel_tol = 1e-10;
    opts.max_panel_width = 2.0 * std::numbers::pi / (a * static_cast<double>(d.size()));
    return integrate(gamma, 0.0, 2.0 * std::numbers::pi / a, opts);
}

struct SusceptibilityHistogram {
    double mean = 0.0;
    double stddev = 0.0;
    std::vector<double> bin_edges;
    std::vector<std::uint64_t> bin_counts;
    std::vector<double> samples;  // sorted gamma values

    // Fraction of samples with gamma >= threshold.
    double tail_fraction(double threshold) const {
        std::size_t n = 0;
        for (double g : samples) {
            if (g >= threshold) ++n;
        }
        return static_cast<double>(n) / static_cast<double>(samples.size());
    }
};

// Distribution of gamma_{i-j}(k) over (i, j) pairs drawn with each component
// independently uniform on {-1/2, +1/2}. Entry distribution of d = i - j:
// -1 w.p. 1/4, 0 w.p. 1/2, +1 w.p. 1/4. Deterministic for a fixed seed.
inline SusceptibilityHistogram susceptibility_histogram(std::size_t L, const QubitLayout& layout,
                                                        const std::vector<double>& k,
                                                        std::size_t n_samples, std::uint64_t seed,
                                                        std::size_t n_bins = 64) {
    if (n_samples == 0) throw std::invalid_argument("susceptibility_histogram: nSamples must be >= 1");
    if (L != layout.size()) throw dimension_mismatch("susceptibility_histogram: L != layout size");

    SusceptibilityHistogram h;
    h.samples.reserve(n_samples);
    std::vector<int> d(L);
    for (std::size_t s = 0; s < n_samples; ++s) {
        auto eng = sample_engine(seed, s);
        BitDrawer bits(eng);
        for (std::size_t l = 0; l < L; ++l) {
            const int i = bits.next() ? 1 : -1;  // 2*i_l
            const int j = bits.next() ? 1 : -1;  // 2*j_l
            d[l] = (i - j) / 2;
        }
        h.samples.push_back(gamma_direct(DifferenceVector(d), layout, k));
    }

    const double n = static_cast<double>(n_samples);
    h.mean = std::accumulate(h.samples.begin(), h.samples.end(), 0.0) / n;
    double var = 0.0;
    for (double g : h.samples) var += (g - h.mean) * (g - h.mean);
    h.stddev = std::sqrt(var / n);

    const double hi = static_cast<double>(L) * static_cast<double>(L);
    h.bin_edges.resize(n_bins + 1);
    h.bin_counts.assign(n_bins, 0);
    for (std::size_t b = 0; b <= n_bins; ++b) {
        h.bin_edges[b] = hi * static_cast<double>(b) / static_cast<double>(n_bins);
    }
    for (double g : h.samples) {
        auto b = static_cast<std::size_t>(g / hi * static_cast<double>(n_bins));
        if (b >= n_bins) b = n_bins - 1;
        ++h.bin_counts[b];
    }
    std::sort(h.samples.begin(), h.samples.end());
    return h;
}

}  // namespace dephasing
