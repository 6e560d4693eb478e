// scaling.hpp — System-size sweeps and power-law exponent classification

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dephasing/decoherence.hpp"
#include "dephasing/qubit_register.hpp"
#include "dephasing/reservoir.hpp"

namespace dephasing {

enum class ScalingClass { Linear, Superlinear, QuadraticResonant };

inline const char* to_string(ScalingClass c) {
    switch (c) {
        case ScalingClass::Linear: return "linear";
        case ScalingClass::Superlinear: return "superlinear";
        default: return "quadratic-resonant";
    }
}

struct WindowFit {
    std::size_t first_index = 0;  // index of the first L in the window
    double slope = 0.0;
    double residual = 0.0;  // RMS residual of the log-log fit
};

struct ScalingOptions {
    std::size_t window = 4;
    double linear_threshold = 1.1;
    double crossover_threshold = 1.5;
    double quadratic_threshold = 1.9;
    double floor = 1e-12;  // Gamma values below this are excluded from fits
};

struct ScalingReport {
    std::vector<std::size_t> L_values;
    std::vector<double> gamma_values;
    std::vector<WindowFit> window_fits;
    ScalingClass classification = ScalingClass::Linear;
    std::optional<std::size_t> crossover_L;  // end of the first window with slope < crossover_threshold
};

// Least-squares slope of ln(gamma) against ln(L).
inline WindowFit fit_log_log(const std::vector<std::size_t>& L, const std::vector<double>& g,
                             std::size_t first, std::size_t count) {
    WindowFit fit;
    fit.first_index = first;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = first; i < first + count; ++i) {
        const double x = std::log(static_cast<double>(L[i]));
        const double y = std::log(g[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(count);
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (std::size_t i = first; i < first + count; ++i) {
        const double x = std::log(static_cast<double>(L[i]));
        const double r = std::log(g[i]) - (fit.slope * x + intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

// Evaluates gamma_of_L per L, fits sliding log-log windows, and classifies by
// the terminal-window slope.
inline ScalingReport sweep(const std::function<double(std::size_t)>& gamma_of_L,
                           const std::vector<std::size_t>& L_values,
                           const ScalingOptions& opts = {}) {
    for (std::size_t i = 1; i < L_values.size(); ++i) {
        if (L_values[i] <= L_values[i - 1]) {
            throw std::invalid_argument("sweep: L values must be strictly increasing");
        }
    }
    ScalingReport report;
    for (std::size_t L : L_values) {
        const double g = gamma_of_L(L);
        if (g < opts.floor) continue;  // keep log fits well-defined
        report.L_values.push_back(L);
        report.gamma_values.push_back(g);
    }
    if (report.L_values.size() < opts.window) {
        throw std::invalid_argument("sweep: needs at least `window` usable L values");
    }
    for (std::size_t first = 0; first + opts.window <= report.L_values.size(); ++first) {
        report.window_fits.push_back(
            fit_log_log(report.L_values, report.gamma_values, first, opts.window));
        const auto& fit = report.window_fits.back();
        if (!report.crossover_L && fit.slope < opts.crossover_threshold) {
            // Report the last L of the crossing window: the size by which the
            // fitted slope has demonstrably dropped below the threshold.
            report.crossover_L = report.L_values[first + opts.window - 1];
        }
    }
    const double terminal = report.window_fits.back().slope;
    if (terminal >= opts.quadratic_threshold) {
        report.classification = ScalingClass::QuadraticResonant;
    } else if (terminal > opts.linear_threshold) {
        report.classification = ScalingClass::Superlinear;
    } else {
        report.classification = ScalingClass::Linear;
    }
    return report;
}

// Leading order in time of the decoherence function:
//   lim_{t->0} Gamma/t^2 = (factor/2) int J(w) gamma(w) (1 + 2 Nbar(w)) dw,
// with a DeltaPeak occupation contributing its term exactly.
inline double leading_time_coefficient(const std::function<double(double)>& gamma, double a_L,
                                       const SpectralDensity& J, const OccupationDensity& N,
                                       const ContinuumOptions& opts = {}) {
    if (!cutoff_check(J)) {
        throw cutoff_violation("leading_time_coefficient: spectral density lacks a cutoff");
    }
    const double hi = detail::upper_limit(J, N);
    QuadratureOptions q;
    q.rel_tol = opts.rel_tol;
    q.max_panel_width = detail::panel_width(std::numeric_limits<double>::min(), a_L, N);

    auto vac = [&](double w) { return spectral_density_eval(J, w) * gamma(w); };
    double total = integrate(vac, 0.0, hi, q);
    if (const auto* delta = std::get_if<DeltaPeak>(&N)) {
        total += spectral_density_eval(J, delta->omega0) * gamma(delta->omega0) * 2.0 *
                 delta->n_tot;
    } else if (!std::holds_alternative<Vacuum>(N)) {
        auto ex = [&](double w) {
            return spectral_density_eval(J, w) * gamma(w) * 2.0 * occupation_eval(N, w);
        };
        total += integrate(ex, 0.0, hi, q);
    }
    return 0.5 * opts.solid_angle_factor * total;
}

struct SigmaCrossover {
    double sigma = 0.0;
    std::optional<std::size_t> crossover_L;
};

// Per-sigma crossover of the GHZ' leading-order coefficient under a Gaussian
// occupation peak at pi/a: the first L where the window slope drops below the
// crossover threshold. Expected within a factor 2 of 2 pi / (a sigma).
inline std::vector<SigmaCrossover> crossover_sigma(const std::vector<double>& sigma_values,
                                                   const std::vector<std::size_t>& L_values,
                                                   double a, double alpha1, double n_tot,
                                                   const ScalingOptions& sopts = {},
                                                   double rel_tol = 1e-8) {
    const SpectralDensity J = BandLimited{alpha1, 2.0 * std::numbers::pi / a};
    std::vector<SigmaCrossover> out;
    for (double sigma : sigma_values) {
        if (!(sigma >= 0.0)) throw std::invalid_argument("crossover_sigma: sigma must be >= 0");
        OccupationDensity N;
        if (sigma == 0.0) {
            N = DeltaPeak{std::numbers::pi / a, n_tot};
        } else {
            N = GaussianPeak{std::numbers::pi / a, sigma, n_tot};
        }
        ContinuumOptions copts;
        copts.rel_tol = rel_tol;
        copts.solid_angle_factor = 2.0;
        auto gamma_of_L = [&](std::size_t L) {
            return leading_time_coefficient(family_susceptibility(StateFamily::GHZPrime, L, a),
                                            a * static_cast<double>(L), J, N, copts);
        };
        const auto report = sweep(gamma_of_L, L_values, sopts);
        out.push_back({sigma, report.crossover_L});
    }
    return out;
}

// Whether the GHZ closed-form sweep enters the aL >~ t regime: true iff the
// window slope drops below the crossover threshold at some L with aL within
// a factor 2 of t.
inline bool time_crossover(double dim, double t, double a, double alpha, double omega_c,
                           const std::vector<std::size_t>& L_values,
                           const ScalingOptions& sopts = {}) {
    auto gamma_of_L = [&](std::size_t L) {
        const auto ctx = ClosedFormContext::for_vector(uniform_difference(L), a, dim, alpha,
                                                       omega_c);
        return vacuum_closed_form(ctx, t);
    };
    const auto report = sweep(gamma_of_L, L_values, sopts);
    if (!report.crossover_L) return false;
    const double aL = a * static_cast<double>(*report.crossover_L);
    return aL >= 0.5 * t && aL <= 2.0 * t;
}

}  // namespace dephasing
