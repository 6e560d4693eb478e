// decoherence.hpp — The decoherence function Gamma_d(t)
//
// Three engines:
//   * discrete mode sums,
//   * continuum quadrature with the vacuum/excitation split,
//   * the closed-form vacuum solution on the linear array (complex-power
//     branch for dim != 1, complex-log branch for dim = 1),
// plus small-time and infinite-time limits and the infinite-time slope.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dephasing/errors.hpp"
#include "dephasing/quadrature.hpp"
#include "dephasing/qubit_register.hpp"
#include "dephasing/reservoir.hpp"
#include "dephasing/susceptibility.hpp"

namespace dephasing {

// tau(t, omega) = (1 - cos(omega t)) / omega^2, with the continuous limit
// t^2/2 at omega = 0. Evaluated via sin(x/2) to avoid cancellation.
inline double tau(double t, double omega) {
    if (omega == 0.0) return 0.5 * t * t;
    const double s = std::sin(0.5 * omega * t);
    return 2.0 * s * s / (omega * omega);
}

struct GammaSplit {
    double vac = 0.0;
    double ex = 0.0;
    double total() const { return vac + ex; }
};

// Eq.-(8)-style sum over an explicit mode set.
inline GammaSplit gamma_discrete(const DifferenceVector& d, const QubitLayout& layout,
                                 const DiscreteModeSet& modes, double t) {
    GammaSplit out;
    for (const Mode& mode : modes.modes) {
        const double g2 = std::norm(mode.g);
        const double gam = gamma_direct_1d(d, layout, mode.k);
        const double w = g2 * gam * tau(t, mode.omega);
        out.vac += w;
        out.ex += w * 2.0 * mode.n_bar;
    }
    return out;
}

struct ContinuumOptions {
    double rel_tol = 1e-9;
    double solid_angle_factor = 1.0;
    // Skip the vacuum integral and return only the excitation part; useful in
    // sweeps that consume Gamma^(ex) alone.
    bool excitation_only = false;
};

namespace detail {

// Truncation point where the exponentially suppressed integrand is negligible.
inline double upper_limit(const SpectralDensity& J, const OccupationDensity& N) {
    double hi = std::visit(
        [](const auto& j) -> double {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, OhmicFamily>) {
                // omega^dim e^{-omega/wc} < 1e-20 * wc^dim  for omega/wc = x:
                // x solves x - dim ln x = 46.
                double x = 46.0;
                for (int i = 0; i < 4; ++i) x = 46.0 + std::max(j.dim, 0.0) * std::log(x);
                return j.omega_c * x;
            } else if constexpr (std::is_same_v<T, BandLimited>) {
                return j.omega_max;
            } else {
                return j.grid.empty() ? 0.0 : j.grid.back();
            }
        },
        J);
    if (const auto* g = std::get_if<GaussianPeak>(&N)) {
        hi = std::max(hi, g->omega0 + 10.0 * g->sigma);
    }
    return hi;
}

inline double panel_width(double t, double aL, const OccupationDensity& N) {
    double w = std::min(std::numbers::pi / std::max(t, 1e-300),
                        std::numbers::pi / std::max(aL, 1e-300)) /
               4.0;
    if (const auto* g = std::get_if<GaussianPeak>(&N)) w = std::min(w, g->sigma / 2.0);
    return w;
}

}  // namespace detail

// Continuum-limit decoherence function, Eq.-(16)-style isotropic quadrature:
//   Gamma^(vac) = factor * int J(w) gamma(w) tau(t, w) dw
//   Gamma^(ex)  = factor * int J(w) gamma(w) tau(t, w) 2 Nbar(w) dw
// `gamma` is the susceptibility as a function of frequency; `a_L` = a*L sets
// the fastest susceptibility oscillation (panel width cap).
inline GammaSplit gamma_continuum_fn(const std::function<double(double)>& gamma, double a_L,
                                     const SpectralDensity& J, const OccupationDensity& N,
                                     double t, const ContinuumOptions& opts = {}) {
    if (!cutoff_check(J)) {
        throw cutoff_violation("gamma_continuum: spectral density lacks a high-frequency cutoff");
    }
    if (t < 0.0) throw std::invalid_argument("gamma_continuum: t must be >= 0");
    GammaSplit out;
    if (t == 0.0) return out;

    const double hi = detail::upper_limit(J, N);
    QuadratureOptions q;
    q.rel_tol = opts.rel_tol;
    q.max_panel_width = detail::panel_width(t, a_L, N);

    auto vac_integrand = [&](double w) { return spectral_density_eval(J, w) * gamma(w) * tau(t, w); };

    // Subohmic spectral densities behave as w^dim near the origin; for
    // 0 < dim < 1 the derivative is singular there, so integrate [0, eps]
    // in the variable u = w^dim, which makes the integrand smooth.
    const auto* ohmic_sub = std::get_if<OhmicFamily>(&J);
    const bool subohmic = ohmic_sub != nullptr && ohmic_sub->dim < 1.0 && ohmic_sub->dim > 0.0;
    const double eps =
        subohmic ? std::min(ohmic_sub->omega_c, 1.0 / std::max(t, 1e-300)) / 100.0 : 0.0;
    QuadratureOptions qs;
    qs.rel_tol = opts.rel_tol;
    auto origin_substituted = [&](const std::function<double(double)>& f) {
        const double dim = ohmic_sub->dim;
        auto sub = [&f, dim](double u) {
            const double w = std::pow(u, 1.0 / dim);
            return f(w) * std::pow(u, 1.0 / dim - 1.0) / dim;
        };
        return integrate(sub, 0.0, std::pow(eps, dim), qs);
    };

    if (!opts.excitation_only) {
        double vac_lo = 0.0;
        if (subohmic) {
            out.vac += opts.solid_angle_factor * origin_substituted(vac_integrand);
            vac_lo = eps;
        }
        out.vac += opts.solid_angle_factor * integrate(vac_integrand, vac_lo, hi, q);
    }

    if (std::holds_alternative<Vacuum>(N)) return out;

    if (const auto* delta = std::get_if<DeltaPeak>(&N)) {
        // Exact sigma -> 0 limit of a Gaussian peak: a single excited mode.
        out.ex = opts.solid_angle_factor * spectral_density_eval(J, delta->omega0) *
                 gamma(delta->omega0) * tau(t, delta->omega0) * 2.0 * delta->n_tot;
        return out;
    }

    auto ex_integrand = [&](double w) {
        return spectral_density_eval(J, w) * gamma(w) * tau(t, w) * 2.0 * occupation_eval(N, w);
    };

    // The excitation integral only needs the support of the occupation
    // density: the Bose-Einstein factor is cut to zero past omega/T = 46 and
    // the Gaussian peak is negligible past 10 sigma.
    double hi_ex = hi;
    const auto* thermal = std::get_if<BoseEinstein>(&N);
    if (thermal != nullptr) hi_ex = std::min(hi_ex, 46.0 * thermal->T);
    if (const auto* g = std::get_if<GaussianPeak>(&N)) {
        hi_ex = std::min(hi_ex, g->omega0 + 10.0 * g->sigma);
    }

    // Thermal occupation makes the integrand ~ w^{dim-1} near the origin; the
    // same u = w^dim substitution removes the integrable singularity.
    double lo = 0.0;
    if (subohmic && thermal != nullptr && thermal->T > 0.0) {
        out.ex += opts.solid_angle_factor * origin_substituted(ex_integrand);
        lo = eps;
    }
    out.ex += opts.solid_angle_factor * integrate(ex_integrand, lo, hi_ex, q);
    return out;
}

// Susceptibility-of-frequency adapter for a difference vector on a layout.
// On a 1D lattice the cosine-transform form sum_r f_r cos(a w r) is used.
inline std::function<double(double)> susceptibility_of_frequency(const DifferenceVector& d,
                                                                 const QubitLayout& layout) {
    detail::check_same_size(d, layout);
    if (layout.is_lattice() && layout.spatial_dim() == 1) {
        const double a = layout.spacing();
        auto f = autocorrelation(d);
        return [a, f = std::move(f)](double w) {
            double s = 0.0;
            for (std::size_t r = 0; r < f.size(); ++r) {
                s += f[r] * std::cos(a * w * static_cast<double>(r));
            }
            return s;
        };
    }
    return [d, layout](double w) { return gamma_direct_1d(d, layout, w); };
}

inline GammaSplit gamma_continuum(const DifferenceVector& d, const QubitLayout& layout,
                                  const SpectralDensity& J, const OccupationDensity& N, double t,
                                  const ContinuumOptions& opts = {}) {
    const double a_L = layout.is_lattice()
                           ? layout.spacing() * static_cast<double>(layout.size())
                           : static_cast<double>(layout.size());
    return gamma_continuum_fn(susceptibility_of_frequency(d, layout), a_L, J, N, t, opts);
}

// Inputs of the closed-form vacuum solution on the linear array.
struct ClosedFormContext {
    double dim = 1.0;
    double alpha = 1.0;
    double omega_c = 1.0;
    double a = 1.0;
    std::vector<double> f;  // autocorrelation of d

    static ClosedFormContext for_vector(const DifferenceVector& d, double a, double dim,
                                        double alpha, double omega_c) {
        return ClosedFormContext{dim, alpha, omega_c, a, autocorrelation(d)};
    }
};

namespace detail {

// I_r(t) = int_0^inf w^dim tau(t, w) e^{-w/wc} cos(a w r) dw in closed form.
// Q_rj = i(j t/a - r) + 1/(a wc) always has positive real part, so principal
// branches of pow/log are singularity-free.
inline double closed_form_I_r(double r, double t, double dim, double a, double omega_c) {
    using cplx = std::complex<double>;
    auto Q = [&](double j) { return cplx(1.0 / (a * omega_c), j * t / a - r); };
    if (std::abs(dim - 1.0) < 1e-12) {
        const cplx v = -2.0 * std::log(Q(0)) + std::log(Q(-1)) + std::log(Q(1));
        return 0.5 * v.real();
    }
    const double p = 1.0 - dim;
    const cplx v = 2.0 * std::pow(Q(0), p) - std::pow(Q(-1), p) - std::pow(Q(1), p);
    return 0.5 * std::pow(a, p) * std::tgamma(dim - 1.0) * v.real();
}

}  // namespace detail

// Gamma^(vac)(t) = alpha * sum_r f_r I_r(t).
inline double vacuum_closed_form(const ClosedFormContext& ctx, double t) {
    if (!(ctx.dim > 0.0)) throw std::invalid_argument("vacuum_closed_form: dim must be > 0");
    if (t < 0.0) throw std::invalid_argument("vacuum_closed_form: t must be >= 0");
    if (t == 0.0) return 0.0;
    double s = 0.0;
    for (std::size_t r = 0; r < ctx.f.size(); ++r) {
        if (ctx.f[r] == 0.0) continue;
        s += ctx.f[r] *
             detail::closed_form_I_r(static_cast<double>(r), t, ctx.dim, ctx.a, ctx.omega_c);
    }
    return ctx.alpha * s;
}

struct LimitEstimate {
    double value = 0.0;
    double relative_error_bound = 0.0;
};

// Leading second-order-in-time vacuum decoherence,
//   (1/2) alpha ||d||^2 Gamma~(1+dim) wc^{dim-1} (t wc)^2.
inline LimitEstimate small_time_vacuum(const ClosedFormContext& ctx, double norm_squared,
                                       double t) {
    if (!(ctx.dim > 0.0)) throw std::invalid_argument("small_time_vacuum: dim must be > 0");
    if (t < 0.0) throw std::invalid_argument("small_time_vacuum: t must be >= 0");
    LimitEstimate out;
    const double twc = t * ctx.omega_c;
    out.value = 0.5 * ctx.alpha * norm_squared * std::tgamma(1.0 + ctx.dim) *
                std::pow(ctx.omega_c, ctx.dim - 1.0) * twc * twc;
    const double awc = ctx.a * ctx.omega_c;
    const double ta = t / ctx.a;
    out.relative_error_bound = twc * twc + 4.0 / std::pow(awc, ctx.dim + 1.0);
    if (twc > 0.0) out.relative_error_bound += std::pow(ta, 4.0) / (awc * twc * twc);
    return out;
}

// Plateau height alpha ||d||^2 Gamma~(dim-1) wc^{dim-1}, valid for dim >= 2
// where the error bound 2/(a wc)^dim holds.
inline LimitEstimate plateau_height(const ClosedFormContext& ctx, double norm_squared) {
    if (ctx.dim < 2.0) throw std::invalid_argument("plateau_height: requires dim >= 2");
    LimitEstimate out;
    out.value = ctx.alpha * norm_squared * std::tgamma(ctx.dim - 1.0) *
                std::pow(ctx.omega_c, ctx.dim - 1.0);
    out.relative_error_bound = 2.0 / std::pow(ctx.a * ctx.omega_c, ctx.dim);
    return out;
}

// lim_{t->inf} dGamma/dt = (pi/2) lim_{w->0} J(w) gamma(w) (1 + 2 Nbar(w)),
// evaluated by leading-order series. Returns +infinity when the limit
// diverges; 0 signals a quasi-plateau.
inline double infinite_time_slope(const DifferenceVector& d, const QubitLayout& layout,
                                  const SpectralDensity& J, const OccupationDensity& N) {
    detail::check_same_size(d, layout);

    // gamma(w) = c_g w^{p_g} + O(w^{p_g+2}) near the origin.
    double p_g = 0.0;
    double c_g = 0.0;
    const double sum_d = static_cast<double>(d.sum());
    if (sum_d != 0.0) {
        c_g = sum_d * sum_d;
    } else {
        double m1 = 0.0;
        for (std::size_t l = 0; l < d.size(); ++l) m1 += d[l] * layout.position(l)[0];
        p_g = 2.0;
        c_g = m1 * m1;
        if (c_g == 0.0) {
            double m2 = 0.0;
            for (std::size_t l = 0; l < d.size(); ++l) {
                const double r = layout.position(l)[0];
                m2 += d[l] * r * r;
            }
            p_g = 4.0;
            c_g = 0.25 * m2 * m2;
        }
    }

    // J(w) = c_J w^{p_J} near the origin.
    double p_J = 0.0;
    double c_J = 0.0;
    if (const auto* ohmic = std::get_if<OhmicFamily>(&J)) {
        p_J = ohmic->dim;
        c_J = ohmic->alpha;
    } else if (const auto* band = std::get_if<BandLimited>(&J)) {
        p_J = 1.0;
        c_J = 0.5 * band->alpha1;
    } else {
        c_J = spectral_density_eval(J, 0.0);
    }

    // 1 + 2 Nbar(w) = c_N w^{p_N} at leading order.
    double p_N = 0.0;
    double c_N = 1.0;
    if (const auto* th = std::get_if<BoseEinstein>(&N); th != nullptr && th->T > 0.0) {
        p_N = -1.0;
        c_N = 2.0 * th->T;
    } else if (const auto* g = std::get_if<GaussianPeak>(&N)) {
        c_N = 1.0 + 2.0 * gaussian_occupation_eval(*g, 0.0);
    }

    const double coeff = c_J * c_g * c_N;
    if (coeff == 0.0) return 0.0;
    const double p = p_J + p_g + p_N;
    if (p > 0.0) return 0.0;
    if (p == 0.0) return 0.5 * std::numbers::pi * coeff;
    return std::numeric_limits<double>::infinity();
}

enum class StateFamily { GHZ, GHZPrime };

inline DifferenceVector family_difference(StateFamily family, std::size_t L) {
    return family == StateFamily::GHZ ? uniform_difference(L) : alternating_difference(L);
}

// Closed-form susceptibility for a state family on a lattice with spacing a,
// falling back to the double sum near removable singularities.
inline std::function<double(double)> family_susceptibility(StateFamily family, std::size_t L,
                                                           double a) {
    if (L % 2 == 0 && L >= 2) {
        if (family == StateFamily::GHZ) {
            return [L, a](double w) { return gamma_ghz_closed(L, a, w); };
        }
        return [L, a](double w) { return gamma_ghz_prime_closed(L, a, w); };
    }
    const auto d = family_difference(family, L);
    return susceptibility_of_frequency(d, QubitLayout::linear_array(L, a));
}

// Per-L excitation decoherence in a subohmic thermal reservoir at fixed t0.
inline std::vector<double> subohmic_excitation_sweep(const std::vector<std::size_t>& L_values,
                                                     double a, double alpha, double dim,
                                                     double omega_c, double T, double t0,
                                                     StateFamily family,
                                                     const ContinuumOptions& opts = {}) {
    if (!(dim > 0.0 && dim < 1.0)) {
        throw std::invalid_argument("subohmic_excitation_sweep: requires 0 < dim < 1");
    }
    if (!(T > 0.0)) throw std::invalid_argument("subohmic_excitation_sweep: requires T > 0");
    const SpectralDensity J = OhmicFamily{alpha, dim, omega_c};
    const OccupationDensity N = BoseEinstein{T};
    ContinuumOptions ex_opts = opts;
    ex_opts.excitation_only = true;
    std::vector<double> out;
    out.reserve(L_values.size());
    for (std::size_t L : L_values) {
        const auto gamma = family_susceptibility(family, L, a);
        out.push_back(
            gamma_continuum_fn(gamma, a * static_cast<double>(L), J, N, t0, ex_opts).ex);
    }
    return out;
}

// Smallest t with Gamma(t) = 1 (the dephasing time T2), by bracketing and
// bisection to the given tolerance in t.
inline std::optional<double> dephasing_time(const std::function<double(double)>& gamma_of_t,
                                            double t_max, double tol = 1e-6) {
    double lo = 0.0;
    double hi = 0.0;
    const int n_scan = 1024;
    for (int i = 1; i <= n_scan; ++i) {
        const double t = t_max * static_cast<double>(i) / n_scan;
        if (gamma_of_t(t) >= 1.0) {
            hi = t;
            lo = t_max * static_cast<double>(i - 1) / n_scan;
            break;
        }
    }
    if (hi == 0.0) return std::nullopt;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (gamma_of_t(mid) >= 1.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

// Time series with the vacuum/excitation split and provenance fields.
struct DecoherenceSeries {
    std::vector<double> times;
    std::vector<double> gamma_vac;
    std::vector<double> gamma_ex;
    std::vector<double> gamma_total;
    std::string method;  // "discrete", "quadrature", or "closed-form"
    double solid_angle_factor = 1.0;
};

}  // namespace dephasing
