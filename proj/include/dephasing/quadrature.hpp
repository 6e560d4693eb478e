// quadrature.hpp — Adaptive panel quadrature for oscillatory integrands

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dephasing/errors.hpp"

namespace dephasing {

struct QuadratureOptions {
    double rel_tol = 1e-9;
    // Upper bound on the width of the initial panels. Callers set this to a
    // fraction of the fastest oscillation period of the integrand.
    double max_panel_width = std::numeric_limits<double>::infinity();
    unsigned max_depth = 18;
};

// Integrates f over [lo, hi]. The interval is pre-split into panels no wider
// than max_panel_width, and each panel is integrated with adaptive
// Gauss-Kronrod (15-point). Throws quadrature_error when a panel cannot meet
// its share of the tolerance.
inline double integrate(const std::function<double(double)>& f, double lo, double hi,
                        const QuadratureOptions& opts = {}) {
    if (!(hi > lo)) return 0.0;

    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;

    const double width = hi - lo;
    std::size_t n_panels = 1;
    if (std::isfinite(opts.max_panel_width) && opts.max_panel_width > 0.0) {
        n_panels = static_cast<std::size_t>(std::ceil(width / opts.max_panel_width));
        n_panels = std::clamp<std::size_t>(n_panels, 1, 1u << 20);
    }

    // Two-phase global adaptivity. Phase 1 applies a single 15-point rule per
    // panel; phase 2 refines only the panels whose error estimate exceeds
    // their share of the global budget. Refining against a global absolute
    // budget matters: a panel straddling a zero of an oscillatory integrand
    // has a near-zero integral of its own, and recursing until the *panel's*
    // relative error converges would subdivide it essentially forever.
    std::vector<double> vals(n_panels);
    std::vector<double> errs(n_panels);
    double total = 0.0;
    for (std::size_t i = 0; i < n_panels; ++i) {
        const double a = lo + width * static_cast<double>(i) / static_cast<double>(n_panels);
        const double b = lo + width * static_cast<double>(i + 1) / static_cast<double>(n_panels);
        vals[i] = gk::integrate(f, a, b, 0, 0.0, &errs[i]);
        total += vals[i];
    }

    const double budget =
        opts.rel_tol * std::max(std::abs(total), 1.0) / static_cast<double>(n_panels);
    double total_err = 0.0;
    for (std::size_t i = 0; i < n_panels; ++i) {
        if (errs[i] > budget) {
            const double a = lo + width * static_cast<double>(i) / static_cast<double>(n_panels);
            const double b = lo + width * static_cast<double>(i + 1) / static_cast<double>(n_panels);
            double err = 0.0;
            // Boost's adaptive GK derives its absolute target as
            // tol * |panel estimate|; inflate tol so that target never drops
            // below this panel's share of the global budget.
            const double tol = std::max(
                opts.rel_tol, budget / std::max(std::abs(vals[i]), 1e-300));
            const double refined = gk::integrate(f, a, b, opts.max_depth, tol, &err);
            total += refined - vals[i];
            errs[i] = err;
        }
        total_err += errs[i];
    }

    const double scale = std::max(std::abs(total), 1.0);
    if (!(total_err <= 10.0 * opts.rel_tol * scale)) {
        throw quadrature_error("quadrature tolerance not reached", lo, hi, total_err);
    }
    return total;
}

}  // namespace dephasing
