// fidelity.hpp — Dynamical fidelity of states (|i> + |j>)/sqrt(2)
//
// The interaction-picture phases Theta and Lambda depend on the basis pair
// (i, j) itself, not on d = i - j alone, so the pair is carried explicitly.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dephasing/decoherence.hpp"
#include "dephasing/errors.hpp"
#include "dephasing/qubit_register.hpp"
#include "dephasing/reservoir.hpp"

namespace dephasing {

// Pair of computational-basis states with spin components +-1/2, stored as
// doubled integers (+-1) to keep the arithmetic exact.
class BasisPair {
public:
    BasisPair(std::vector<int> i_twice, std::vector<int> j_twice)
        : i_(std::move(i_twice)), j_(std::move(j_twice)) {
        if (i_.empty() || i_.size() != j_.size()) {
            throw dimension_mismatch("BasisPair: i and j must be nonempty and of equal length");
        }
        for (std::size_t l = 0; l < i_.size(); ++l) {
            if ((i_[l] != 1 && i_[l] != -1) || (j_[l] != 1 && j_[l] != -1)) {
                throw std::invalid_argument("BasisPair: components must be +-1/2 (stored as +-1)");
            }
        }
    }

    static BasisPair ghz(std::size_t L) {
        return BasisPair(std::vector<int>(L, 1), std::vector<int>(L, -1));
    }

    static BasisPair ghz_prime(std::size_t L) {
        std::vector<int> i(L), j(L);
        for (std::size_t l = 0; l < L; ++l) {
            i[l] = (l % 2 == 0) ? 1 : -1;
            j[l] = -i[l];
        }
        return BasisPair(std::move(i), std::move(j));
    }

    std::size_t size() const noexcept { return i_.size(); }
    double i(std::size_t l) const noexcept { return 0.5 * i_[l]; }
    double j(std::size_t l) const noexcept { return 0.5 * j_[l]; }

    BasisPair swapped() const { return BasisPair(j_, i_); }

    DifferenceVector difference() const {
        std::vector<int> d(i_.size());
        for (std::size_t l = 0; l < i_.size(); ++l) d[l] = (i_[l] - j_[l]) / 2;
        return DifferenceVector(std::move(d));
    }

private:
    std::vector<int> i_;
    std::vector<int> j_;
};

// chi = (1/4) Gamma''(0) = (1/4) sum_k |g_k|^2 gamma_d(k) (1 + 2 Nbar_k).
inline double chi_discrete(const BasisPair& pair, const QubitLayout& layout,
                           const DiscreteModeSet& modes) {
    const auto d = pair.difference();
    detail::check_same_size(d, layout);
    double s = 0.0;
    for (const Mode& mode : modes.modes) {
        s += std::norm(mode.g) * gamma_direct_1d(d, layout, mode.k) * (1.0 + 2.0 * mode.n_bar);
    }
    return 0.25 * s;
}

// Theta_ij(t) = sum_k |g_k|^2 (w t - sin w t)/w^2
//                 * sum_{lm} (i_l i_m - j_l j_m) cos(k r_{lm})
inline double theta_phase(const BasisPair& pair, const QubitLayout& layout,
                          const DiscreteModeSet& modes, double t) {
    if (pair.size() != layout.size()) {
        throw dimension_mismatch("theta_phase: pair and layout sizes disagree");
    }
    const std::size_t L = pair.size();
    double out = 0.0;
    for (const Mode& mode : modes.modes) {
        double kernel;
        if (mode.omega == 0.0) {
            kernel = 0.0;  // series limit: (w t - sin w t)/w^2 = t^3 w / 6 -> 0
        } else {
            kernel = (mode.omega * t - std::sin(mode.omega * t)) / (mode.omega * mode.omega);
        }
        if (kernel == 0.0) continue;
        double sys = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            for (std::size_t m = 0; m < L; ++m) {
                const double w = pair.i(l) * pair.i(m) - pair.j(l) * pair.j(m);
                if (w == 0.0) continue;
                sys += w * std::cos(mode.k * (layout.position(l)[0] - layout.position(m)[0]));
            }
        }
        out += std::norm(mode.g) * kernel * sys;
    }
    return out;
}

// Lambda_ij(t) = 2 sum_k |g_k|^2 tau(t, w_k) sum_{lm} i_l j_m sin(k r_{lm})
inline double lambda_phase(const BasisPair& pair, const QubitLayout& layout,
                           const DiscreteModeSet& modes, double t) {
    if (pair.size() != layout.size()) {
        throw dimension_mismatch("lambda_phase: pair and layout sizes disagree");
    }
    const std::size_t L = pair.size();
    double out = 0.0;
    for (const Mode& mode : modes.modes) {
        double sys = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            for (std::size_t m = 0; m < L; ++m) {
                sys += pair.i(l) * pair.j(m) *
                       std::sin(mode.k * (layout.position(l)[0] - layout.position(m)[0]));
            }
        }
        out += 2.0 * std::norm(mode.g) * tau(t, mode.omega) * sys;
    }
    return out;
}

// F = 1/2 + 1/2 cos(Theta - Lambda) e^{-Gamma}, with the couplings scaled
// g -> eps g (Gamma, Theta, Lambda are all quadratic in the coupling).
inline double dynamical_fidelity(const BasisPair& pair, const QubitLayout& layout,
                                 const DiscreteModeSet& modes, double t, double eps) {
    const double eps2 = eps * eps;
    const double gamma =
        eps2 * gamma_discrete(pair.difference(), layout, modes, t).total();
    const double theta = eps2 * theta_phase(pair, layout, modes, t);
    const double lambda = eps2 * lambda_phase(pair, layout, modes, t);
    return 0.5 + 0.5 * std::cos(theta - lambda) * std::exp(-gamma);
}

}  // namespace dephasing
