#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "dephasing/fidelity.hpp"

using namespace dephasing;
namespace num = std::numbers;

namespace {

DiscreteModeSet random_modes(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.2, 4.0);
    std::uniform_real_distribution<double> g(-1.0, 1.0);
    DiscreteModeSet modes;
    for (std::size_t i = 0; i < n; ++i) {
        modes.modes.push_back(Mode{u(rng), u(rng), {g(rng), g(rng)}, u(rng) - 0.2});
    }
    return modes;
}

BasisPair random_pair(std::mt19937_64& rng, std::size_t L) {
    std::vector<int> i(L), j(L);
    for (std::size_t l = 0; l < L; ++l) {
        i[l] = rng() % 2 ? 1 : -1;
        j[l] = rng() % 2 ? 1 : -1;
    }
    return BasisPair(i, j);
}

}  // namespace

TEST_CASE("basis pair construction and difference") {
    CHECK_THROWS_AS(BasisPair({1}, {1, -1}), dimension_mismatch);
    CHECK_THROWS_AS(BasisPair({2}, {1}), std::invalid_argument);
    const auto ghz = BasisPair::ghz(4);
    CHECK(ghz.difference().entries() == std::vector<int>{1, 1, 1, 1});
    const auto prime = BasisPair::ghz_prime(4);
    CHECK(prime.difference().entries() == std::vector<int>{1, -1, 1, -1});
}

TEST_CASE("curvature susceptibility chi at hand-checked points") {
    const auto layout = QubitLayout::linear_array(1, 1.0);
    const BasisPair pair({1}, {-1});
    const DiscreteModeSet one{{Mode{0.5, 2.0, {1.0, 0.0}, 0.0}}};
    CHECK(chi_discrete(pair, layout, one) == doctest::Approx(0.25).epsilon(1e-14));

    const BasisPair same({1, -1}, {1, -1});
    const auto layout2 = QubitLayout::linear_array(2, 1.0);
    CHECK(chi_discrete(same, layout2, one) == 0.0);
}

TEST_CASE("chi equals a quarter of the initial curvature of Gamma") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t L = 1 + rng() % 4;
        const auto layout = QubitLayout::linear_array(L, 1.0);
        const auto pair = random_pair(rng, L);
        const auto modes = random_modes(rng, 1 + rng() % 4);
        const double chi = chi_discrete(pair, layout, modes);

        double w_max = 0.0;
        for (const auto& m : modes.modes) w_max = std::max(w_max, m.omega);
        const double h = 1e-4 * 2 * num::pi / std::max(w_max, 1.0);
        const auto d = pair.difference();
        // Gamma(0) = 0, so Gamma''(0) ~ (Gamma(2h) - 2 Gamma(h)) / h^2.
        const double fd = (gamma_discrete(d, layout, modes, 2 * h).total() -
                           2 * gamma_discrete(d, layout, modes, h).total()) /
                          (h * h);
        if (chi == 0.0) {
            CHECK(std::abs(fd) <= 1e-10);
        } else {
            CHECK(fd / 4.0 == doctest::Approx(chi).epsilon(1e-5));
        }
    }
}

TEST_CASE("phase Theta symmetries") {
    std::mt19937_64 rng(81);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t L = 1 + rng() % 4;
        const auto layout = QubitLayout::linear_array(L, 1.0);
        const auto pair = random_pair(rng, L);
        const auto modes = random_modes(rng, 3);
        const double t = 0.3 + 0.2 * rep;

        const BasisPair diag(std::vector<int>(L, 1), std::vector<int>(L, 1));
        CHECK(theta_phase(diag, layout, modes, t) == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(theta_phase(pair.swapped(), layout, modes, t) ==
              doctest::Approx(-theta_phase(pair, layout, modes, t)).epsilon(1e-12));
    }
    // Single qubit: i^2 = j^2 always, so Theta vanishes identically.
    const auto layout = QubitLayout::linear_array(1, 1.0);
    const DiscreteModeSet one{{Mode{0.5, 1.0, {1.0, 0.0}, 0.0}}};
    CHECK(theta_phase(BasisPair({1}, {-1}), layout, one, num::pi) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("phase Lambda symmetries") {
    const auto l1 = QubitLayout::linear_array(1, 1.0);
    const DiscreteModeSet one{{Mode{0.7, 1.3, {0.6, -0.2}, 0.4}}};
    CHECK(lambda_phase(BasisPair({1}, {-1}), l1, one, 2.0) == 0.0);

    std::mt19937_64 rng(91);
    const auto l3 = QubitLayout::linear_array(3, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        const auto pair = random_pair(rng, 3);
        const BasisPair diag(std::vector<int>{1, -1, 1}, std::vector<int>{1, -1, 1});
        CHECK(lambda_phase(diag, l3, one, 1.0 + rep) == doctest::Approx(0.0).epsilon(1e-13));
        // Mirror pair +-k with equal |g| cancels the sine term.
        const DiscreteModeSet mirror{{Mode{0.9, 1.0, {0.8, 0.0}, 0.2},
                                      Mode{-0.9, 1.0, {0.8, 0.0}, 0.2}}};
        CHECK(lambda_phase(pair, l3, mirror, 1.0 + rep) ==
              doctest::Approx(0.0).epsilon(1e-13));
    }
}

TEST_CASE("fidelity basics") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t L = 1 + rng() % 4;
        const auto layout = QubitLayout::linear_array(L, 1.0);
        const auto pair = random_pair(rng, L);
        const auto modes = random_modes(rng, 2);
        CHECK(dynamical_fidelity(pair, layout, modes, 0.0, 0.5) == doctest::Approx(1.0));
        for (double t : {0.3, 1.0, 6.0}) {
            const double F = dynamical_fidelity(pair, layout, modes, t, 0.5);
            CHECK(F >= 0.0);
            CHECK(F <= 1.0);
        }
    }
}

TEST_CASE("GHZ-family pairs feel no net interaction phase") {
    std::mt19937_64 rng(111);
    for (std::size_t L : {2, 4, 6}) {
        const auto layout = QubitLayout::linear_array(L, 1.0);
        for (const auto& pair : {BasisPair::ghz(L), BasisPair::ghz_prime(L)}) {
            const auto modes = random_modes(rng, 4);
            for (double t : {0.5, 2.0, 9.0}) {
                const double theta = theta_phase(pair, layout, modes, t);
                const double lambda = lambda_phase(pair, layout, modes, t);
                CHECK(theta - lambda == doctest::Approx(0.0).epsilon(1e-10));
                // So the upper envelope is exactly 1/2 + 1/2 e^{-Gamma}.
                const double F = dynamical_fidelity(pair, layout, modes, t, 1.0);
                const double gamma = gamma_discrete(pair.difference(), layout, modes, t).total();
                CHECK(F == doctest::Approx(0.5 + 0.5 * std::exp(-gamma)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("small-coupling infidelity follows the susceptibility") {
    std::mt19937_64 rng(121);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t L = 1 + rng() % 3;
        const auto layout = QubitLayout::linear_array(L, 1.0);
        const auto pair = random_pair(rng, L);
        const auto modes = random_modes(rng, 2);
        const double chi = chi_discrete(pair, layout, modes);
        if (chi == 0.0) continue;
        const double t = 1e-2;
        const double eps = std::sqrt(1e-5 / (t * t * chi));
        const double F = dynamical_fidelity(pair, layout, modes, t, eps);
        CHECK(1.0 - F == doctest::Approx(eps * eps * t * t * chi).epsilon(0.05));
    }
}
