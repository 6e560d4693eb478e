#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dephasing/decoherence.hpp"

using namespace dephasing;
namespace num = std::numbers;

TEST_CASE("tau kernel") {
    CHECK(tau(3.0, 0.0) == doctest::Approx(4.5).epsilon(1e-15));
    CHECK(tau(2 * num::pi / 5.0, 5.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(tau(1.0, num::pi) == doctest::Approx(2.0 / (num::pi * num::pi)).epsilon(1e-14));
    CHECK(tau(0.0, 7.0) == 0.0);
    // 0 <= tau <= min(t^2/2, 2/w^2)
    for (double t : {0.1, 1.0, 10.0}) {
        for (double w : {0.01, 1.0, 30.0}) {
            const double v = tau(t, w);
            CHECK(v >= 0.0);
            CHECK(v <= std::min(t * t / 2, 2 / (w * w)) * (1 + 1e-12));
        }
    }
}

TEST_CASE("discrete-sum decoherence") {
    const auto layout = QubitLayout::linear_array(1, 1.0);
    const DifferenceVector d({1});
    const DiscreteModeSet one{{Mode{0.3, 1.0, {1.0, 0.0}, 0.0}}};
    for (double t : {0.0, 0.5, 2.0, 7.0}) {
        const auto g = gamma_discrete(d, layout, one, t);
        CHECK(g.total() == doctest::Approx(1.0 - std::cos(t)).epsilon(1e-13));
        CHECK(g.ex == 0.0);
    }

    // Excited mode splits off 2 Nbar times the vacuum weight.
    const DiscreteModeSet hot{{Mode{0.3, 1.0, {1.0, 0.0}, 1.5}}};
    const auto g = gamma_discrete(d, layout, hot, 2.0);
    CHECK(g.ex == doctest::Approx(3.0 * g.vac).epsilon(1e-13));
}

TEST_CASE("staggered register on the resonant mode scales exactly as L^2") {
    for (std::size_t L : {2, 4, 8, 16, 32}) {
        const DiscreteModeSet res{{Mode{num::pi, num::pi, {1.0, 0.0}, 0.0}}};
        const auto gL = gamma_discrete(ghz_prime_difference(L), QubitLayout::linear_array(L, 1.0),
                                       res, 1.0);
        const auto g2L = gamma_discrete(ghz_prime_difference(2 * L),
                                        QubitLayout::linear_array(2 * L, 1.0), res, 1.0);
        CHECK(g2L.total() / gL.total() == doctest::Approx(4.0).epsilon(1e-12));
    }
}

TEST_CASE("closed form matches quadrature on a spot grid") {
    for (double dim : {0.5, 2.0}) {
        for (std::size_t L : {1, 4}) {
            for (double t : {1.0, 20.0}) {
                const auto d = uniform_difference(L);
                const auto ctx = ClosedFormContext::for_vector(d, 1.0, dim, 1.0, 20.0);
                const double closed = vacuum_closed_form(ctx, t);
                const auto layout = QubitLayout::linear_array(L, 1.0);
                const double quad =
                    gamma_continuum(d, layout, OhmicFamily{1.0, dim, 20.0}, Vacuum{}, t).vac;
                CHECK(closed == doctest::Approx(quad).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("decoherence function is zero at t=0 and nonnegative") {
    const auto d = ghz_prime_difference(4);
    const auto layout = QubitLayout::linear_array(4, 1.0);
    const SpectralDensity J = OhmicFamily{1.0, 1.0, 20.0};
    CHECK(gamma_continuum(d, layout, J, Vacuum{}, 0.0).total() == 0.0);
    for (double t : {0.01, 0.5, 3.0, 25.0}) {
        const auto g = gamma_continuum(d, layout, J, BoseEinstein{0.5}, t);
        CHECK(g.vac >= 0.0);
        CHECK(g.ex >= 0.0);
    }
}

TEST_CASE("excitation part is linear in the occupation") {
    const auto d = ghz_prime_difference(2);
    const auto layout = QubitLayout::linear_array(2, 1.0);
    const SpectralDensity J = OhmicFamily{1.0, 1.0, 20.0};
    const double t = 3.0;
    const auto base = gamma_continuum(d, layout, J, GaussianPeak{2.0, 0.3, 1.0}, t);
    const auto scaled = gamma_continuum(d, layout, J, GaussianPeak{2.0, 0.3, 3.5}, t);
    CHECK(scaled.ex == doctest::Approx(3.5 * base.ex).epsilon(1e-10));
    CHECK(scaled.vac == doctest::Approx(base.vac).epsilon(1e-12));
}

TEST_CASE("quadrature rejects spectra without a cutoff") {
    const auto d = DifferenceVector({1});
    const auto layout = QubitLayout::linear_array(1, 1.0);
    const SpectralDensity bad = TabulatedDensity{{0.0, 1.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(gamma_continuum(d, layout, bad, Vacuum{}, 1.0), cutoff_violation);
}

TEST_CASE("small-time limit") {
    ClosedFormContext ctx{1.0, 1.0, 20.0, 1.0, {1.0}};
    const auto est = small_time_vacuum(ctx, 1.0, 1e-3);
    CHECK(est.value == doctest::Approx(2e-4).epsilon(1e-12));
    const double quad = gamma_continuum(DifferenceVector({1}), QubitLayout::linear_array(1, 1.0),
                                        OhmicFamily{1.0, 1.0, 20.0}, Vacuum{}, 1e-3)
                            .vac;
    CHECK(est.value == doctest::Approx(quad).epsilon(1e-3));
    CHECK(small_time_vacuum(ctx, 1.0, 0.0).value == 0.0);

    // dim=2: value = alpha ||d||^2 wc (t wc)^2 since Gamma~(3) = 2.
    ClosedFormContext ctx2{2.0, 1.0, 20.0, 1.0, {1.0}};
    const double t2 = 0.01 / 20.0;  // t wc = 0.01
    const auto est2 = small_time_vacuum(ctx2, 1.0, t2);
    CHECK(est2.value == doctest::Approx(20.0 * 1e-4).epsilon(1e-12));
    CHECK(est2.value == doctest::Approx(vacuum_closed_form(ctx2, t2)).epsilon(1e-3));
}

TEST_CASE("plateau height") {
    ClosedFormContext ctx{2.0, 1.5, 20.0, 1.0, {3.0}};
    const auto est = plateau_height(ctx, 3.0);
    CHECK(est.value == doctest::Approx(1.5 * 3.0 * 20.0).epsilon(1e-12));
    CHECK(est.relative_error_bound == doctest::Approx(2.0 / 400.0).epsilon(1e-12));
    CHECK(plateau_height(ctx, 0.0).value == 0.0);
    ClosedFormContext low{1.5, 1.0, 20.0, 1.0, {1.0}};
    CHECK_THROWS_AS(plateau_height(low, 1.0), std::invalid_argument);
}

TEST_CASE("infinite-time slope by series order") {
    const auto l1 = QubitLayout::linear_array(1, 1.0);
    const DifferenceVector d1({1});
    // Vacuum ohmic: J(0) = 0 and gamma(0) finite, so the slope vanishes.
    CHECK(infinite_time_slope(d1, l1, OhmicFamily{1.0, 1.0, 20.0}, Vacuum{}) == 0.0);
    // Thermal ohmic single qubit: J * 2 Nbar -> 2 alpha T, slope = pi alpha T.
    const double alpha = 0.7, T = 1.3;
    CHECK(infinite_time_slope(d1, l1, OhmicFamily{alpha, 1.0, 20.0}, BoseEinstein{T}) ==
          doctest::Approx(num::pi * alpha * T).epsilon(1e-12));
    // Staggered register: gamma vanishes to second order at the origin, so any
    // thermal ohmic-family reservoir gives a quasi-plateau.
    for (double dim : {0.5, 1.0, 2.0}) {
        for (std::size_t L : {2, 6}) {
            CHECK(infinite_time_slope(ghz_prime_difference(L), QubitLayout::linear_array(L, 1.0),
                                      OhmicFamily{1.0, dim, 20.0}, BoseEinstein{1.0}) == 0.0);
        }
    }
}

TEST_CASE("subohmic sweep handles the trivial input") {
    CHECK(subohmic_excitation_sweep({}, 1.0, 1.0, 0.5, 20.0, 1.0, 5.0, StateFamily::GHZ).empty());
    CHECK_THROWS_AS(subohmic_excitation_sweep({2}, 1.0, 1.0, 1.5, 20.0, 1.0, 5.0,
                                              StateFamily::GHZ),
                    std::invalid_argument);
}

TEST_CASE("dephasing time brackets Gamma = 1") {
    const ClosedFormContext ctx{1.0, 1.0, 20.0, 1.0, {1.0}};
    auto gamma_of_t = [&](double t) { return vacuum_closed_form(ctx, t); };
    const auto t2 = dephasing_time(gamma_of_t, 10.0);
    REQUIRE(t2.has_value());
    CHECK(gamma_of_t(*t2) == doctest::Approx(1.0).epsilon(1e-3));
    // A reservoir too weak to reach Gamma = 1 reports no dephasing time.
    const ClosedFormContext weak{1.0, 1e-6, 20.0, 1.0, {1.0}};
    CHECK_FALSE(dephasing_time([&](double t) { return vacuum_closed_form(weak, t); }, 10.0)
                    .has_value());
}
