#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "dephasing/decoherence.hpp"
#include "dephasing/gaussian.hpp"

using namespace dephasing;
namespace num = std::numbers;

namespace {

DiscreteModeSet random_modes(std::mt19937_64& rng, std::size_t n, bool thermal) {
    std::uniform_real_distribution<double> u(0.1, 5.0);
    std::uniform_real_distribution<double> g(-1.0, 1.0);
    DiscreteModeSet modes;
    for (std::size_t i = 0; i < n; ++i) {
        modes.modes.push_back(Mode{u(rng), u(rng), {g(rng), g(rng)}, thermal ? u(rng) : 0.0});
    }
    return modes;
}

}  // namespace

TEST_CASE("lambda vector entries") {
    const auto layout = QubitLayout::linear_array(1, 1.0);
    const DifferenceVector d({1});
    const DiscreteModeSet one{{Mode{0.0, 1.0, {1.0, 0.0}, 0.0}}};

    const auto z = lambda_vector(d, layout, one, 0.0);
    CHECK(std::abs(z[0]) == doctest::Approx(0.0));

    const auto l = lambda_vector(d, layout, one, num::pi);
    CHECK(l[0].real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(l[0].imag() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("lambda modulus identity |lambda|^2 = |g|^2 gamma 2 tau") {
    std::mt19937_64 rng(21);
    const std::size_t L = 3;
    const auto layout = QubitLayout::linear_array(L, 1.0);
    const DifferenceVector d({1, 0, -1});
    for (int rep = 0; rep < 100; ++rep) {
        const auto modes = random_modes(rng, 1, false);
        const double t = 0.1 + 0.05 * rep;
        const auto l = lambda_vector(d, layout, modes, t);
        const auto& m = modes.modes[0];
        const double expected =
            std::norm(m.g) * gamma_direct_1d(d, layout, m.k) * 2.0 * tau(t, m.omega);
        CHECK(std::norm(l[0]) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("thermal covariance blocks") {
    CHECK(covariance_thermal(0.0)(0, 0) == doctest::Approx(0.5));
    CHECK(covariance_thermal(1.0)(1, 1) == doctest::Approx(1.5));
    const double nbar = 1.0 / (num::e - 1.0);
    CHECK(covariance_thermal(nbar)(0, 0) == doctest::Approx(nbar + 0.5).epsilon(1e-12));
    CHECK(covariance_thermal(2.0)(0, 1) == 0.0);
    CHECK_THROWS_AS(covariance_thermal(-0.1), std::invalid_argument);
}

TEST_CASE("squeezed thermal covariance") {
    const auto plain = covariance_squeezed_thermal(0.7, 0.0, 0.0);
    CHECK(plain.isApprox(covariance_thermal(0.7), 1e-14));

    const auto s = covariance_squeezed_thermal(0.0, 1.0, 0.0);
    CHECK(s(0, 0) == doctest::Approx(0.5 * std::exp(2.0)).epsilon(1e-12));
    CHECK(s(1, 1) == doctest::Approx(0.5 * std::exp(-2.0)).epsilon(1e-12));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int rep = 0; rep < 100; ++rep) {
        const double nbar = u(rng), r = u(rng) - 1.0, phi = 3.0 * u(rng);
        const auto sigma = covariance_squeezed_thermal(nbar, r, phi);
        CHECK(sigma(0, 1) == doctest::Approx(sigma(1, 0)).epsilon(1e-12));
        CHECK(sigma.determinant() ==
              doctest::Approx((nbar + 0.5) * (nbar + 0.5)).epsilon(1e-12));
    }
}

TEST_CASE("displacement never enters the covariance") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int rep = 0; rep < 100; ++rep) {
        SingleModeGaussianState a{std::abs(u(rng)), u(rng), u(rng), {u(rng), u(rng)}};
        SingleModeGaussianState b = a;
        b.displacement = {u(rng), u(rng)};
        CHECK(displacement_irrelevance_check(a));
        CHECK(a.covariance().isApprox(b.covariance(), 0.0));
    }
}

TEST_CASE("covariance path reproduces the thermal-sum decoherence") {
    std::mt19937_64 rng(51);
    const std::size_t L = 4;
    const auto layout = QubitLayout::linear_array(L, 1.0);
    const auto d = ghz_prime_difference(L);
    for (int rep = 0; rep < 100; ++rep) {
        const auto modes = random_modes(rng, 1 + rep % 5, true);
        const double t = 0.2 + 0.07 * rep;
        const auto lambda = lambda_vector(d, layout, modes, t);
        std::vector<Eigen::Matrix2d> blocks;
        for (const auto& m : modes.modes) blocks.push_back(covariance_thermal(m.n_bar));
        const double from_cov = gamma_from_covariance(lambda, blocks);
        const double from_sum = gamma_discrete(d, layout, modes, t).total();
        CHECK(from_cov == doctest::Approx(from_sum).epsilon(1e-12));
    }
}

TEST_CASE("full-matrix covariance path") {
    const auto layout = QubitLayout::linear_array(2, 1.0);
    const DifferenceVector d({1, -1});
    const DiscreteModeSet modes{{Mode{1.0, 2.0, {0.5, 0.2}, 0.3},
                                 Mode{2.5, 1.0, {-0.3, 0.8}, 1.2}}};
    const auto lambda = lambda_vector(d, layout, modes, 1.7);

    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(4, 4);
    std::vector<Eigen::Matrix2d> blocks;
    for (std::size_t i = 0; i < 2; ++i) {
        blocks.push_back(covariance_thermal(modes.modes[i].n_bar));
        sigma.block<2, 2>(2 * i, 2 * i) = blocks.back();
    }
    CHECK(gamma_from_covariance(lambda, sigma) ==
          doctest::Approx(gamma_from_covariance(lambda, blocks)).epsilon(1e-13));
    CHECK(is_physical_covariance(sigma));

    Eigen::MatrixXd asym = sigma;
    asym(0, 1) = 0.3;  // not mirrored
    CHECK_THROWS_AS(gamma_from_covariance(lambda, asym), std::invalid_argument);

    Eigen::MatrixXd tiny = 0.1 * Eigen::MatrixXd::Identity(4, 4);
    CHECK_FALSE(is_physical_covariance(tiny));

    CHECK_THROWS_AS(gamma_from_covariance(lambda, Eigen::MatrixXd::Identity(2, 2)),
                    dimension_mismatch);
}

TEST_CASE("quadratic form is nonnegative for physical covariances") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    const auto layout = QubitLayout::linear_array(2, 1.0);
    const DifferenceVector d({1, 1});
    for (int rep = 0; rep < 100; ++rep) {
        const auto modes = random_modes(rng, 3, true);
        const auto lambda = lambda_vector(d, layout, modes, u(rng));
        std::vector<Eigen::Matrix2d> blocks;
        for (const auto& m : modes.modes) {
            blocks.push_back(covariance_squeezed_thermal(m.n_bar, u(rng) - 1.0, u(rng)));
        }
        CHECK(gamma_from_covariance(lambda, blocks) >= 0.0);
    }
}
