#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "teich/errors.hpp"
#include "teich/quadrature.hpp"
#include "teich/rng.hpp"

using namespace teich;

TEST_CASE("interval rule on elementary integrands") {
    auto one = [](double) { return 1.0; };
    CHECK(integrate_interval(one, 0.0, kPi, 1e-12).value == doctest::Approx(kPi).epsilon(1e-14));

    auto cos2 = [](double t) { return std::cos(t) * std::cos(t); };
    CHECK(integrate_interval(cos2, 0.0, 2.0 * kPi, 1e-12).value ==
          doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("polynomials up to degree 10 are reproduced to 1e-13") {
    // oracle: exact antiderivative sum over [-1, 2]
    for (int deg = 0; deg <= 10; ++deg) {
        auto f = [deg](double x) {
            double acc = 0.0;
            for (int k = 0; k <= deg; ++k) {
                acc += std::pow(x, k);
            }
            return acc;
        };
        double exact = 0.0;
        for (int k = 0; k <= deg; ++k) {
            exact += (std::pow(2.0, k + 1) - std::pow(-1.0, k + 1)) / (k + 1);
        }
        double got = integrate_interval(f, -1.0, 2.0, 1e-13).value;
        CHECK(std::abs(got - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("error estimate brackets the true error for smooth integrands") {
    auto f = [](double t) { return std::exp(-t) * std::sin(3.0 * t); };
    // oracle: closed-form antiderivative of e^{-t} sin(3t)
    auto F = [](double t) {
        return -std::exp(-t) * (std::sin(3.0 * t) + 3.0 * std::cos(3.0 * t)) / 10.0;
    };
    QuadResult r = integrate_interval(f, 0.0, 5.0, 1e-10);
    CHECK(std::abs(r.value - (F(5.0) - F(0.0))) <= std::max(1e-10, r.error_estimate));
    CHECK(r.panels >= 1);
}

TEST_CASE("real-line integral of the Cauchy density") {
    auto cauchy = [](double s) { return 1.0 / (kPi * (1.0 + s * s)); };
    CHECK(integrate_real_line(cauchy, 1e-12).value == doctest::Approx(1.0).epsilon(1e-12));

    // substitution oracle: the same integral assembled by hand
    double manual = integrate_interval(
                        [&](double psi) {
                            double s = std::tan(psi);
                            double c = std::cos(psi);
                            return cauchy(s) / (c * c);
                        },
                        -0.5 * kPi, 0.5 * kPi, 1e-12)
                        .value;
    CHECK(manual == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("invalid arguments and pathological integrands") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate_interval(one, 1.0, 0.0, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(integrate_interval(one, 0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(
        integrate_interval([](double x) { return std::sin(1.0 / x); }, 1e-300, 1.0, 1e-12),
        PanelLimitExceeded);
}

TEST_CASE("circle integral against the cone density") {
    HalfPlanePoint i(0.0, 1.0);
    CHECK(integrate_circle_pml([](double) { return 1.0; }, i, 1e-12).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_circle_pml([](double) { return 1.0; }, HalfPlanePoint(-1.3, 0.4), 1e-12)
              .value == doctest::Approx(1.0).epsilon(1e-12));

    // uniform density at i: an indicator of half the angles has mass 1/2
    auto half = [](double theta) { return theta < 0.5 * kPi ? 1.0 : 0.0; };
    CHECK(integrate_circle_pml(half, i, 1e-10).value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("quadrature is deterministic") {
    auto f = [](double t) { return std::sin(t * t) + 1.0 / (2.0 + std::cos(t)); };
    QuadResult a = integrate_interval(f, 0.0, 7.0, 1e-11);
    QuadResult b = integrate_interval(f, 0.0, 7.0, 1e-11);
    CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
    CHECK(a.panels == b.panels);
}

TEST_CASE("monte carlo: constants, analytic oracle, determinism") {
    HalfPlanePoint i(0.0, 1.0);
    McConfig cfg{12345, 10000, "splitmix64"};

    McResult c = mc_integrate([](double) { return 1.0; }, i, cfg);
    CHECK(c.estimate == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.stderr_estimate == 0.0);

    // analytic oracle: int cos^2(2 theta) dtheta/pi = 1/2 at the square torus
    auto f = [](double theta) { return std::cos(2.0 * theta) * std::cos(2.0 * theta); };
    McResult r = mc_integrate(f, i, cfg);
    CHECK(std::abs(r.estimate - 0.5) <= 4.0 * r.stderr_estimate);

    McResult r2 = mc_integrate(f, i, cfg);
    CHECK(std::memcmp(&r.estimate, &r2.estimate, sizeof(double)) == 0);
    CHECK(std::memcmp(&r.stderr_estimate, &r2.stderr_estimate, sizeof(double)) == 0);

    for (int workers : {2, 3, 4}) {
        McResult rw = mc_integrate(f, i, cfg, workers);
        CHECK(std::memcmp(&r.estimate, &rw.estimate, sizeof(double)) == 0);
        CHECK(std::memcmp(&r.stderr_estimate, &rw.stderr_estimate, sizeof(double)) == 0);
    }

    CHECK_THROWS_AS(mc_integrate(f, i, McConfig{1, 1, "splitmix64"}), std::invalid_argument);
    CHECK_THROWS_AS(mc_integrate(f, i, McConfig{1, 100, "mt19937"}), std::invalid_argument);
}

TEST_CASE("monte carlo indicator estimate matches quadrature within 4 sigma") {
    HalfPlanePoint x(1.0, 0.7);
    auto half = [](double theta) { return theta < 0.5 * kPi ? 1.0 : 0.0; };
    double quad = integrate_circle_pml(half, x, 1e-12).value;
    McResult r = mc_integrate(half, x, McConfig{777, 20000, "splitmix64"});
    CHECK(std::abs(r.estimate - quad) <= 4.0 * r.stderr_estimate);
}

TEST_CASE("splitmix64 reference stream") {
    // reference outputs of splitmix64 seeded with 0
    CHECK(splitmix64_at(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix64_at(0, 1) == 0x6E789E6AA1B965F4ULL);
    CHECK(splitmix64_at(0, 2) == 0x06C45D188009454FULL);
    // index-addressable: order of queries is irrelevant
    CHECK(splitmix64_at(42, 7) == splitmix64_at(42, 7));
    double u = uniform01_at(9, 9);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
