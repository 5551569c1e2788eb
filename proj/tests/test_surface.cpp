#include <cmath>
#include <complex>

#include "doctest.h"
#include "teich/rng.hpp"
#include "teich/surface.hpp"

using namespace teich;

namespace {

// Kerckhoff oracle for the distance: (1/2) log sup over directions of the
// extremal-length ratio, located by a dense scan plus golden-section
// refinement. Independent of the hyperbolic-distance route.
double kerckhoff_distance(const HalfPlanePoint& x, const HalfPlanePoint& y) {
    auto ratio = [&](double theta) {
        Lamination u(std::cos(theta), std::sin(theta));
        return extremal_length(y, u) / extremal_length(x, u);
    };
    int best = 0;
    const int n = 4096;
    double best_val = -1.0;
    for (int k = 0; k < n; ++k) {
        double v = ratio(kPi * k / n);
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }
    double lo = kPi * (best - 1) / n;
    double hi = kPi * (best + 1) / n;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    for (int it = 0; it < 200; ++it) {
        if (ratio(c) < ratio(d)) {
            lo = c;
        } else {
            hi = d;
        }
        c = hi - gr * (hi - lo);
        d = lo + gr * (hi - lo);
    }
    return 0.5 * std::log(ratio(0.5 * (lo + hi)));
}

HalfPlanePoint rand_point(SplitMix64& rng) {
    return HalfPlanePoint(rng.next_in(-2.0, 2.0),
                          std::exp(rng.next_in(std::log(0.25), std::log(4.0))));
}

Lamination rand_lam(SplitMix64& rng) {
    double th = rng.next_in(0.0, kPi);
    double s = rng.next_in(0.5, 2.0);
    return Lamination(s * std::cos(th), s * std::sin(th));
}

}  // namespace

TEST_CASE("construction rejects degenerate inputs") {
    CHECK_THROWS_AS(HalfPlanePoint(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(HalfPlanePoint(1.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(HalfPlanePoint(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Lamination(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(QuadDifferential(HalfPlanePoint(0.0, 1.0), Complex(0.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("intersection numbers of weighted curves") {
    CHECK(intersection_number(Lamination(1, 0), Lamination(0, 1)) == 1.0);
    CHECK(intersection_number(Lamination(2, 0), Lamination(0, 3)) == 6.0);
    CHECK(intersection_number(Lamination(1, 2), Lamination(1, 2)) == 0.0);

    SplitMix64 rng(1);
    for (int i = 0; i < 100; ++i) {
        Lamination l1 = rand_lam(rng);
        Lamination l2 = rand_lam(rng);
        double t = rng.next_in(0.1, 5.0);
        double s = rng.next_in(0.1, 5.0);
        CHECK(intersection_number(l1, l2) == doctest::Approx(intersection_number(l2, l1)));
        CHECK(intersection_number(Lamination(t * l1.p, t * l1.q),
                                  Lamination(s * l2.p, s * l2.q)) ==
              doctest::Approx(t * s * intersection_number(l1, l2)));
        // vanishes iff projectively equal
        CHECK(intersection_number(l1, Lamination(3.0 * l1.p, 3.0 * l1.q)) ==
              doctest::Approx(0.0));
        if (std::abs(ProjectiveLamination::of(l1).theta - ProjectiveLamination::of(l2).theta) >
            1e-3) {
            CHECK(intersection_number(l1, l2) > 0.0);
        }
    }
}

TEST_CASE("extremal length closed form and homogeneity") {
    CHECK(extremal_length(HalfPlanePoint(0, 1), Lamination(1, 0)) == doctest::Approx(1.0));
    CHECK(extremal_length(HalfPlanePoint(0, 2), Lamination(0, 1)) == doctest::Approx(2.0));
    CHECK(extremal_length(HalfPlanePoint(1, 1), Lamination(1, -1)) == doctest::Approx(1.0));

    SplitMix64 rng(2);
    for (int i = 0; i < 100; ++i) {
        HalfPlanePoint x = rand_point(rng);
        Lamination lam = rand_lam(rng);
        double t = rng.next_in(0.1, 4.0);
        CHECK(extremal_length(x, lam) > 0.0);
        CHECK(extremal_length(x, Lamination(t * lam.p, t * lam.q)) ==
              doctest::Approx(t * t * extremal_length(x, lam)).epsilon(1e-12));
    }
}

TEST_CASE("Hubbard-Masur differential: pinned value, scaling, norm") {
    HalfPlanePoint i(0.0, 1.0);
    QuadDifferential q = hm_differential(i, Lamination(0, 1));
    CHECK(q.w.real() == doctest::Approx(1.0));
    CHECK(q.w.imag() == doctest::Approx(0.0));
    CHECK(q.norm() == doctest::Approx(1.0));

    SplitMix64 rng(3);
    for (int k = 0; k < 100; ++k) {
        HalfPlanePoint x = rand_point(rng);
        Lamination lam = rand_lam(rng);
        double t = rng.next_in(0.2, 3.0);
        QuadDifferential qa = hm_differential(x, lam);
        QuadDifferential qb = hm_differential(x, Lamination(t * lam.p, t * lam.q));
        CHECK(std::abs(qb.w - t * t * qa.w) <= 1e-12 * std::abs(qa.w) * t * t);
        CHECK(qa.norm() == doctest::Approx(extremal_length(x, lam)).epsilon(1e-12));
    }
}

TEST_CASE("transverse-measure matching certifies the differential") {
    // oracle: |Re(sigma (p' + q' tau))| must reproduce the intersection
    // numbers of the vertical lamination with test curves
    SplitMix64 rng(4);
    const Lamination curves[5] = {{1, 0}, {0, 1}, {1, 1}, {2, -3}, {5, 4}};
    for (int k = 0; k < 50; ++k) {
        HalfPlanePoint x = rand_point(rng);
        Lamination lam = rand_lam(rng);
        Complex sigma = hm_sigma(x, lam);
        for (const Lamination& c : curves) {
            double period = std::abs((sigma * (Complex(c.p, 0.0) + c.q * x.tau())).real());
            CHECK(period == doctest::Approx(intersection_number(lam, c)).epsilon(1e-11));
        }
    }
}

TEST_CASE("vertical and horizontal laminations invert the differential") {
    HalfPlanePoint i(0.0, 1.0);
    Lamination v = vertical_lamination(QuadDifferential(i, Complex(1.0, 0.0)));
    CHECK(v.p == doctest::Approx(0.0));
    CHECK(v.q == doctest::Approx(1.0));

    SplitMix64 rng(5);
    for (int k = 0; k < 100; ++k) {
        HalfPlanePoint x = rand_point(rng);
        Lamination lam = rand_lam(rng);
        Lamination back = vertical_lamination(hm_differential(x, lam));
        // projective class and total measure both survive the round trip
        double sign = (back.p * lam.p + back.q * lam.q) < 0.0 ? -1.0 : 1.0;
        CHECK(sign * back.p == doctest::Approx(lam.p).epsilon(1e-10));
        CHECK(sign * back.q == doctest::Approx(lam.q).epsilon(1e-10));

        // h(q) = v(-q) pairs with the vertical lamination nontrivially
        QuadDifferential q = hm_differential(x, lam);
        Lamination hor = horizontal_lamination(q);
        CHECK(intersection_number(lam, hor) > 0.0);
    }
}

TEST_CASE("Teichmuller distance: pinned values, symmetry, triangle, oracle") {
    HalfPlanePoint i(0.0, 1.0);
    CHECK(teich_distance(i, i) == 0.0);
    CHECK(teich_distance(i, HalfPlanePoint(0.0, std::exp(2.0))) ==
          doctest::Approx(1.0).epsilon(1e-14));

    SplitMix64 rng(6);
    for (int k = 0; k < 100; ++k) {
        HalfPlanePoint x = rand_point(rng);
        HalfPlanePoint y = rand_point(rng);
        HalfPlanePoint z = rand_point(rng);
        CHECK(teich_distance(x, y) == doctest::Approx(teich_distance(y, x)).epsilon(1e-14));
        CHECK(teich_distance(x, z) <= teich_distance(x, y) + teich_distance(y, z) + 1e-12);
    }
    for (int k = 0; k < 20; ++k) {
        HalfPlanePoint x = rand_point(rng);
        HalfPlanePoint y = rand_point(rng);
        CHECK(kerckhoff_distance(x, y) ==
              doctest::Approx(teich_distance(x, y)).epsilon(1e-9));
    }
}

TEST_CASE("geodesic rays: pinned orbits and the ray laws") {
    HalfPlanePoint i(0.0, 1.0);
    GeodesicRay up = geodesic_ray(i, Lamination(1, 0));
    CHECK(std::isinf(up.endpoint()));
    for (double t : {0.0, 0.7, 2.0}) {
        HalfPlanePoint y = up.evaluate(t);
        CHECK(y.a == doctest::Approx(0.0));
        CHECK(y.b == doctest::Approx(std::exp(2.0 * t)).epsilon(1e-13));
    }
    GeodesicRay down = geodesic_ray(i, Lamination(0, 1));
    CHECK(down.endpoint() == 0.0);
    CHECK(down.evaluate(1.0).b == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));

    HalfPlanePoint at0 = down.evaluate(0.0);
    CHECK(at0.a == 0.0);
    CHECK(at0.b == 1.0);

    SplitMix64 rng(7);
    for (int k = 0; k < 50; ++k) {
        HalfPlanePoint x = rand_point(rng);
        Lamination lam = rand_lam(rng);
        GeodesicRay ray(x, lam);
        double e0 = extremal_length(x, lam);
        for (double t : {0.25, 1.0, 4.0, 10.0}) {
            HalfPlanePoint y = ray.evaluate(t);
            CHECK(std::abs(extremal_length(y, lam) * std::exp(2.0 * t) / e0 - 1.0) <= 1e-9);
            CHECK(std::abs(teich_distance(x, y) - t) <= 1e-9);
        }
        // the ray converges to its endpoint when the slope is finite
        if (std::abs(lam.q) > 0.2) {
            HalfPlanePoint far = ray.evaluate(12.0);
            CHECK(std::abs(far.a - ray.endpoint()) <= 1e-6);
            CHECK(far.b <= 1e-6);
        }
    }
}

TEST_CASE("ray endpoints") {
    CHECK(std::isinf(ray_endpoint(Lamination(1, 0))));
    CHECK(ray_endpoint(Lamination(0, 1)) == 0.0);
    CHECK(ray_endpoint(Lamination(1, 1)) == doctest::Approx(-1.0));
    // slope/angle maps are mutually inverse
    for (double s : {-3.0, -0.5, 0.0, 0.7, 42.0}) {
        CHECK(endpoint_slope(slope_angle(s)) == doctest::Approx(s).epsilon(1e-12));
    }
    CHECK(slope_angle(ray_endpoint(Lamination(1, 0))) == 0.0);
}

TEST_CASE("Teichmuller disk: center, rays, isometry") {
    HalfPlanePoint i(0.0, 1.0);
    QuadDifferential q(i, Complex(1.0, 0.0));
    TeichmullerDisk disk(q);

    HalfPlanePoint center = disk(Complex(0.0, 0.0));
    CHECK(center.a == 0.0);
    CHECK(center.b == 1.0);

    // theta = 0 is the vertical direction (0, 1): the disk ray descends
    for (double t : {0.3, 1.0, 2.5}) {
        HalfPlanePoint y = disk(Complex(std::tanh(t), 0.0));
        CHECK(y.a == doctest::Approx(0.0));
        CHECK(y.b == doctest::Approx(std::exp(-2.0 * t)).epsilon(1e-12));
    }

    CHECK_THROWS_AS(disk(Complex(1.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(disk(Complex(0.8, 0.7)), std::invalid_argument);

    SplitMix64 rng(8);
    for (int k = 0; k < 50; ++k) {
        HalfPlanePoint x = rand_point(rng);
        QuadDifferential qq = hm_differential(x, rand_lam(rng));
        TeichmullerDisk d(qq);
        Complex z1 = std::polar(rng.next_in(0.0, 0.9), rng.next_in(0.0, 2.0 * kPi));
        Complex z2 = std::polar(rng.next_in(0.0, 0.9), rng.next_in(0.0, 2.0 * kPi));
        CHECK(poincare_distance(z1, z2) ==
              doctest::Approx(teich_distance(d(z1), d(z2))).epsilon(1e-10));
    }
}

TEST_CASE("disk covers the whole space: explicit inverse") {
    // Phi is Mobius in z, so z = sigma (tau' - tau) / (conj(sigma tau) - tau' conj(sigma))
    SplitMix64 rng(12);
    for (int k = 0; k < 30; ++k) {
        HalfPlanePoint x = rand_point(rng);
        QuadDifferential q = hm_differential(x, rand_lam(rng));
        TeichmullerDisk disk(q);
        HalfPlanePoint target = rand_point(rng);
        Complex sigma = hm_sigma(x, vertical_lamination(q));
        Complex st = sigma * x.tau();
        Complex z = sigma * (target.tau() - x.tau()) /
                    (std::conj(st) - target.tau() * std::conj(sigma));
        CHECK(std::abs(z) < 1.0);
        HalfPlanePoint back = disk(z);
        CHECK(teich_distance(back, target) <= 1e-10);
    }
}

TEST_CASE("disk/ray compatibility across the angle sweep") {
    SplitMix64 rng(9);
    for (int k = 0; k < 10; ++k) {
        HalfPlanePoint x = rand_point(rng);
        QuadDifferential q = hm_differential(x, rand_lam(rng));
        TeichmullerDisk disk(q);
        for (int j = 0; j < 16; ++j) {
            double theta = 2.0 * kPi * j / 16.0;
            GeodesicRay ray(x, lamination_of_angle(q, theta).direction());
            for (double t : {0.1, 1.0, 3.0}) {
                HalfPlanePoint via_disk = disk(std::polar(std::tanh(t), theta));
                HalfPlanePoint via_ray = ray.evaluate(t);
                CHECK(teich_distance(via_disk, via_ray) <= 1e-9);
            }
        }
    }
}

TEST_CASE("lamination_of_angle: pinned directions and periodicity") {
    HalfPlanePoint i(0.0, 1.0);
    QuadDifferential q(i, Complex(1.0, 0.0));

    CHECK(lamination_of_angle(q, 0.0).theta == doctest::Approx(0.5 * kPi));
    CHECK(lamination_of_angle(q, kPi).theta == doctest::Approx(0.0).epsilon(1e-12));

    // closed form at the square torus: direction of (-sin(t/2), cos(t/2))
    for (double theta : {0.3, 1.1, 2.9, 4.2, 5.9}) {
        double expected = std::atan2(std::cos(0.5 * theta), -std::sin(0.5 * theta));
        expected = std::fmod(expected + 2.0 * kPi, kPi);
        double got = lamination_of_angle(q, theta).theta;
        CHECK(std::abs(got - expected) <= 1e-12);
    }

    SplitMix64 rng(10);
    for (int k = 0; k < 20; ++k) {
        HalfPlanePoint x = rand_point(rng);
        QuadDifferential qq = hm_differential(x, rand_lam(rng));
        double theta = rng.next_in(0.0, 2.0 * kPi);
        CHECK(lamination_of_angle(qq, theta).theta ==
              doctest::Approx(lamination_of_angle(qq, theta + 2.0 * kPi).theta).epsilon(1e-12));

        // period matching: the class of v(e^{-i theta} q) reproduces the
        // transverse measures |Re(sigma_theta (p' + q' tau))| up to scale
        Lamination lam = vertical_lamination(QuadDifferential(x, std::polar(1.0, -theta) * qq.w));
        Complex sigma_theta = std::sqrt(std::polar(1.0, -theta) * qq.w);
        for (const Lamination& c : {Lamination(1, 0), Lamination(0, 1), Lamination(1, 1)}) {
            double period =
                std::abs((sigma_theta * (Complex(c.p, 0.0) + c.q * x.tau())).real());
            CHECK(intersection_number(lam, c) == doctest::Approx(period).epsilon(1e-10));
        }
    }
}

TEST_CASE("angle advance matches the circle action") {
    // advancing the disk angle equals acting on the rotated differential
    SplitMix64 rng(11);
    for (int k = 0; k < 20; ++k) {
        HalfPlanePoint x = rand_point(rng);
        QuadDifferential q = hm_differential(x, rand_lam(rng));
        double theta = rng.next_in(0.0, 2.0 * kPi);
        double alpha = rng.next_in(0.0, 2.0 * kPi);
        double lhs = lamination_of_angle(q, theta + alpha).theta;
        QuadDifferential q_rot(x, std::polar(1.0, -theta) * q.w);
        double rhs = lamination_of_angle(q_rot, alpha).theta;
        CHECK(std::abs(lhs - rhs) <= 1e-11);
    }
}

TEST_CASE("projective representatives") {
    CHECK(ProjectiveLamination::of(Lamination(1, 0)).theta == doctest::Approx(0.0));
    CHECK(ProjectiveLamination::of(Lamination(0, -2)).theta == doctest::Approx(0.5 * kPi));
    CHECK(ProjectiveLamination::of(Lamination(-1, -1)).theta == doctest::Approx(0.25 * kPi));
    CHECK(ProjectiveLamination::from_angle(kPi + 0.25).theta == doctest::Approx(0.25));
    CHECK(ProjectiveLamination::of_rational(Lamination(1, 0)).rational);
    CHECK(!ProjectiveLamination::of(Lamination(1, 0)).rational);
    Lamination dir = ProjectiveLamination::from_angle(1.234).direction();
    CHECK(dir.p == doctest::Approx(std::cos(1.234)));
    CHECK(dir.q == doctest::Approx(std::sin(1.234)));
}
