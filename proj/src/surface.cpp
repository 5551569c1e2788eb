#include "teich/surface.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace teich {

namespace {

bool finite(double x) { return std::isfinite(x); }

// Canonical sign: q-component positive, or p positive on the q == 0 axis.
Lamination canonical_sign(double p, double q) {
    if (q < 0.0 || (q == 0.0 && p < 0.0)) {
        return Lamination(-p, -q);
    }
    return Lamination(p, q);
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double a_, double b_) : a(a_), b(b_) {
    if (!finite(a) || !finite(b) || b <= 0.0) {
        throw std::invalid_argument("HalfPlanePoint: requires finite tau with Im tau > 0");
    }
}

Lamination::Lamination(double p_, double q_) : p(p_), q(q_) {
    if (!finite(p) || !finite(q) || (p == 0.0 && q == 0.0)) {
        throw std::invalid_argument("Lamination: weight pair must be finite and nonzero");
    }
}

ProjectiveLamination ProjectiveLamination::from_angle(double theta, bool rational) {
    if (!finite(theta)) {
        throw std::invalid_argument("ProjectiveLamination: angle must be finite");
    }
    double t = std::fmod(theta, kPi);
    if (t < 0.0) t += kPi;
    if (t >= kPi) t = 0.0;  // fmod rounding at the seam
    return ProjectiveLamination{t, rational};
}

ProjectiveLamination ProjectiveLamination::of(const Lamination& lam) {
    return from_angle(std::atan2(lam.q, lam.p));
}

ProjectiveLamination ProjectiveLamination::of_rational(const Lamination& lam) {
    return from_angle(std::atan2(lam.q, lam.p), true);
}

Lamination ProjectiveLamination::direction() const {
    return Lamination(std::cos(theta), std::sin(theta));
}

QuadDifferential::QuadDifferential(HalfPlanePoint base_, Complex w_) : base(base_), w(w_) {
    if (!finite(w.real()) || !finite(w.imag()) || (w.real() == 0.0 && w.imag() == 0.0)) {
        throw std::invalid_argument("QuadDifferential: coefficient must be finite and nonzero");
    }
}

double intersection_number(const Lamination& lam1, const Lamination& lam2) {
    return std::abs(lam1.p * lam2.q - lam2.p * lam1.q);
}

double extremal_length(const HalfPlanePoint& x, const Lamination& lam) {
    double u = lam.p + lam.q * x.a;
    double v = lam.q * x.b;
    return (u * u + v * v) / x.b;
}

Complex hm_sigma(const HalfPlanePoint& x, const Lamination& lam) {
    return Complex(lam.q, (lam.p + lam.q * x.a) / x.b);
}

QuadDifferential hm_differential(const HalfPlanePoint& x, const Lamination& lam) {
    Complex sigma = hm_sigma(x, lam);
    return QuadDifferential(x, sigma * sigma);
}

Lamination vertical_lamination(const QuadDifferential& q) {
    Complex sigma = std::sqrt(q.w);
    Complex tau = q.base.tau();
    double p = (sigma * tau).real();
    return canonical_sign(p, -sigma.real());
}

Lamination horizontal_lamination(const QuadDifferential& q) {
    return vertical_lamination(QuadDifferential(q.base, -q.w));
}

double teich_distance(const HalfPlanePoint& x, const HalfPlanePoint& y) {
    double arg = std::abs(x.tau() - y.tau()) / (2.0 * std::sqrt(x.b * y.b));
    return std::asinh(arg);
}

double ray_endpoint(const Lamination& lam) {
    if (lam.q == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return -lam.p / lam.q;
}

double endpoint_slope(double theta) {
    double s = std::sin(theta);
    if (s == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return -std::cos(theta) / s;
}

double slope_angle(double s) {
    if (std::isinf(s)) {
        return 0.0;
    }
    return std::atan2(1.0, -s);
}

GeodesicRay::GeodesicRay(const HalfPlanePoint& origin, const Lamination& lamination)
    : origin_(origin),
      lamination_(lamination),
      endpoint_(ray_endpoint(lamination)),
      sigma_(hm_sigma(origin, lamination)),
      sigma_tau_(sigma_ * origin.tau()) {}

HalfPlanePoint GeodesicRay::evaluate(double t) const {
    if (t == 0.0) {
        return origin_;
    }
    // Stretch the natural coordinate: zeta -> e^t Re(zeta) + i e^-t Im(zeta),
    // applied to the lattice generators sigma*1 and sigma*tau.
    double et = std::exp(t);
    double emt = std::exp(-t);
    Complex g1(et * sigma_.real(), emt * sigma_.imag());
    Complex gt(et * sigma_tau_.real(), emt * sigma_tau_.imag());
    Complex tau = gt / g1;
    return HalfPlanePoint(tau.real(), tau.imag());
}

GeodesicRay geodesic_ray(const HalfPlanePoint& x, const Lamination& lam) {
    return GeodesicRay(x, lam);
}

TeichmullerDisk::TeichmullerDisk(const QuadDifferential& q)
    : q_(q), sigma_(std::sqrt(q.w)), sigma_tau_(sigma_ * q.base.tau()) {}

HalfPlanePoint TeichmullerDisk::operator()(Complex z) const {
    if (!(std::abs(z) < 1.0)) {
        throw std::invalid_argument("TeichmullerDisk: argument must lie in the open unit disk");
    }
    if (z == Complex(0.0, 0.0)) {
        return q_.base;
    }
    Complex tau = (sigma_tau_ + z * std::conj(sigma_tau_)) / (sigma_ + z * std::conj(sigma_));
    return HalfPlanePoint(tau.real(), tau.imag());
}

TeichmullerDisk teichmuller_disk(const QuadDifferential& q) {
    return TeichmullerDisk(q);
}

ProjectiveLamination lamination_of_angle(const QuadDifferential& q, double theta) {
    Complex rot = std::polar(1.0, -theta);
    return ProjectiveLamination::of(vertical_lamination(QuadDifferential(q.base, rot * q.w)));
}

double poincare_distance(Complex z1, Complex z2) {
    double m = std::abs((z1 - z2) / (1.0 - std::conj(z2) * z1));
    return std::atanh(m);
}

}  // namespace teich
