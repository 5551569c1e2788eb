#pragma once

#include <complex>

namespace teich {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Closed-form model of the Teichmuller space of the once-punctured torus.
//
// Points are tau = a + b*i in the upper half-plane; the marked flat torus is
// C/(Z + tau Z). Measured laminations are weight pairs (p, q) acting on the
// homology basis, extremal length is Ext_tau(p, q) = |p + q tau|^2 / b, and
// the Teichmuller metric is half the curvature -1 hyperbolic metric, so a
// unit-speed ray contracts the extremal length of its vertical lamination
// like exp(-2t). All types are immutable values.

struct HalfPlanePoint {
    double a;
    double b;

    HalfPlanePoint(double a_, double b_);

    Complex tau() const { return Complex(a, b); }
};

// Nonzero weight pair (p, q). For t > 0, t*(p, q) is t times the lamination;
// (p, q) and (-p, -q) carry the same transverse measure.
struct Lamination {
    double p;
    double q;

    Lamination(double p_, double q_);
};

// Projective class of a lamination: the direction angle of (p, q) reduced
// mod pi into [0, pi). A class may be marked `rational` (a weighted simple
// closed curve, hence not uniquely ergodic); rationality is a property of
// the class the caller asserts, not something a floating-point angle can
// decide. Untagged classes are treated as uniquely ergodic, which is almost
// every direction.
struct ProjectiveLamination {
    double theta;
    bool rational = false;

    static ProjectiveLamination from_angle(double theta, bool rational = false);
    static ProjectiveLamination of(const Lamination& lam);
    // The projective class of an integer weight pair, marked rational.
    static ProjectiveLamination of_rational(const Lamination& lam);

    // Unit-vector representative (cos theta, sin theta).
    Lamination direction() const;
};

// Holomorphic quadratic differential w (dz)^2 on the flat torus at `base`.
struct QuadDifferential {
    HalfPlanePoint base;
    Complex w;

    QuadDifferential(HalfPlanePoint base_, Complex w_);

    // L1 norm: |w| * area of the torus = |w| * b.
    double norm() const { return std::abs(w) * base.b; }
};

// i(lam1, lam2) = |p1 q2 - p2 q1|. Bilinear under positive scaling,
// symmetric, zero iff the directions agree projectively.
double intersection_number(const Lamination& lam1, const Lamination& lam2);

// Ext_x(lam) = |p + q tau|^2 / b. Homogeneous of degree 2 in the lamination.
double extremal_length(const HalfPlanePoint& x, const Lamination& lam);

// Square root of the Hubbard-Masur coefficient: sigma = q + i(p + q a)/b.
// Then w = sigma^2 gives the unique differential at x whose vertical
// lamination is lam; its norm equals Ext_x(lam). The formula is pinned by
// matching |Re(sigma (p' + q' tau))| against |p q' - q p'| on test curves.
Complex hm_sigma(const HalfPlanePoint& x, const Lamination& lam);

QuadDifferential hm_differential(const HalfPlanePoint& x, const Lamination& lam);

// Inverse of hm_differential: the lamination whose intersection with any
// (p', q') equals |Re(sqrt(w) (p' + q' tau))|. The representative returned
// has its q-component > 0 (or p > 0 when q == 0).
Lamination vertical_lamination(const QuadDifferential& q);

// h(q) = v(-q).
Lamination horizontal_lamination(const QuadDifferential& q);

// Teichmuller distance: half the curvature -1 hyperbolic distance,
// d_T = asinh(|tau1 - tau2| / (2 sqrt(b1 b2))).
double teich_distance(const HalfPlanePoint& x, const HalfPlanePoint& y);

// Boundary slope -p/q the ray of direction lam converges to; +infinity when
// q == 0 (the boundary of the half-plane has a single point at infinity).
double ray_endpoint(const Lamination& lam);

// Endpoint slope of the PML angle theta: s = -cot(theta); infinity at 0.
double endpoint_slope(double theta);

// Inverse of endpoint_slope: theta = atan2(1, -s) in (0, pi).
double slope_angle(double s);

// Unit-speed Teichmuller geodesic ray from `origin` in the direction of
// `lamination`: Ext of the lamination decays like exp(-2t) along it and
// d_T(origin, evaluate(t)) = t.
class GeodesicRay {
public:
    GeodesicRay(const HalfPlanePoint& origin, const Lamination& lamination);

    HalfPlanePoint evaluate(double t) const;

    const HalfPlanePoint& origin() const { return origin_; }
    const Lamination& lamination() const { return lamination_; }
    double endpoint() const { return endpoint_; }

private:
    HalfPlanePoint origin_;
    Lamination lamination_;
    double endpoint_;
    Complex sigma_;      // hm_sigma(origin, lamination)
    Complex sigma_tau_;  // sigma * tau
};

GeodesicRay geodesic_ray(const HalfPlanePoint& x, const Lamination& lam);

// Isometric holomorphic embedding of the unit disk through base(q); for the
// once-punctured torus it is onto. Phi(tanh(t) e^{i theta}) traces the ray
// of the lamination v(e^{-i theta} q).
class TeichmullerDisk {
public:
    explicit TeichmullerDisk(const QuadDifferential& q);

    HalfPlanePoint operator()(Complex z) const;

    const QuadDifferential& differential() const { return q_; }

private:
    QuadDifferential q_;
    Complex sigma_;
    Complex sigma_tau_;
};

TeichmullerDisk teichmuller_disk(const QuadDifferential& q);

// [v(e^{-i theta} q)]: the projective class swept by the circle action on
// the disk through base(q). Advancing theta by 2 pi returns the same class.
ProjectiveLamination lamination_of_angle(const QuadDifferential& q, double theta);

// Distance on the unit disk matching d_T through Teichmuller disks:
// atanh of the Mobius pseudo-distance (half the curvature -1 metric).
double poincare_distance(Complex z1, Complex z2);

}  // namespace teich
