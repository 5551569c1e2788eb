#pragma once

#include <functional>
#include <vector>

#include "teich/surface.hpp"

namespace teich {

struct QuadResult;

// Thurston measure of the extremal-length unit cone at x,
// int_0^pi Ext_x(cos t, sin t)^{-1} dt (equal to pi for every basepoint).
// Computed once per basepoint by adaptive quadrature at 1e-12 and cached;
// concurrent first calls may duplicate the work but agree bitwise.
double cone_mass(const HalfPlanePoint& x);

// Probability measure on PML = [0, pi) obtained by the cone construction:
// density(theta) = Ext_x(cos theta, sin theta)^{-1} / cone_mass(x).
// Full support, integrates to 1.
class BoundaryMeasure {
public:
    explicit BoundaryMeasure(const HalfPlanePoint& x);

    double density(double theta) const;
    double normalization() const { return normalization_; }
    const HalfPlanePoint& basepoint() const { return basepoint_; }

private:
    HalfPlanePoint basepoint_;
    double normalization_;
};

BoundaryMeasure thurston_density(const HalfPlanePoint& x);

// Radon-Nikodym density d mu^x / d mu^y at the direction theta:
// Ext_y(u(theta)) / Ext_x(u(theta)), complexity exponent 1.
double change_of_basepoint_density(const HalfPlanePoint& x, const HalfPlanePoint& y, double theta);

// Smooth extremal-length ratio Ext_x0(u)/Ext_x(u); this is the a.e. value of
// the kernel and the form every integral uses. `exponent` exists for
// negative controls.
double kernel_ratio(const HalfPlanePoint& x0, const HalfPlanePoint& x, double theta,
                    int exponent = 1);

// Poisson kernel on the boundary: the extremal-length ratio at uniquely
// ergodic directions, 1 on classes marked rational. The rational classes
// are a null set; integrals always consume the a.e. smooth ratio.
double pluriharmonic_kernel(const HalfPlanePoint& x0, const HalfPlanePoint& x,
                            const ProjectiveLamination& phi);

// Pushforward of the cone measure to the boundary line under the endpoint
// map theta -> -cot(theta). Cross-checks against the classical half-plane
// harmonic measure b / (pi ((s-a)^2 + b^2)).
double boundary_line_density(const HalfPlanePoint& x, double s);

// Pushforward of the cone measure to the metric sphere S(x, r) under
// theta -> ray_{u(theta)}(r).
class SphereMeasure {
public:
    SphereMeasure(const HalfPlanePoint& center, double radius);

    HalfPlanePoint point_at(double theta) const;
    QuadResult integrate(const std::function<double(const HalfPlanePoint&)>& f, double tol) const;

    const HalfPlanePoint& center() const { return center_; }
    double radius() const { return radius_; }

private:
    HalfPlanePoint center_;
    double radius_;
};

SphereMeasure sphere_measure(const HalfPlanePoint& x, double r);

// Pushforward of the uniform circle measure d theta / 2 pi under
// theta -> [v(e^{-i theta} q)]. On the once-punctured torus the projective
// fiber is all of PML, and this measure coincides with the cone measure at
// base(q); tv_distance_to verifies that instead of assuming it.
class FiberAngleMeasure {
public:
    explicit FiberAngleMeasure(const QuadDifferential& q);

    // PML angle of v(e^{-i theta} q); strictly increasing in theta, gaining
    // exactly pi over a full turn.
    double angle_at(double theta) const;

    // Masses of `bins` equal PML arcs anchored at angle_at(0).
    std::vector<double> bin_masses(int bins) const;

    double tv_distance_to(const BoundaryMeasure& mu, int bins = 256) const;

    const QuadDifferential& differential() const { return q_; }

private:
    double lift_at(double theta) const;
    double preimage(double target_lift) const;

    QuadDifferential q_;
    std::vector<double> grid_theta_;
    std::vector<double> grid_lift_;
};

FiberAngleMeasure fiber_angle_measure(const QuadDifferential& q);

}  // namespace teich
