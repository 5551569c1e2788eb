#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "teich/surface.hpp"

namespace teich {

// Bounded functions on the half-plane are built as h(C(tau)) where
// C(tau) = (tau - i)/(tau + i) is the Cayley map onto the unit disk and h is
// a closed-form disk function: a polynomial times a finite product of disk
// automorphisms. The certified sup bound is the coefficient 1-norm of the
// polynomial (each automorphism factor has modulus < 1 on the disk).
class DiskFunction {
public:
    static DiskFunction polynomial(std::vector<Complex> coeffs);
    // Factors (c, alpha): zeta -> e^{i alpha} (zeta - c) / (1 - conj(c) zeta), |c| < 1.
    static DiskFunction blaschke(std::vector<std::pair<Complex, double>> factors);

    Complex eval(Complex zeta) const;
    double bound() const { return bound_; }

private:
    DiskFunction() = default;

    std::vector<Complex> poly_{Complex(1.0, 0.0)};
    std::vector<std::pair<Complex, double>> factors_;
    double bound_ = 1.0;
};

// Cayley map and its inverse.
Complex cayley(Complex tau);
Complex cayley_inverse(Complex zeta);

enum class FunctionKind { Holomorphic, Pluriharmonic, Psh };

// A member of the documented closed-form test families: f = h(C(tau)) and
// one of f itself, Re/Im f, or |f|^alpha. The advertised bound is checked on
// a dense grid at construction; for the |f|^alpha members, log of the value
// is plurisubharmonic as well (it is alpha log|f|).
class TestFunction {
public:
    static TestFunction holomorphic(DiskFunction h, std::string label);
    static TestFunction real_part_of(DiskFunction h, std::string label);
    static TestFunction imag_part_of(DiskFunction h, std::string label);
    static TestFunction abs_power_of(DiskFunction h, double alpha, std::string label);

    FunctionKind kind() const { return kind_; }
    double bound() const { return bound_; }
    bool log_psh() const { return kind_ == FunctionKind::Psh; }
    const std::string& label() const { return label_; }

    // Real value; defined for the Pluriharmonic and Psh kinds.
    double value(const HalfPlanePoint& x) const;
    // Underlying holomorphic value h(C(tau)), any kind.
    Complex complex_value(const HalfPlanePoint& x) const;

    // Continuous boundary extension along PML angles: h(e^{2 i theta}).
    double boundary_value(double theta) const;
    Complex boundary_complex(double theta) const;

    TestFunction real_part() const;
    TestFunction imag_part() const;
    TestFunction abs_power(double alpha) const;

private:
    TestFunction(FunctionKind kind, DiskFunction h, double alpha, bool imag, std::string label);

    FunctionKind kind_;
    DiskFunction h_;
    double alpha_ = 1.0;
    bool imag_ = false;
    double bound_;
    std::string label_;
};

// Holomorphic bases, their real/imaginary parts, and |f|^alpha examples;
// at least five bounded pluriharmonic members.
std::vector<TestFunction> builtin_families();

// Essentially bounded measurable boundary data as a function of the PML
// angle. `breakpoints` lists interior discontinuities so integrators can
// split there.
struct BoundaryFunction {
    std::function<double(double)> values;
    std::vector<double> breakpoints;
    std::string label;
};

BoundaryFunction boundary_trace(const TestFunction& u);

// Piecewise-constant boundary data: edges are the interior jump locations
// (strictly increasing, inside (0, pi)), vals one value per piece.
BoundaryFunction step_function(std::vector<double> edges, std::vector<double> vals,
                               std::string label);

// Limit of u along the ray from x in the direction lam, by geometric ray
// following (t0 = 0.5, ratio 1.5, T_max = 20) with Aitken acceleration.
// Throws NoConvergence when the values fail to stabilize before T_max.
double radial_limit(const TestFunction& u, const Lamination& lam, const HalfPlanePoint& x,
                    double tol);

// P(g)(x) = int g(theta) K(x0, x, theta) d mu^{x0}(theta). Independent of x0
// by the change-of-basepoint identity; bounded by ess-sup |g|.
double poisson_integral(const BoundaryFunction& g, const HalfPlanePoint& x0,
                        const HalfPlanePoint& x, double tol);

// Derivative coefficients of P(g) at x as quadratic differentials: the
// (1,0) part is int g(theta) w_{u(theta),x} / Ext_x(u(theta)) d mu^x(theta)
// and the (0,1) part its conjugate. Under the tangent pairing
// dF = (i/2) d10 dtau + conj, so dF/da = -Im d10 and dF/db = -Re d10.
std::pair<Complex, Complex> poisson_gradient(const BoundaryFunction& g, const HalfPlanePoint& x,
                                             double tol = 1e-12);

// Integral of u against the sphere measure at (x, r); equals u(x) for
// pluriharmonic u and dominates u(x) for continuous psh u.
double mean_value(const TestFunction& u, const HalfPlanePoint& x, double r, double tol);

struct RieszBound {
    double lhs;
    double rhs;
};

// Measurable decomposition of PML = [0, pi) into arcs with limsup bounds.
// Arcs must be disjoint and cover up to total length pi.
struct Decomposition {
    std::vector<std::pair<double, double>> arcs;
    std::vector<double> bounds;

    void validate() const;  // throws InvalidDecomposition
};

// Same on the unit circle [0, 2 pi) for the disk-level inequality.
struct DiskDecomposition {
    std::vector<std::pair<double, double>> arcs;
    std::vector<double> bounds;

    void validate() const;
};

// Disk inequality: v(0) <= prod m_k^{|E_k| / 2 pi} for nonnegative bounded
// subharmonic v with log v subharmonic and limsup_{r->1} v <= m_k on E_k.
RieszBound riesz_disk_bound(double v_at_zero, const DiskDecomposition& dec);

// Teichmuller version: returns (v(x), prod m_k^{mu^x(E_k)}). The caller
// certifies that m_k dominates the ray limsups into E_k; a grid spot-check
// of `spot_check_grid` directions (0 disables) re-derives limits with
// radial_limit and throws BoundViolated on a contradiction.
RieszBound riesz_teich_bound(const TestFunction& v, const HalfPlanePoint& x,
                             const Decomposition& dec, int spot_check_grid = 2048,
                             double spot_tol = 1e-6);

struct IsometryRow {
    std::string label;
    double interior_sup;
    double boundary_sup;
    double sup_gap;            // |interior_sup - boundary_sup|
    double reproduction_err;   // max |P(u*)(x) - u(x)| over sample points
};

// Sup-norm comparison between each pluriharmonic member and its boundary
// trace on dense grids, plus the left-inverse property through the Poisson
// integral at sample points.
std::vector<IsometryRow> radial_limit_isometry_check(const std::vector<TestFunction>& family,
                                                     const HalfPlanePoint& x0);

}  // namespace teich
