#include "teich/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "teich/errors.hpp"
#include "teich/measures.hpp"
#include "teich/quadrature.hpp"
#include "teich/summation.hpp"

namespace teich {

namespace {

constexpr Complex kI(0.0, 1.0);

}  // namespace

DiskFunction DiskFunction::polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("DiskFunction: polynomial needs coefficients");
    }
    DiskFunction f;
    f.poly_ = std::move(coeffs);
    double b = 0.0;
    for (const Complex& c : f.poly_) {
        b += std::abs(c);
    }
    f.bound_ = b;
    return f;
}

DiskFunction DiskFunction::blaschke(std::vector<std::pair<Complex, double>> factors) {
    for (const auto& [c, alpha] : factors) {
        (void)alpha;
        if (!(std::abs(c) < 1.0)) {
            throw std::invalid_argument("DiskFunction: Blaschke center must lie in the disk");
        }
    }
    DiskFunction f;
    f.factors_ = std::move(factors);
    f.bound_ = 1.0;
    return f;
}

Complex DiskFunction::eval(Complex zeta) const {
    Complex acc(0.0, 0.0);
    for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) {
        acc = acc * zeta + *it;
    }
    for (const auto& [c, alpha] : factors_) {
        acc *= std::polar(1.0, alpha) * (zeta - c) / (1.0 - std::conj(c) * zeta);
    }
    return acc;
}

Complex cayley(Complex tau) { return (tau - kI) / (tau + kI); }

Complex cayley_inverse(Complex zeta) { return kI * (1.0 + zeta) / (1.0 - zeta); }

TestFunction::TestFunction(FunctionKind kind, DiskFunction h, double alpha, bool imag,
                           std::string label)
    : kind_(kind), h_(std::move(h)), alpha_(alpha), imag_(imag), label_(std::move(label)) {
    bound_ = (kind_ == FunctionKind::Psh) ? std::pow(h_.bound(), alpha_) : h_.bound();
    // Dense-grid certification of the bound across the half-plane (pulled
    // back from a polar grid on the disk).
    for (int ir = 0; ir < 6; ++ir) {
        double rho = 1.0 - std::pow(10.0, -0.5 * ir);
        for (int j = 0; j < 64; ++j) {
            Complex zeta = std::polar(rho, 2.0 * kPi * j / 64.0);
            double v = std::abs(h_.eval(zeta));
            if (kind_ == FunctionKind::Psh) {
                v = std::pow(v, alpha_);
            }
            if (v > bound_ * (1.0 + 1e-12)) {
                throw std::logic_error("TestFunction: certified bound violated on grid");
            }
        }
    }
}

TestFunction TestFunction::holomorphic(DiskFunction h, std::string label) {
    return TestFunction(FunctionKind::Holomorphic, std::move(h), 1.0, false, std::move(label));
}

TestFunction TestFunction::real_part_of(DiskFunction h, std::string label) {
    return TestFunction(FunctionKind::Pluriharmonic, std::move(h), 1.0, false, std::move(label));
}

TestFunction TestFunction::imag_part_of(DiskFunction h, std::string label) {
    return TestFunction(FunctionKind::Pluriharmonic, std::move(h), 1.0, true, std::move(label));
}

TestFunction TestFunction::abs_power_of(DiskFunction h, double alpha, std::string label) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("TestFunction: alpha must be positive");
    }
    return TestFunction(FunctionKind::Psh, std::move(h), alpha, false, std::move(label));
}

Complex TestFunction::complex_value(const HalfPlanePoint& x) const {
    return h_.eval(cayley(x.tau()));
}

double TestFunction::value(const HalfPlanePoint& x) const {
    Complex f = complex_value(x);
    switch (kind_) {
        case FunctionKind::Pluriharmonic:
            return imag_ ? f.imag() : f.real();
        case FunctionKind::Psh:
            return std::pow(std::abs(f), alpha_);
        case FunctionKind::Holomorphic:
            break;
    }
    throw std::logic_error("TestFunction: real value of a holomorphic member; take a part first");
}

Complex TestFunction::boundary_complex(double theta) const {
    return h_.eval(std::polar(1.0, 2.0 * theta));
}

double TestFunction::boundary_value(double theta) const {
    Complex f = boundary_complex(theta);
    switch (kind_) {
        case FunctionKind::Pluriharmonic:
            return imag_ ? f.imag() : f.real();
        case FunctionKind::Psh:
            return std::pow(std::abs(f), alpha_);
        case FunctionKind::Holomorphic:
            break;
    }
    throw std::logic_error("TestFunction: real boundary value of a holomorphic member");
}

TestFunction TestFunction::real_part() const {
    return real_part_of(h_, "Re(" + label_ + ")");
}

TestFunction TestFunction::imag_part() const {
    return imag_part_of(h_, "Im(" + label_ + ")");
}

TestFunction TestFunction::abs_power(double alpha) const {
    return abs_power_of(h_, alpha, "|" + label_ + "|^" + std::to_string(alpha));
}

std::vector<TestFunction> builtin_families() {
    DiskFunction id = DiskFunction::polynomial({Complex(0.0, 0.0), Complex(1.0, 0.0)});
    DiskFunction half_shift = DiskFunction::polynomial({Complex(0.5, 0.0), Complex(0.5, 0.0)});
    DiskFunction mobius = DiskFunction::blaschke({{Complex(0.4, 0.2), 0.7}});
    DiskFunction blaschke2 =
        DiskFunction::blaschke({{Complex(0.5, 0.0), 0.0}, {Complex(-0.3, 0.4), 1.2}});
    DiskFunction cubic = DiskFunction::polynomial(
        {Complex(0.25, 0.0), Complex(-0.5, 0.0), Complex(0.0, 0.0), Complex(0.25, 0.0)});
    DiskFunction constant = DiskFunction::polynomial({Complex(0.37, 0.0)});

    std::vector<TestFunction> fam;
    fam.push_back(TestFunction::holomorphic(id, "cayley"));
    fam.push_back(TestFunction::holomorphic(half_shift, "halfshift"));
    fam.push_back(TestFunction::holomorphic(mobius, "mobius"));
    fam.push_back(TestFunction::holomorphic(blaschke2, "blaschke2"));
    fam.push_back(TestFunction::holomorphic(cubic, "cubic"));

    fam.push_back(TestFunction::real_part_of(id, "Re(cayley)"));
    fam.push_back(TestFunction::imag_part_of(id, "Im(cayley)"));
    fam.push_back(TestFunction::real_part_of(half_shift, "Re(halfshift)"));
    fam.push_back(TestFunction::real_part_of(mobius, "Re(mobius)"));
    fam.push_back(TestFunction::imag_part_of(blaschke2, "Im(blaschke2)"));
    fam.push_back(TestFunction::real_part_of(cubic, "Re(cubic)"));
    fam.push_back(TestFunction::real_part_of(constant, "const"));

    fam.push_back(TestFunction::abs_power_of(id, 1.0, "|cayley|"));
    fam.push_back(TestFunction::abs_power_of(half_shift, 1.0, "|halfshift|"));
    fam.push_back(TestFunction::abs_power_of(half_shift, 0.5, "|halfshift|^0.5"));
    fam.push_back(TestFunction::abs_power_of(blaschke2, 2.0, "|blaschke2|^2"));
    return fam;
}

BoundaryFunction boundary_trace(const TestFunction& u) {
    return BoundaryFunction{[u](double theta) { return u.boundary_value(theta); },
                            {},
                            u.label() + "*"};
}

BoundaryFunction step_function(std::vector<double> edges, std::vector<double> vals,
                               std::string label) {
    if (vals.size() != edges.size() + 1) {
        throw std::invalid_argument("step_function: needs one value per piece");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!(edges[i] > 0.0) || !(edges[i] < kPi) || (i > 0 && !(edges[i] > edges[i - 1]))) {
            throw std::invalid_argument("step_function: edges must increase inside (0, pi)");
        }
    }
    auto values = [edges, vals](double theta) {
        std::size_t k = std::upper_bound(edges.begin(), edges.end(), theta) - edges.begin();
        return vals[k];
    };
    return BoundaryFunction{values, std::move(edges), std::move(label)};
}

double radial_limit(const TestFunction& u, const Lamination& lam, const HalfPlanePoint& x,
                    double tol) {
    constexpr double kTMax = 20.0;
    GeodesicRay ray(x, lam);
    double t = 0.5;
    double v2 = u.value(ray.evaluate(0.0));
    double v1 = u.value(ray.evaluate(t));
    while (true) {
        t *= 1.5;
        if (t > kTMax) {
            throw NoConvergence("radial_limit: no stable value before T_max along the ray");
        }
        double v0 = u.value(ray.evaluate(t));
        double diff0 = std::abs(v0 - v1);
        double diff1 = std::abs(v1 - v2);
        bool settled = diff0 < tol;
        if (!settled && diff1 > 0.0) {
            // observed contraction ratio certifies the remaining error
            double r = diff0 / diff1;
            settled = r < 0.5 && diff0 * r / (1.0 - r) < tol;
        }
        if (settled) {
            double denom = v0 - 2.0 * v1 + v2;
            if (std::abs(denom) > 1e-14 * (std::abs(v0) + std::abs(v1) + std::abs(v2))) {
                double accel = v0 - (v0 - v1) * (v0 - v1) / denom;
                if (std::isfinite(accel) && std::abs(accel - v0) < 4.0 * std::max(tol, diff0)) {
                    return accel;
                }
            }
            return v0;
        }
        v2 = v1;
        v1 = v0;
    }
}

namespace {

// Integrate g(theta) * weight(theta) d theta over [0, pi], splitting at the
// declared discontinuities of g; the tolerance is divided across segments
// proportionally to width.
double integrate_with_breakpoints(const BoundaryFunction& g,
                                  const std::function<double(double)>& weight, double tol) {
    std::vector<double> cuts{0.0};
    for (double b : g.breakpoints) {
        if (b > 0.0 && b < kPi) {
            cuts.push_back(b);
        }
    }
    cuts.push_back(kPi);
    CompensatedSum acc;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double share = tol * (cuts[i + 1] - cuts[i]) / kPi;
        acc.add(integrate_interval(
                    [&g, &weight](double theta) { return g.values(theta) * weight(theta); },
                    cuts[i], cuts[i + 1], share)
                    .value);
    }
    return acc.value();
}

}  // namespace

double poisson_integral(const BoundaryFunction& g, const HalfPlanePoint& x0,
                        const HalfPlanePoint& x, double tol) {
    BoundaryMeasure mu0(x0);
    auto weight = [&](double theta) { return kernel_ratio(x0, x, theta) * mu0.density(theta); };
    return integrate_with_breakpoints(g, weight, tol);
}

std::pair<Complex, Complex> poisson_gradient(const BoundaryFunction& g, const HalfPlanePoint& x,
                                             double tol) {
    BoundaryMeasure mu(x);
    auto integrand = [&](double theta) {
        Lamination dir(std::cos(theta), std::sin(theta));
        Complex sigma = hm_sigma(x, dir);
        return (sigma * sigma) / extremal_length(x, dir) * mu.density(theta);
    };
    double re = integrate_with_breakpoints(
        g, [&](double theta) { return integrand(theta).real(); }, tol);
    double im = integrate_with_breakpoints(
        g, [&](double theta) { return integrand(theta).imag(); }, tol);
    Complex d10(re, im);
    return {d10, std::conj(d10)};
}

double mean_value(const TestFunction& u, const HalfPlanePoint& x, double r, double tol) {
    SphereMeasure mu = sphere_measure(x, r);
    return mu.integrate([&u](const HalfPlanePoint& y) { return u.value(y); }, tol).value;
}

namespace {

void validate_arcs(const std::vector<std::pair<double, double>>& arcs,
                   const std::vector<double>& bounds, double total, const char* what) {
    if (arcs.empty() || arcs.size() != bounds.size()) {
        throw InvalidDecomposition(std::string(what) + ": needs one bound per arc");
    }
    auto sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    double covered = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto [lo, hi] = sorted[i];
        if (!(lo >= 0.0) || !(hi <= total) || !(lo < hi)) {
            throw InvalidDecomposition(std::string(what) + ": arc outside range or empty");
        }
        if (i > 0 && lo < sorted[i - 1].second - 1e-12) {
            throw InvalidDecomposition(std::string(what) + ": arcs overlap");
        }
        covered += hi - lo;
    }
    if (std::abs(covered - total) > 1e-9) {
        throw InvalidDecomposition(std::string(what) + ": arcs do not cover the space");
    }
    for (double m : bounds) {
        if (!(m > 0.0) || !std::isfinite(m)) {
            throw InvalidDecomposition(std::string(what) + ": bounds must be positive");
        }
    }
}

}  // namespace

void Decomposition::validate() const { validate_arcs(arcs, bounds, kPi, "Decomposition"); }

void DiskDecomposition::validate() const {
    validate_arcs(arcs, bounds, 2.0 * kPi, "DiskDecomposition");
}

RieszBound riesz_disk_bound(double v_at_zero, const DiskDecomposition& dec) {
    dec.validate();
    CompensatedSum log_rhs;
    for (std::size_t k = 0; k < dec.arcs.size(); ++k) {
        double mass = (dec.arcs[k].second - dec.arcs[k].first) / (2.0 * kPi);
        log_rhs.add(mass * std::log(dec.bounds[k]));
    }
    return {v_at_zero, std::exp(log_rhs.value())};
}

RieszBound riesz_teich_bound(const TestFunction& v, const HalfPlanePoint& x,
                             const Decomposition& dec, int spot_check_grid, double spot_tol) {
    dec.validate();
    for (double m : dec.bounds) {
        if (m > v.bound() * (1.0 + 1e-9)) {
            throw InvalidDecomposition("riesz_teich_bound: arc bound exceeds the certified sup");
        }
    }
    BoundaryMeasure mu(x);

    CompensatedSum log_rhs;
    for (std::size_t k = 0; k < dec.arcs.size(); ++k) {
        double mass = integrate_interval([&mu](double t) { return mu.density(t); },
                                         dec.arcs[k].first, dec.arcs[k].second, 1e-12)
                          .value;
        log_rhs.add(mass * std::log(dec.bounds[k]));
    }

    if (spot_check_grid > 0) {
        for (int j = 0; j < spot_check_grid; ++j) {
            double theta = kPi * (j + 0.5) / spot_check_grid;
            const double* m = nullptr;
            for (std::size_t k = 0; k < dec.arcs.size(); ++k) {
                if (theta >= dec.arcs[k].first && theta < dec.arcs[k].second) {
                    m = &dec.bounds[k];
                    break;
                }
            }
            if (m == nullptr) {
                continue;  // grid point in the null gap between arcs
            }
            double lim =
                radial_limit(v, Lamination(std::cos(theta), std::sin(theta)), x, 1e-9);
            if (lim > *m + spot_tol) {
                throw BoundViolated("riesz_teich_bound: ray limit exceeds certified bound near theta=" +
                                    std::to_string(theta));
            }
        }
    }
    return {v.value(x), std::exp(log_rhs.value())};
}

std::vector<IsometryRow> radial_limit_isometry_check(const std::vector<TestFunction>& family,
                                                     const HalfPlanePoint& x0) {
    constexpr int kGrid = 1 << 16;
    constexpr double kRho = 1.0 - 1e-6;
    std::vector<IsometryRow> rows;
    for (const TestFunction& u : family) {
        if (u.kind() != FunctionKind::Pluriharmonic) {
            continue;
        }
        double sup_in = 0.0;
        double sup_bd = 0.0;
        for (int j = 0; j < kGrid; ++j) {
            double theta = kPi * j / kGrid;
            Complex zeta = std::polar(kRho, 2.0 * theta);
            Complex tau = cayley_inverse(zeta);
            sup_in = std::max(sup_in, std::abs(u.value(HalfPlanePoint(tau.real(), tau.imag()))));
            sup_bd = std::max(sup_bd, std::abs(u.boundary_value(theta)));
        }
        BoundaryFunction g = boundary_trace(u);
        double repro = 0.0;
        for (const HalfPlanePoint& x :
             {HalfPlanePoint(0.0, 1.0), HalfPlanePoint(1.0, 0.5), HalfPlanePoint(-0.75, 2.5)}) {
            repro = std::max(repro, std::abs(poisson_integral(g, x0, x, 1e-9) - u.value(x)));
        }
        rows.push_back({u.label(), sup_in, sup_bd, std::abs(sup_in - sup_bd), repro});
    }
    return rows;
}

}  // namespace teich
