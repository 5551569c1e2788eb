#include "teich/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <limits>

#include "json.hpp"
#include "teich/format.hpp"
#include "teich/measures.hpp"
#include "teich/quadrature.hpp"
#include "teich/rng.hpp"

namespace teich {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string digest(std::initializer_list<std::string> parts) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const std::string& p : parts) {
        h = fnv1a64(p + "|", h);
    }
    return hex64(h);
}

std::string points_key(const std::vector<HalfPlanePoint>& pts) {
    std::string s;
    for (const auto& p : pts) {
        s += fmt_double(p.a) + "," + fmt_double(p.b) + ";";
    }
    return s;
}

std::string family_key(const std::vector<TestFunction>& fam) {
    std::string s;
    for (const auto& f : fam) {
        s += f.label() + ";";
    }
    return s;
}

HalfPlanePoint random_point(SplitMix64& rng) {
    double a = rng.next_in(-2.0, 2.0);
    double b = std::exp(rng.next_in(std::log(0.25), std::log(4.0)));
    return HalfPlanePoint(a, b);
}

Lamination random_lamination(SplitMix64& rng) {
    double theta = rng.next_in(0.0, kPi);
    double scale = rng.next_in(0.5, 2.0);
    return Lamination(scale * std::cos(theta), scale * std::sin(theta));
}

double classical_halfplane_density(const HalfPlanePoint& x, double s) {
    double ds = s - x.a;
    return x.b / (kPi * (ds * ds + x.b * x.b));
}

// Sup of a smooth function over [lo, hi] by dense sampling with endpoints.
double sampled_sup(const std::function<double(double)>& f, double lo, double hi, int n) {
    double m = f(lo);
    for (int j = 1; j <= n; ++j) {
        m = std::max(m, f(lo + (hi - lo) * j / n));
    }
    return m;
}

}  // namespace

std::string VerificationReport::to_json(bool include_runtime, int indent) const {
    nlohmann::json j;
    j["check_id"] = check_id;
    j["inputs_digest"] = inputs_digest;
    nlohmann::json comp = nlohmann::json::array();
    for (const auto& [label, value] : computed) {
        comp.push_back({{"label", label}, {"value", value}});
    }
    j["computed"] = comp;
    j["tolerance"] = tolerance;
    j["passed"] = passed;
    j["runtime_ms"] = include_runtime ? runtime_ms : 0;
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [k, v] : metadata) {
        meta[k] = v;
    }
    j["metadata"] = meta;
    return j.dump(indent);
}

std::string VerificationReport::to_csv() const {
    std::string out = "check_id,label,value\n";
    for (const auto& [label, value] : computed) {
        out += csv_escape(check_id) + "," + csv_escape(label) + "," + fmt_double(value) + "\n";
    }
    return out;
}

std::vector<HalfPlanePoint> default_basepoint_grid() {
    std::vector<HalfPlanePoint> pts;
    for (double a : {-1.0, 0.0, 1.0}) {
        for (double b : {0.5, 1.0, 2.0, 4.0}) {
            pts.emplace_back(a, b);
        }
    }
    return pts;
}

std::vector<HalfPlanePoint> poisson_basepoint_grid() {
    std::vector<HalfPlanePoint> pts;
    for (double a : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        for (double b : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            pts.emplace_back(a, b);
        }
    }
    return pts;
}

std::vector<double> chebyshev_slope_grid(int n) {
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        s[static_cast<std::size_t>(j)] = std::tan(-0.5 * kPi + kPi * (j + 0.5) / n);
    }
    return s;
}

std::vector<HalfPlanePoint> random_points(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<HalfPlanePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pts.push_back(random_point(rng));
    }
    return pts;
}

VerificationReport check_poisson_formula(const std::vector<HalfPlanePoint>& grid,
                                         const std::vector<TestFunction>& family, double tol,
                                         int exponent) {
    auto t0 = Clock::now();
    const HalfPlanePoint x0(0.0, 1.0);
    const double quad_tol = std::min(1e-9, 0.001 * tol);
    BoundaryMeasure mu0(x0);

    VerificationReport rep;
    rep.check_id = "poisson";
    rep.inputs_digest = digest({"poisson", points_key(grid), family_key(family), fmt_double(tol),
                                std::to_string(exponent)});
    rep.tolerance = tol;

    double max_disc = 0.0;
    for (const TestFunction& u : family) {
        if (u.kind() != FunctionKind::Pluriharmonic) {
            continue;
        }
        double fn_max = 0.0;
        for (const HalfPlanePoint& x : grid) {
            double integral =
                integrate_interval(
                    [&](double theta) {
                        return u.boundary_value(theta) * kernel_ratio(x0, x, theta, exponent) *
                               mu0.density(theta);
                    },
                    0.0, kPi, quad_tol)
                    .value;
            fn_max = std::max(fn_max, std::abs(integral - u.value(x)));
        }
        rep.computed.emplace_back("max_disc:" + u.label(), fn_max);
        max_disc = std::max(max_disc, fn_max);
    }
    rep.computed.emplace_back("max_discrepancy", max_disc);
    rep.passed = max_disc <= tol;
    rep.metadata = {{"exponent", std::to_string(exponent)},
                    {"grid_size", std::to_string(grid.size())},
                    {"x0", fmt_double(x0.a) + "," + fmt_double(x0.b)}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_poisson_negative_control(const std::vector<HalfPlanePoint>& grid,
                                                  const std::vector<TestFunction>& family) {
    VerificationReport inner = check_poisson_formula(grid, family, tolerances::kPoisson, 2);
    double disc = 0.0;
    for (const auto& [label, value] : inner.computed) {
        if (label == "max_discrepancy") {
            disc = value;
        }
    }
    VerificationReport rep;
    rep.check_id = "poisson-negative-control";
    rep.inputs_digest = inner.inputs_digest;
    rep.computed.emplace_back("max_discrepancy", disc);
    rep.tolerance = tolerances::kPoissonNegativeControl;
    rep.passed = !inner.passed && disc >= tolerances::kPoissonNegativeControl;
    rep.runtime_ms = inner.runtime_ms;
    rep.metadata = {{"exponent", "2"},
                    {"note", "passes when the corrupted kernel fails the formula"}};
    return rep;
}

VerificationReport check_harmonic_measure_identity(const std::vector<HalfPlanePoint>& points,
                                                   const std::vector<double>& s_grid, double tol,
                                                   bool corrupt_endpoint_map) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "harmonic-measure";
    rep.inputs_digest = digest({"harmonic-measure", points_key(points),
                                std::to_string(s_grid.size()), fmt_double(tol),
                                corrupt_endpoint_map ? "corrupt" : "standard"});
    rep.tolerance = tol;

    double sup_err = 0.0;
    for (const HalfPlanePoint& x : points) {
        BoundaryMeasure mu(x);
        double point_err = 0.0;
        for (double s : s_grid) {
            double pushed;
            if (corrupt_endpoint_map) {
                // negative control: endpoint map with the wrong sign
                pushed = mu.density(slope_angle(-s)) / (1.0 + s * s);
            } else {
                pushed = boundary_line_density(x, s);
            }
            point_err = std::max(point_err, std::abs(pushed - classical_halfplane_density(x, s)));
        }
        sup_err = std::max(sup_err, point_err);
    }
    rep.computed.emplace_back("sup_error", sup_err);
    rep.passed = sup_err <= tol;
    rep.metadata = {{"endpoint_map", corrupt_endpoint_map ? "s=+cot(theta)" : "s=-cot(theta)"},
                    {"s_grid", std::to_string(s_grid.size())}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_change_of_basepoint(int n_arcs, std::uint64_t seed, double tol) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "basepoint";
    rep.inputs_digest =
        digest({"basepoint", std::to_string(n_arcs), std::to_string(seed), fmt_double(tol)});
    rep.tolerance = tol;

    SplitMix64 rng(seed);
    double max_diff = 0.0;
    for (int i = 0; i < n_arcs; ++i) {
        HalfPlanePoint x = random_point(rng);
        HalfPlanePoint y = random_point(rng);
        double lo = rng.next_in(0.0, 0.8 * kPi);
        double hi = lo + rng.next_in(0.01, kPi - lo);
        BoundaryMeasure mux(x);
        BoundaryMeasure muy(y);
        double lhs =
            integrate_interval([&](double t) { return mux.density(t); }, lo, hi, 1e-12).value;
        double rhs = integrate_interval(
                         [&](double t) {
                             return change_of_basepoint_density(x, y, t) * muy.density(t);
                         },
                         lo, hi, 1e-12)
                         .value;
        max_diff = std::max(max_diff, std::abs(lhs - rhs));
    }
    rep.computed.emplace_back("max_arc_difference", max_diff);
    rep.passed = max_diff <= tol;
    rep.metadata = {{"arcs", std::to_string(n_arcs)}, {"seed", std::to_string(seed)}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_disintegration(const std::vector<HalfPlanePoint>& points, double tol) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "disintegration";
    rep.inputs_digest = digest({"disintegration", points_key(points), fmt_double(tol)});
    rep.tolerance = tol;

    double max_tv = 0.0;
    int idx = 0;
    for (const HalfPlanePoint& x : points) {
        QuadDifferential base = hm_differential(x, Lamination(1.0, 1.2357));
        // rotate the differential so the fibers are probed at varying phases
        QuadDifferential q(x, std::polar(1.0, 0.3 + 0.7 * idx) * base.w);
        double tv = fiber_angle_measure(q).tv_distance_to(thurston_density(x));
        rep.computed.emplace_back("tv[" + std::to_string(idx) + "]", tv);
        max_tv = std::max(max_tv, tv);
        ++idx;
    }
    rep.computed.emplace_back("max_tv", max_tv);
    rep.passed = max_tv <= tol;
    rep.metadata = {{"points", std::to_string(points.size())}, {"bins", "256"}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_rays(int n_random, std::uint64_t seed, double tol) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "rays";
    rep.inputs_digest =
        digest({"rays", std::to_string(n_random), std::to_string(seed), fmt_double(tol)});
    rep.tolerance = tol;

    SplitMix64 rng(seed);
    double max_decay = 0.0;
    double max_growth = 0.0;
    double max_dist = 0.0;
    for (int i = 0; i < n_random; ++i) {
        HalfPlanePoint x = random_point(rng);
        Lamination lam = random_lamination(rng);
        Lamination hor = horizontal_lamination(hm_differential(x, lam));
        GeodesicRay ray(x, lam);
        double ext0 = extremal_length(x, lam);
        double hor0 = extremal_length(x, hor);
        for (double t = 0.0; t <= 10.0; t += 0.5) {
            HalfPlanePoint y = ray.evaluate(t);
            max_decay = std::max(
                max_decay, std::abs(extremal_length(y, lam) * std::exp(2.0 * t) / ext0 - 1.0));
            max_growth = std::max(
                max_growth, std::abs(extremal_length(y, hor) * std::exp(-2.0 * t) / hor0 - 1.0));
            max_dist = std::max(max_dist, std::abs(teich_distance(x, y) - t));
        }
    }

    // Disk/ray compatibility on a theta x t grid at three basepoints.
    double max_disk_ray = 0.0;
    for (const HalfPlanePoint& x :
         {HalfPlanePoint(0.0, 1.0), HalfPlanePoint(1.0, 2.0), HalfPlanePoint(-0.7, 0.6)}) {
        QuadDifferential q = hm_differential(x, Lamination(0.8, -0.45));
        TeichmullerDisk disk(q);
        for (int k = 0; k < 32; ++k) {
            double theta = kPi * k / 16.0;
            Lamination dir = lamination_of_angle(q, theta).direction();
            GeodesicRay ray(x, dir);
            for (double t : {0.1, 0.5, 1.0, 2.0, 3.0}) {
                HalfPlanePoint via_disk = disk(std::polar(std::tanh(t), theta));
                HalfPlanePoint via_ray = ray.evaluate(t);
                max_disk_ray = std::max(max_disk_ray, teich_distance(via_disk, via_ray));
            }
        }
    }

    // Disk isometry against random pairs.
    double max_isom = 0.0;
    {
        QuadDifferential q = hm_differential(HalfPlanePoint(0.5, 1.5), Lamination(1.0, 0.3));
        TeichmullerDisk disk(q);
        for (int i = 0; i < 20; ++i) {
            Complex z1 = std::polar(rng.next_in(0.0, 0.95), rng.next_in(0.0, 2.0 * kPi));
            Complex z2 = std::polar(rng.next_in(0.0, 0.95), rng.next_in(0.0, 2.0 * kPi));
            max_isom = std::max(max_isom, std::abs(poincare_distance(z1, z2) -
                                                   teich_distance(disk(z1), disk(z2))));
        }
    }

    rep.computed.emplace_back("max_decay_rel_err", max_decay);
    rep.computed.emplace_back("max_growth_rel_err", max_growth);
    rep.computed.emplace_back("max_distance_err", max_dist);
    rep.computed.emplace_back("max_disk_ray_dist", max_disk_ray);
    rep.computed.emplace_back("max_isometry_err", max_isom);
    rep.passed = max_decay <= tol && max_growth <= tol && max_dist <= tol &&
                 max_disk_ray <= tol && max_isom <= tol;
    rep.metadata = {{"rays", std::to_string(n_random)}, {"seed", std::to_string(seed)}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_mvt(const std::vector<HalfPlanePoint>& points,
                             const std::vector<double>& radii,
                             const std::vector<TestFunction>& family, double tol) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "mvt";
    std::string radii_key;
    for (double r : radii) {
        radii_key += fmt_double(r) + ";";
    }
    rep.inputs_digest =
        digest({"mvt", points_key(points), radii_key, family_key(family), fmt_double(tol)});
    rep.tolerance = tol;

    double max_eq = 0.0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (const TestFunction& u : family) {
        if (u.kind() == FunctionKind::Holomorphic) {
            continue;
        }
        for (const HalfPlanePoint& x : points) {
            for (double r : radii) {
                double mv = mean_value(u, x, r, 1e-9);
                if (u.kind() == FunctionKind::Pluriharmonic) {
                    max_eq = std::max(max_eq, std::abs(mv - u.value(x)));
                } else {
                    min_slack = std::min(min_slack, mv - u.value(x));
                }
            }
        }
    }
    if (!std::isfinite(min_slack)) {
        min_slack = 0.0;  // family had no psh member
    }
    rep.computed.emplace_back("max_equality_disc", max_eq);
    rep.computed.emplace_back("min_jensen_slack", min_slack);
    rep.passed = max_eq <= tol && min_slack >= tolerances::kJensenSlack;
    rep.metadata = {{"points", std::to_string(points.size())},
                    {"radii", std::to_string(radii.size())}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_riesz(int n_random, std::uint64_t seed, double tol) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "riesz";
    rep.inputs_digest =
        digest({"riesz", std::to_string(n_random), std::to_string(seed), fmt_double(tol)});
    rep.tolerance = tol;

    bool ok = true;

    // Documented example: v = |tau/(tau+i)| at i, split at endpoint slopes
    // +-1. v(i) = 1/2 and the product bound is 2^{-1/4}.
    {
        TestFunction v = TestFunction::abs_power_of(
            DiskFunction::polynomial({Complex(0.5, 0.0), Complex(0.5, 0.0)}), 1.0, "|halfshift|");
        Decomposition dec;
        dec.arcs = {{0.0, kPi / 4.0}, {kPi / 4.0, 3.0 * kPi / 4.0}, {3.0 * kPi / 4.0, kPi}};
        dec.bounds = {1.0, 1.0 / std::sqrt(2.0), 1.0};
        RieszBound rb = riesz_teich_bound(v, HalfPlanePoint(0.0, 1.0), dec, 2048, 1e-6);
        rep.computed.emplace_back("example_lhs", rb.lhs);
        rep.computed.emplace_back("example_rhs", rb.rhs);
        ok = ok && std::abs(rb.lhs - 0.5) <= 1e-12 &&
             std::abs(rb.rhs - std::pow(2.0, -0.25)) <= 1e-9 && rb.lhs <= rb.rhs + tol;
    }

    // Randomized decompositions over the built-in psh members.
    std::vector<TestFunction> psh;
    for (const TestFunction& f : builtin_families()) {
        if (f.kind() == FunctionKind::Psh) {
            psh.push_back(f);
        }
    }
    SplitMix64 rng(seed);
    double min_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_random; ++i) {
        const TestFunction& v = psh[static_cast<std::size_t>(i) % psh.size()];
        HalfPlanePoint x = random_point(rng);
        int pieces = 2 + static_cast<int>(rng.next_u64() % 4);
        std::vector<double> edges;
        for (int k = 0; k + 1 < pieces; ++k) {
            edges.push_back(rng.next_in(0.05, kPi - 0.05));
        }
        std::sort(edges.begin(), edges.end());
        Decomposition dec;
        double lo = 0.0;
        for (double e : edges) {
            dec.arcs.push_back({lo, e});
            lo = e;
        }
        dec.arcs.push_back({lo, kPi});
        for (const auto& [alo, ahi] : dec.arcs) {
            // caller-certified limsup bound: dense-sampled sup of the
            // continuous boundary extension over the closed arc
            double m = sampled_sup([&v](double th) { return v.boundary_value(th); }, alo, ahi,
                                   4096);
            dec.bounds.push_back(std::max(m, 1e-12) + 1e-12);
        }
        RieszBound rb = riesz_teich_bound(v, x, dec, 256, 1e-6);
        min_slack = std::min(min_slack, rb.rhs - rb.lhs);
    }
    rep.computed.emplace_back("min_random_slack", min_slack);
    ok = ok && min_slack >= -tol;

    // Disk-level inequality on Blaschke-type examples.
    {
        DiskFunction b2 =
            DiskFunction::blaschke({{Complex(0.5, 0.0), 0.0}, {Complex(-0.3, 0.4), 1.2}});
        DiskDecomposition ddec;
        for (int k = 0; k < 4; ++k) {
            ddec.arcs.push_back({0.5 * kPi * k, 0.5 * kPi * (k + 1)});
            ddec.bounds.push_back(sampled_sup(
                [&b2](double phi) { return std::abs(b2.eval(std::polar(1.0, phi))); },
                0.5 * kPi * k, 0.5 * kPi * (k + 1), 4096) + 1e-12);
        }
        RieszBound db = riesz_disk_bound(std::abs(b2.eval(Complex(0.0, 0.0))), ddec);
        rep.computed.emplace_back("disk_lhs", db.lhs);
        rep.computed.emplace_back("disk_rhs", db.rhs);
        ok = ok && db.lhs <= db.rhs + tol;

        DiskDecomposition whole;
        whole.arcs = {{0.0, 2.0 * kPi}};
        whole.bounds = {0.7};
        RieszBound cb = riesz_disk_bound(0.7, whole);  // constant: equality
        ok = ok && std::abs(cb.lhs - cb.rhs) <= 1e-12;

        whole.bounds = {1.0};
        RieszBound zb = riesz_disk_bound(0.0, whole);  // v = |z|
        ok = ok && zb.lhs == 0.0 && std::abs(zb.rhs - 1.0) <= 1e-15;
    }

    rep.passed = ok;
    rep.metadata = {{"random_cases", std::to_string(n_random)}, {"seed", std::to_string(seed)}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_gradient(int n_cases, std::uint64_t seed, double rel_tol) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "gradient";
    rep.inputs_digest =
        digest({"gradient", std::to_string(n_cases), std::to_string(seed), fmt_double(rel_tol)});
    rep.tolerance = rel_tol;

    SplitMix64 rng(seed);
    const double quad_tol = 1e-12;
    double max_rel = 0.0;
    for (int i = 0; i < n_cases; ++i) {
        HalfPlanePoint x = random_point(rng);
        std::vector<double> edges = {rng.next_in(0.2, 1.0), rng.next_in(1.2, 2.0),
                                     rng.next_in(2.2, 3.0)};
        std::vector<double> vals = {rng.next_in(-1.0, 1.0), rng.next_in(-1.0, 1.0),
                                    rng.next_in(-1.0, 1.0), rng.next_in(-1.0, 1.0)};
        BoundaryFunction g = step_function(edges, vals, "step");

        auto [d10, d01] = poisson_gradient(g, x, quad_tol);
        (void)d01;
        double da_closed = -d10.imag();
        double db_closed = -d10.real();

        auto F = [&](double a, double b) {
            return poisson_integral(g, x, HalfPlanePoint(a, b), quad_tol);
        };
        auto central = [&](bool in_a, double h) {
            double fp = in_a ? F(x.a + h, x.b) : F(x.a, x.b + h);
            double fm = in_a ? F(x.a - h, x.b) : F(x.a, x.b - h);
            return (fp - fm) / (2.0 * h);
        };
        const double h = 1e-4;
        double da_fd = (4.0 * central(true, 0.5 * h) - central(true, h)) / 3.0;
        double db_fd = (4.0 * central(false, 0.5 * h) - central(false, h)) / 3.0;

        double err = std::hypot(da_closed - da_fd, db_closed - db_fd);
        double scale = std::max(std::hypot(da_fd, db_fd), 1e-8);
        max_rel = std::max(max_rel, err / scale);
    }
    rep.computed.emplace_back("max_rel_error", max_rel);
    rep.passed = max_rel <= rel_tol;
    rep.metadata = {{"cases", std::to_string(n_cases)},
                    {"seed", std::to_string(seed)},
                    {"fd_step", "1e-4 with one Richardson halving"}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_radial_isometry(const std::vector<TestFunction>& family,
                                         const HalfPlanePoint& x0, double tol) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "radial-isometry";
    rep.inputs_digest = digest({"radial-isometry", family_key(family),
                                fmt_double(x0.a) + "," + fmt_double(x0.b), fmt_double(tol)});
    rep.tolerance = tol;

    double max_gap = 0.0;
    double max_repro = 0.0;
    for (const IsometryRow& row : radial_limit_isometry_check(family, x0)) {
        rep.computed.emplace_back("sup_gap:" + row.label, row.sup_gap);
        max_gap = std::max(max_gap, row.sup_gap);
        max_repro = std::max(max_repro, row.reproduction_err);
    }

    // Base-point independence of radial limits at irrational directions.
    const double rl_tol = 1e-10;
    SplitMix64 rng(99);
    double max_bp = 0.0;
    for (int i = 0; i < 10; ++i) {
        Lamination lam = random_lamination(rng);
        HalfPlanePoint x1 = random_point(rng);
        HalfPlanePoint x2 = random_point(rng);
        for (const TestFunction& u : family) {
            if (u.kind() != FunctionKind::Pluriharmonic) {
                continue;
            }
            max_bp = std::max(max_bp, std::abs(radial_limit(u, lam, x1, rl_tol) -
                                               radial_limit(u, lam, x2, rl_tol)));
        }
    }

    rep.computed.emplace_back("max_sup_gap", max_gap);
    rep.computed.emplace_back("max_reproduction_err", max_repro);
    rep.computed.emplace_back("max_basepoint_diff", max_bp);
    rep.passed = max_gap <= tol && max_repro <= 1e-6 && max_bp <= 2.0 * rl_tol;
    rep.metadata = {{"grid", "65536"}, {"rl_tol", fmt_double(rl_tol)}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerificationReport check_mc_engine(std::uint64_t seed, double slope_tol) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check_id = "mc-engine";
    rep.inputs_digest = digest({"mc-engine", std::to_string(seed), fmt_double(slope_tol)});
    rep.tolerance = slope_tol;

    const HalfPlanePoint x(0.0, 1.0);
    auto f = [](double theta) { return std::cos(2.0 * theta) * std::cos(2.0 * theta); };

    // Convergence slope of the standard error.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const std::int64_t sizes[4] = {1000, 10000, 100000, 1000000};
    for (std::int64_t n : sizes) {
        McResult r = mc_integrate(f, x, McConfig{seed, n, "splitmix64"});
        double lx = std::log(static_cast<double>(n));
        double ly = std::log(r.stderr_estimate);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double slope = (4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx);

    // Bit reproducibility across runs and worker counts.
    McConfig cfg{seed, 100000, "splitmix64"};
    McResult r1 = mc_integrate(f, x, cfg, 1);
    McResult r2 = mc_integrate(f, x, cfg, 1);
    McResult r3 = mc_integrate(f, x, cfg, 2);
    McResult r4 = mc_integrate(f, x, cfg, 4);
    auto bits_equal = [](const McResult& p, const McResult& q) {
        return std::memcmp(&p.estimate, &q.estimate, sizeof(double)) == 0 &&
               std::memcmp(&p.stderr_estimate, &q.stderr_estimate, sizeof(double)) == 0;
    };
    bool repro = bits_equal(r1, r2);
    bool workers = bits_equal(r1, r3) && bits_equal(r1, r4);

    // Unbiasedness on an indicator, against the quadrature value.
    const HalfPlanePoint xi(1.0, 0.7);
    auto indicator = [](double theta) { return theta < 0.5 * kPi ? 1.0 : 0.0; };
    double quad = integrate_circle_pml(indicator, xi, 1e-12).value;
    McResult ri = mc_integrate(indicator, xi, McConfig{seed + 1, 10000, "splitmix64"});
    double sigmas = std::abs(ri.estimate - quad) / ri.stderr_estimate;

    rep.computed.emplace_back("stderr_slope", slope);
    rep.computed.emplace_back("bit_reproducible", repro ? 1.0 : 0.0);
    rep.computed.emplace_back("worker_invariant", workers ? 1.0 : 0.0);
    rep.computed.emplace_back("indicator_sigma_distance", sigmas);
    rep.passed = std::abs(slope + 0.5) <= slope_tol && repro && workers && sigmas <= 4.0;
    rep.metadata = {{"seed", std::to_string(seed)},
                    {"generator_id", "splitmix64"},
                    {"sizes", "1e3,1e4,1e5,1e6"}};
    rep.runtime_ms = ms_since(t0);
    return rep;
}

}  // namespace teich
