#include "teich/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "teich/quadrature.hpp"

namespace teich {

namespace {

double extremal_of_angle(const HalfPlanePoint& x, double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    double u = c + s * x.a;
    double v = s * x.b;
    return (u * u + v * v) / x.b;
}

struct PointKey {
    std::uint64_t a_bits;
    std::uint64_t b_bits;
    bool operator==(const PointKey& o) const { return a_bits == o.a_bits && b_bits == o.b_bits; }
};

struct PointKeyHash {
    std::size_t operator()(const PointKey& k) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t v : {k.a_bits, k.b_bits}) {
            for (int i = 0; i < 8; ++i) {
                h = (h ^ ((v >> (8 * i)) & 0xffULL)) * 1099511628211ULL;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

PointKey key_of(const HalfPlanePoint& x) {
    PointKey k{};
    std::memcpy(&k.a_bits, &x.a, sizeof(double));
    std::memcpy(&k.b_bits, &x.b, sizeof(double));
    return k;
}

}  // namespace

double cone_mass(const HalfPlanePoint& x) {
    static std::mutex mtx;
    static std::unordered_map<PointKey, double, PointKeyHash> cache;

    PointKey key = key_of(x);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    QuadResult r = integrate_interval(
        [&x](double theta) { return 1.0 / extremal_of_angle(x, theta); }, 0.0, kPi, 1e-12);
    {
        std::lock_guard<std::mutex> lock(mtx);
        cache[key] = r.value;  // deterministic quadrature: duplicates agree bitwise
    }
    return r.value;
}

BoundaryMeasure::BoundaryMeasure(const HalfPlanePoint& x)
    : basepoint_(x), normalization_(cone_mass(x)) {}

double BoundaryMeasure::density(double theta) const {
    return 1.0 / (extremal_of_angle(basepoint_, theta) * normalization_);
}

BoundaryMeasure thurston_density(const HalfPlanePoint& x) { return BoundaryMeasure(x); }

double change_of_basepoint_density(const HalfPlanePoint& x, const HalfPlanePoint& y,
                                   double theta) {
    return extremal_of_angle(y, theta) / extremal_of_angle(x, theta);
}

double kernel_ratio(const HalfPlanePoint& x0, const HalfPlanePoint& x, double theta,
                    int exponent) {
    double ratio = extremal_of_angle(x0, theta) / extremal_of_angle(x, theta);
    double out = ratio;
    for (int i = 1; i < exponent; ++i) {
        out *= ratio;
    }
    return out;
}

double pluriharmonic_kernel(const HalfPlanePoint& x0, const HalfPlanePoint& x,
                            const ProjectiveLamination& phi) {
    if (phi.rational) {
        return 1.0;
    }
    return kernel_ratio(x0, x, phi.theta);
}

double boundary_line_density(const HalfPlanePoint& x, double s) {
    if (!std::isfinite(s)) {
        throw std::invalid_argument("boundary_line_density: s must be finite");
    }
    double theta = slope_angle(s);
    BoundaryMeasure mu(x);
    return mu.density(theta) / (1.0 + s * s);
}

SphereMeasure::SphereMeasure(const HalfPlanePoint& center, double radius)
    : center_(center), radius_(radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("SphereMeasure: radius must be positive");
    }
}

HalfPlanePoint SphereMeasure::point_at(double theta) const {
    Lamination dir(std::cos(theta), std::sin(theta));
    return GeodesicRay(center_, dir).evaluate(radius_);
}

QuadResult SphereMeasure::integrate(const std::function<double(const HalfPlanePoint&)>& f,
                                    double tol) const {
    return integrate_circle_pml([this, &f](double theta) { return f(point_at(theta)); }, center_,
                                tol);
}

SphereMeasure sphere_measure(const HalfPlanePoint& x, double r) { return SphereMeasure(x, r); }

namespace {

constexpr int kLiftGrid = 16384;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

FiberAngleMeasure::FiberAngleMeasure(const QuadDifferential& q) : q_(q) {
    grid_theta_.resize(kLiftGrid + 1);
    grid_lift_.resize(kLiftGrid + 1);
    double prev_angle = angle_at(0.0);
    double lift = prev_angle;
    grid_theta_[0] = 0.0;
    grid_lift_[0] = lift;
    for (int j = 1; j <= kLiftGrid; ++j) {
        double theta = kTwoPi * static_cast<double>(j) / kLiftGrid;
        double ang = angle_at(theta);
        double inc = ang - prev_angle;
        if (inc < -0.5 * kPi) {
            inc += kPi;
        } else if (inc < 0.0) {
            inc = 0.0;  // monotone map, sub-ulp noise at a grid node
        }
        if (inc >= 0.5 * kPi) {
            throw std::runtime_error(
                "FiberAngleMeasure: angle map varies too fast for the lift grid");
        }
        lift += inc;
        prev_angle = ang;
        grid_theta_[j] = theta;
        grid_lift_[j] = lift;
    }
    if (std::abs((grid_lift_.back() - grid_lift_.front()) - kPi) > 1e-9) {
        throw std::runtime_error("FiberAngleMeasure: lift does not close up to pi");
    }
}

double FiberAngleMeasure::angle_at(double theta) const {
    return lamination_of_angle(q_, theta).theta;
}

double FiberAngleMeasure::lift_at(double theta) const {
    auto it = std::upper_bound(grid_theta_.begin(), grid_theta_.end(), theta);
    int j = static_cast<int>(it - grid_theta_.begin()) - 1;
    j = std::max(0, std::min(j, kLiftGrid - 1));
    double base_angle = grid_lift_[j] - std::floor(grid_lift_[j] / kPi) * kPi;
    double d = angle_at(theta) - base_angle;
    if (d < -0.5 * kPi) {
        d += kPi;
    } else if (d < 0.0) {
        d = 0.0;
    }
    return grid_lift_[j] + d;
}

double FiberAngleMeasure::preimage(double target_lift) const {
    auto it = std::lower_bound(grid_lift_.begin(), grid_lift_.end(), target_lift);
    if (it == grid_lift_.begin()) {
        return grid_theta_.front();
    }
    if (it == grid_lift_.end()) {
        return grid_theta_.back();
    }
    int j = static_cast<int>(it - grid_lift_.begin());
    double lo = grid_theta_[j - 1];
    double hi = grid_theta_[j];
    for (int iter = 0; iter < 80 && hi - lo > 1e-14; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (lift_at(mid) < target_lift) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> FiberAngleMeasure::bin_masses(int bins) const {
    std::vector<double> masses(static_cast<std::size_t>(bins));
    double start = grid_lift_.front();
    double prev_theta = 0.0;
    for (int k = 1; k <= bins; ++k) {
        double theta_k = (k == bins) ? kTwoPi : preimage(start + kPi * k / bins);
        masses[static_cast<std::size_t>(k - 1)] = (theta_k - prev_theta) / kTwoPi;
        prev_theta = theta_k;
    }
    return masses;
}

double FiberAngleMeasure::tv_distance_to(const BoundaryMeasure& mu, int bins) const {
    std::vector<double> masses = bin_masses(bins);
    double anchor = grid_lift_.front();
    double tv = 0.0;
    for (int k = 0; k < bins; ++k) {
        double lo = anchor + kPi * k / bins;
        double hi = anchor + kPi * (k + 1) / bins;
        // Reduce [lo, hi) mod pi, splitting at the seam when needed.
        double lo_m = lo - std::floor(lo / kPi) * kPi;
        double hi_m = lo_m + (hi - lo);
        double expected = 0.0;
        auto dens = [&mu](double t) { return mu.density(t); };
        if (hi_m <= kPi) {
            expected = integrate_interval(dens, lo_m, hi_m, 1e-13).value;
        } else {
            expected = integrate_interval(dens, lo_m, kPi, 1e-13).value +
                       integrate_interval(dens, 0.0, hi_m - kPi, 1e-13).value;
        }
        tv += std::abs(masses[static_cast<std::size_t>(k)] - expected);
    }
    return 0.5 * tv;
}

FiberAngleMeasure fiber_angle_measure(const QuadDifferential& q) { return FiberAngleMeasure(q); }

}  // namespace teich
