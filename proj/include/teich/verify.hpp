#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "teich/potential.hpp"
#include "teich/surface.hpp"

namespace teich {

// Per-check tolerances, fixed in one place.
namespace tolerances {
inline constexpr double kPoisson = 1e-6;
inline constexpr double kPoissonNegativeControl = 1e-3;  // minimum discrepancy when corrupted
inline constexpr double kHarmonicMeasure = 1e-8;
inline constexpr double kBasepoint = 1e-8;
inline constexpr double kDisintegration = 1e-6;
inline constexpr double kRays = 1e-9;
inline constexpr double kMvt = 1e-6;
inline constexpr double kJensenSlack = -1e-9;
inline constexpr double kRiesz = 1e-9;
inline constexpr double kGradientRel = 1e-5;
inline constexpr double kIsometry = 1e-3;
inline constexpr double kMcSlopeDeviation = 0.05;
}  // namespace tolerances

struct VerificationReport {
    std::string check_id;
    std::string inputs_digest;
    std::vector<std::pair<std::string, double>> computed;
    double tolerance = 0.0;
    bool passed = false;
    long long runtime_ms = 0;
    std::vector<std::pair<std::string, std::string>> metadata;

    // Canonical JSON record (snake_case keys). Wall-clock time is not
    // reproducible, so runtime_ms is emitted as 0 unless include_runtime.
    std::string to_json(bool include_runtime = false, int indent = -1) const;
    // CSV rows check_id,label,value with a header.
    std::string to_csv() const;
};

std::vector<HalfPlanePoint> default_basepoint_grid();
std::vector<HalfPlanePoint> poisson_basepoint_grid();  // 5 x 5
std::vector<double> chebyshev_slope_grid(int n = 512);
std::vector<HalfPlanePoint> random_points(int n, std::uint64_t seed);

// Thm-level checks. Each runs pure computations and reports the worst
// discrepancy against the pinned tolerance.

VerificationReport check_poisson_formula(const std::vector<HalfPlanePoint>& grid,
                                         const std::vector<TestFunction>& family, double tol,
                                         int exponent = 1);

// Negative control: rerun the Poisson check with the kernel exponent
// corrupted to 2. Passes iff the corrupted formula fails by at least
// kPoissonNegativeControl, guarding against a vacuous main check.
VerificationReport check_poisson_negative_control(const std::vector<HalfPlanePoint>& grid,
                                                  const std::vector<TestFunction>& family);

VerificationReport check_harmonic_measure_identity(const std::vector<HalfPlanePoint>& points,
                                                   const std::vector<double>& s_grid, double tol,
                                                   bool corrupt_endpoint_map = false);

VerificationReport check_change_of_basepoint(int n_arcs, std::uint64_t seed, double tol);

VerificationReport check_disintegration(const std::vector<HalfPlanePoint>& points, double tol);

VerificationReport check_rays(int n_random, std::uint64_t seed, double tol);

VerificationReport check_mvt(const std::vector<HalfPlanePoint>& points,
                             const std::vector<double>& radii,
                             const std::vector<TestFunction>& family, double tol);

VerificationReport check_riesz(int n_random, std::uint64_t seed, double tol);

VerificationReport check_gradient(int n_cases, std::uint64_t seed, double rel_tol);

VerificationReport check_radial_isometry(const std::vector<TestFunction>& family,
                                         const HalfPlanePoint& x0, double tol);

VerificationReport check_mc_engine(std::uint64_t seed, double slope_tol);

}  // namespace teich
