#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "teich/surface.hpp"

namespace teich {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Deterministic adaptive Gauss-Kronrod (G7, K15). The panel value is the
// K15 estimate, the local error the |K15 - G7| discrepancy; a panel whose
// error exceeds its width-proportional share of `tol` is bisected.
// Throws PanelLimitExceeded past kPanelLimit panels.
inline constexpr int kPanelLimit = 200000;

QuadResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                              double tol);

// Integral over the whole real line via the substitution s = tan(psi).
QuadResult integrate_real_line(const std::function<double(double)>& f, double tol);

// Weighted integral against the Thurston cone density at basepoint x:
// returns int_0^pi f(theta) d mu^x(theta). Equals 1 for f == 1.
QuadResult integrate_circle_pml(const std::function<double(double)>& f, const HalfPlanePoint& x,
                                double tol);

// Configuration of a Monte-Carlo run. `generator_id` names the fixed
// algorithm; only "splitmix64" is recognized. Identical configs produce
// bit-identical sample streams.
struct McConfig {
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
    std::string generator_id = "splitmix64";
};

struct McResult {
    double estimate = 0.0;
    double stderr_estimate = 0.0;
};

// Importance-samples theta from the Thurston density of x by inverse CDF on
// a precomputed monotone table and returns the sample mean of f with its
// standard error. `workers` = 0 reads TEICH_THREADS (default 1); the result
// is bit-identical for every worker count.
McResult mc_integrate(const std::function<double(double)>& f, const HalfPlanePoint& x,
                      const McConfig& cfg, int workers = 0);

}  // namespace teich
