// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria.

#include <cstdio>
#include <string>
#include <vector>

#include "teich/format.hpp"
#include "teich/rng.hpp"
#include "teich/verify.hpp"

using namespace teich;

namespace {

int failures = 0;

void line(int number, const std::string& name, bool passed, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", passed ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!passed) {
        ++failures;
    }
}

std::string metric(const VerificationReport& rep, const std::string& label) {
    for (const auto& [key, value] : rep.computed) {
        if (key == label) {
            return label + "=" + fmt_double(value);
        }
    }
    return label + "=?";
}

}  // namespace

int main() {
    const std::uint64_t seed = 20250810;
    const auto family = builtin_families();

    {
        VerificationReport rep = check_harmonic_measure_identity(
            random_points(20, seed), chebyshev_slope_grid(512), tolerances::kHarmonicMeasure);
        line(1, "harmonic-measure identity", rep.passed,
             metric(rep, "sup_error") + ", tol=" + fmt_double(rep.tolerance));
    }
    {
        VerificationReport rep =
            check_poisson_formula(poisson_basepoint_grid(), family, tolerances::kPoisson);
        VerificationReport control = check_poisson_negative_control(poisson_basepoint_grid(),
                                                                    family);
        line(2, "Poisson integral formula", rep.passed && control.passed,
             metric(rep, "max_discrepancy") + ", tol=" + fmt_double(rep.tolerance) +
                 "; control " + metric(control, "max_discrepancy") + " >= " +
                 fmt_double(control.tolerance));
    }
    {
        VerificationReport rep =
            check_change_of_basepoint(100, seed + 1, tolerances::kBasepoint);
        line(3, "change of basepoints", rep.passed,
             metric(rep, "max_arc_difference") + ", tol=" + fmt_double(rep.tolerance));
    }
    {
        VerificationReport rep =
            check_disintegration(random_points(10, seed + 2), tolerances::kDisintegration);
        line(4, "disintegration over the fiber circle", rep.passed,
             metric(rep, "max_tv") + ", tol=" + fmt_double(rep.tolerance));
    }
    {
        VerificationReport rep = check_rays(100, seed + 3, tolerances::kRays);
        line(5, "ray laws and disk compatibility", rep.passed,
             metric(rep, "max_decay_rel_err") + ", " + metric(rep, "max_distance_err") + ", " +
                 metric(rep, "max_disk_ray_dist") + ", tol=" + fmt_double(rep.tolerance));
    }
    {
        SplitMix64 rng(seed + 4);
        std::vector<double> radii;
        for (int i = 0; i < 5; ++i) {
            radii.push_back(rng.next_in(0.1, 2.5));
        }
        VerificationReport rep =
            check_mvt(random_points(10, seed + 4), radii, family, tolerances::kMvt);
        line(6, "mean value and Jensen", rep.passed,
             metric(rep, "max_equality_disc") + ", " + metric(rep, "min_jensen_slack") +
                 ", tol=" + fmt_double(rep.tolerance));
    }
    {
        VerificationReport rep = check_riesz(50, seed + 5, tolerances::kRiesz);
        line(7, "Riesz-type inequality", rep.passed,
             metric(rep, "example_lhs") + " <= " + metric(rep, "example_rhs") + ", " +
                 metric(rep, "min_random_slack") + ", tol=" + fmt_double(rep.tolerance));
    }
    {
        VerificationReport rep = check_gradient(20, seed + 6, tolerances::kGradientRel);
        line(8, "Gardiner gradients vs finite differences", rep.passed,
             metric(rep, "max_rel_error") + ", tol=" + fmt_double(rep.tolerance));
    }
    {
        VerificationReport rep =
            check_radial_isometry(family, HalfPlanePoint(0.0, 1.0), tolerances::kIsometry);
        line(9, "radial-limit isometry", rep.passed,
             metric(rep, "max_sup_gap") + ", " + metric(rep, "max_reproduction_err") + ", " +
                 metric(rep, "max_basepoint_diff") + ", tol=" + fmt_double(rep.tolerance));
    }
    {
        VerificationReport rep = check_mc_engine(seed + 7, tolerances::kMcSlopeDeviation);
        line(10, "Monte-Carlo engine", rep.passed,
             metric(rep, "stderr_slope") + ", " + metric(rep, "bit_reproducible") + ", " +
                 metric(rep, "worker_invariant") + ", slope tol=+-" +
                 fmt_double(rep.tolerance));
    }

    if (failures == 0) {
        std::printf("all 10 acceptance criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", failures);
    }
    return failures;
}
