#include "teich/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "teich/errors.hpp"
#include "teich/measures.hpp"
#include "teich/rng.hpp"
#include "teich/summation.hpp"

namespace teich {

namespace {

// QUADPACK G7K15 nodes and weights on [-1, 1] (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double k15;
    double err;
};

PanelEstimate gk15(const std::function<double(double)>& f, double lo, double hi) {
    double c = 0.5 * (lo + hi);
    double h = 0.5 * (hi - lo);
    double fc = f(c);
    double gauss = fc * kWg[3];
    double kron = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double sum = f(c - x) + f(c + x);
        kron += sum * kWgk[j];
        if (j % 2 == 1) {
            gauss += sum * kWg[j / 2];
        }
    }
    kron *= h;
    gauss *= h;
    if (!std::isfinite(kron)) {
        throw std::invalid_argument("integrate_interval: integrand is not finite on the panel");
    }
    return {kron, std::abs(kron - gauss)};
}

struct AdaptiveState {
    const std::function<double(double)>& f;
    double full_width;
    double tol;
    int panels = 0;
    CompensatedSum value;
    CompensatedSum error;
};

// Depth-first, left-to-right subdivision: the accumulation order is a pure
// function of the inputs.
void adapt(AdaptiveState& st, double lo, double hi, int depth) {
    PanelEstimate e = gk15(st.f, lo, hi);
    st.panels += 1;
    if (st.panels > kPanelLimit) {
        throw PanelLimitExceeded("integrate_interval: panel limit exceeded");
    }
    double share = st.tol * ((hi - lo) / st.full_width);
    if (e.err <= share || depth >= 52) {
        st.value.add(e.k15);
        st.error.add(e.err);
        return;
    }
    double mid = 0.5 * (lo + hi);
    adapt(st, lo, mid, depth + 1);
    adapt(st, mid, hi, depth + 1);
}

int resolve_workers(int workers) {
    if (workers > 0) {
        return workers;
    }
    if (const char* env = std::getenv("TEICH_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) {
            return n;
        }
    }
    return 1;
}

}  // namespace

QuadResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                              double tol) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("integrate_interval: requires finite lo < hi");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("integrate_interval: tol must be positive");
    }
    AdaptiveState st{f, hi - lo, tol, 0, {}, {}};
    adapt(st, lo, hi, 0);
    return {st.value.value(), st.error.value(), st.panels};
}

QuadResult integrate_real_line(const std::function<double(double)>& f, double tol) {
    auto g = [&f](double psi) {
        double c = std::cos(psi);
        double s = std::tan(psi);
        return f(s) / (c * c);
    };
    return integrate_interval(g, -0.5 * kPi, 0.5 * kPi, tol);
}

QuadResult integrate_circle_pml(const std::function<double(double)>& f, const HalfPlanePoint& x,
                                double tol) {
    BoundaryMeasure mu(x);
    auto g = [&f, &mu](double theta) { return f(theta) * mu.density(theta); };
    return integrate_interval(g, 0.0, kPi, tol);
}

McResult mc_integrate(const std::function<double(double)>& f, const HalfPlanePoint& x,
                      const McConfig& cfg, int workers) {
    if (cfg.samples < 2) {
        throw std::invalid_argument("mc_integrate: needs at least 2 samples");
    }
    if (cfg.generator_id != "splitmix64") {
        throw std::invalid_argument("mc_integrate: unknown generator_id '" + cfg.generator_id +
                                    "'");
    }

    // Monotone inverse-CDF table for the cone density of x: cumulative
    // single-panel GK15 integrals over a uniform theta grid.
    constexpr int kTableSize = 2048;
    BoundaryMeasure mu(x);
    std::vector<double> cdf(kTableSize + 1, 0.0);
    {
        CompensatedSum acc;
        auto dens = [&mu](double theta) { return mu.density(theta); };
        for (int k = 0; k < kTableSize; ++k) {
            double lo = kPi * static_cast<double>(k) / kTableSize;
            double hi = kPi * static_cast<double>(k + 1) / kTableSize;
            acc.add(gk15(dens, lo, hi).k15);
            cdf[k + 1] = acc.value();
        }
        double total = cdf[kTableSize];
        for (double& v : cdf) {
            v /= total;
        }
    }

    auto sample_theta = [&cdf](double u) {
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        int k = static_cast<int>(it - cdf.begin()) - 1;
        k = std::clamp(k, 0, kTableSize - 1);
        double frac = (u - cdf[k]) / (cdf[k + 1] - cdf[k]);
        return kPi * (static_cast<double>(k) + frac) / kTableSize;
    };

    // Fixed-size blocks with per-block compensated sums; the final reduction
    // runs in block order, so the worker count never changes the result.
    constexpr std::int64_t kBlock = 4096;
    const std::int64_t n = cfg.samples;
    const std::int64_t blocks = (n + kBlock - 1) / kBlock;
    std::vector<double> block_sum(static_cast<std::size_t>(blocks));
    std::vector<double> block_sumsq(static_cast<std::size_t>(blocks));

    auto run_block = [&](std::int64_t blk) {
        std::int64_t first = blk * kBlock;
        std::int64_t last = std::min(first + kBlock, n);
        CompensatedSum s, ss;
        for (std::int64_t i = first; i < last; ++i) {
            double u = uniform01_at(cfg.seed, static_cast<std::uint64_t>(i));
            double v = f(sample_theta(u));
            s.add(v);
            ss.add(v * v);
        }
        block_sum[static_cast<std::size_t>(blk)] = s.value();
        block_sumsq[static_cast<std::size_t>(blk)] = ss.value();
    };

    int nworkers = std::min<std::int64_t>(resolve_workers(workers), blocks);
    if (nworkers <= 1) {
        for (std::int64_t blk = 0; blk < blocks; ++blk) {
            run_block(blk);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int wkr = 0; wkr < nworkers; ++wkr) {
            pool.emplace_back([&, wkr]() {
                for (std::int64_t blk = wkr; blk < blocks; blk += nworkers) {
                    run_block(blk);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    CompensatedSum s, ss;
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
        s.add(block_sum[static_cast<std::size_t>(blk)]);
        ss.add(block_sumsq[static_cast<std::size_t>(blk)]);
    }
    double nd = static_cast<double>(n);
    double mean = s.value() / nd;
    double var = std::max(0.0, (ss.value() / nd - mean * mean) * nd / (nd - 1.0));
    return {mean, std::sqrt(var / nd)};
}

}  // namespace teich
