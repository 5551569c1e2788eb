// Command-line front end: theorem verification suites and plot-ready tables
// for the once-punctured-torus model. See README for the full grammar.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "teich/format.hpp"
#include "teich/measures.hpp"
#include "teich/potential.hpp"
#include "teich/quadrature.hpp"
#include "teich/rng.hpp"
#include "teich/verify.hpp"

namespace {

using teich::fmt_double;
using teich::HalfPlanePoint;
using teich::Lamination;

HalfPlanePoint parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("point", "expected 'a,b' decimals: " + text);
    }
    try {
        double a = std::stod(text.substr(0, comma));
        double b = std::stod(text.substr(comma + 1));
        return HalfPlanePoint(a, b);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("point", std::string("bad point '") + text + "': " + e.what());
    }
}

Lamination parse_lamination(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("lamination", "expected 'p,q' decimals: " + text);
    }
    try {
        double p = std::stod(text.substr(0, comma));
        double q = std::stod(text.substr(comma + 1));
        return Lamination(p, q);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("lamination",
                                   std::string("bad lamination '") + text + "': " + e.what());
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << content;
}

std::string reports_to_json(const std::vector<teich::VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : reports) {
        arr.push_back(nlohmann::json::parse(rep.to_json(false)));
    }
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<teich::VerificationReport>& reports) {
    std::string out = "check_id,label,value\n";
    for (const auto& rep : reports) {
        std::string table = rep.to_csv();
        out += table.substr(table.find('\n') + 1);  // drop per-report header
    }
    return out;
}

// Optional JSON config mirroring the long flags; explicit flags win.
class ConfigFile {
public:
    static ConfigFile load(const std::string& path, const std::set<std::string>& known) {
        ConfigFile cfg;
        if (path.empty()) {
            return cfg;
        }
        std::ifstream in(path);
        if (!in) {
            throw CLI::ValidationError("--config", "cannot read config file: " + path);
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw CLI::ValidationError("--config", std::string("bad JSON: ") + e.what());
        }
        if (!j.is_object()) {
            throw CLI::ValidationError("--config", "config must be a JSON object");
        }
        for (const auto& [key, value] : j.items()) {
            if (known.find(key) == known.end()) {
                throw CLI::ValidationError("--config", "unknown config key: " + key);
            }
            cfg.values_[key] = value;
        }
        return cfg;
    }

    template <typename T>
    void apply(const CLI::Option* opt, const std::string& key, T& var) const {
        if (opt != nullptr && opt->count() > 0) {
            return;
        }
        auto it = values_.find(key);
        if (it == values_.end()) {
            return;
        }
        try {
            if constexpr (std::is_same_v<T, std::string>) {
                var = it->second.is_string() ? it->second.get<std::string>() : it->second.dump();
            } else {
                var = it->second.get<T>();
            }
        } catch (const std::exception& e) {
            throw CLI::ValidationError("--config",
                                       "bad value for key '" + key + "': " + e.what());
        }
    }

private:
    std::map<std::string, nlohmann::json> values_;
};

int run_verify(const std::string& which, const HalfPlanePoint& basepoint, double tol,
               bool tol_given, std::uint64_t seed, const std::string& output,
               const std::string& format) {
    using namespace teich;
    const std::vector<TestFunction> family = builtin_families();
    std::vector<VerificationReport> reports;

    auto want = [&which](const char* name) { return which == "all" || which == name; };
    if (which != "all" && which != "poisson" && which != "harmonic-measure" &&
        which != "basepoint" && which != "disintegration" && which != "mvt" &&
        which != "riesz" && which != "gradient" && which != "rays") {
        std::cerr << "unknown check: " << which << "\n";
        return 2;
    }
    if (tol_given && which == "all") {
        std::cerr << "--tol applies to a single named check, not 'all'\n";
        return 2;
    }
    auto tol_or = [&](double dflt) { return tol_given ? tol : dflt; };

    if (want("poisson")) {
        reports.push_back(check_poisson_formula(poisson_basepoint_grid(), family,
                                                tol_or(tolerances::kPoisson)));
        reports.push_back(check_poisson_negative_control(poisson_basepoint_grid(), family));
    }
    if (want("harmonic-measure")) {
        reports.push_back(check_harmonic_measure_identity(random_points(20, seed),
                                                          chebyshev_slope_grid(),
                                                          tol_or(tolerances::kHarmonicMeasure)));
    }
    if (want("basepoint")) {
        reports.push_back(check_change_of_basepoint(100, seed, tol_or(tolerances::kBasepoint)));
    }
    if (want("disintegration")) {
        reports.push_back(
            check_disintegration(random_points(10, seed), tol_or(tolerances::kDisintegration)));
    }
    if (want("mvt")) {
        SplitMix64 rng(seed + 7);
        std::vector<double> radii;
        for (int i = 0; i < 5; ++i) {
            radii.push_back(rng.next_in(0.1, 2.5));
        }
        reports.push_back(
            check_mvt(random_points(10, seed), radii, family, tol_or(tolerances::kMvt)));
    }
    if (want("riesz")) {
        reports.push_back(check_riesz(50, seed, tol_or(tolerances::kRiesz)));
    }
    if (want("gradient")) {
        reports.push_back(check_gradient(20, seed, tol_or(tolerances::kGradientRel)));
    }
    if (want("rays")) {
        reports.push_back(check_rays(100, seed, tol_or(tolerances::kRays)));
    }
    if (which == "all") {
        reports.push_back(check_radial_isometry(family, basepoint, tolerances::kIsometry));
        reports.push_back(check_mc_engine(seed, tolerances::kMcSlopeDeviation));
    }

    bool all_passed = true;
    for (const auto& rep : reports) {
        all_passed = all_passed && rep.passed;
        std::string metric = rep.computed.empty() ? "" : rep.computed.back().first + "=" +
                                 fmt_double(rep.computed.back().second);
        std::cout << (rep.passed ? "PASS " : "FAIL ") << rep.check_id << ": " << metric
                  << " (tol " << fmt_double(rep.tolerance) << ")\n";
        std::cerr << "[time] " << rep.check_id << " " << rep.runtime_ms << " ms\n";
    }
    write_output(output, format == "csv" ? reports_to_csv(reports) : reports_to_json(reports));
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for the once-punctured-torus Teichmuller space: "
                 "Poisson integral, Thurston measure, rays and disks, mean value, and "
                 "Riesz-type inequalities, with verification suites."};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON config file mirroring the long flags (flags override)");

    // verify ------------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify",
        "Run a verification suite: poisson | harmonic-measure | basepoint | disintegration | "
        "mvt | riesz | gradient | rays | all. 'all' additionally runs the radial-isometry and "
        "mc-engine checks.");
    verify->fallthrough();
    std::string which;
    std::string v_basepoint = "0,1";
    double v_tol = 0.0;
    std::uint64_t v_seed = 42;
    std::string v_output = "teich-reports.json";
    std::string v_format = "json";
    verify->add_option("which", which, "which suite to run")->required();
    verify->add_option("--basepoint", v_basepoint, "basepoint 'a,b' (default 0,1)");
    auto* tol_opt = verify->add_option("--tol", v_tol, "tolerance override for a single check");
    verify->add_option("--seed", v_seed, "seed for randomized inputs (default 42)");
    verify->add_option("--output", v_output,
                       "report path, '-' for stdout (default teich-reports.json)");
    verify->add_option("--format", v_format, "report format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // kernel-table --------------------------------------------------------
    auto* ktab = app.add_subcommand("kernel-table",
                                    "Tabulate the extremal-length ratio kernel over PML angles");
    ktab->fallthrough();
    std::string k_x0 = "0,1", k_x = "0,2", k_output;
    int k_grid = 16;
    std::string k_format = "csv";
    ktab->add_option("--x0", k_x0, "kernel basepoint 'a,b'");
    ktab->add_option("--x", k_x, "evaluation point 'a,b'");
    ktab->add_option("--grid", k_grid, "number of angle rows")->check(CLI::PositiveNumber);
    ktab->add_option("--output", k_output, "output path (default stdout)");
    ktab->add_option("--format", k_format, "csv | json")->check(CLI::IsMember({"json", "csv"}));

    // measure-table -------------------------------------------------------
    auto* mtab = app.add_subcommand(
        "measure-table", "Tabulate the cone density and its boundary-line pushforward");
    mtab->fallthrough();
    std::string m_x = "0,1", m_output;
    int m_grid = 64;
    std::string m_format = "csv";
    mtab->add_option("--x", m_x, "basepoint 'a,b'");
    mtab->add_option("--grid", m_grid, "number of midpoint angle rows")
        ->check(CLI::PositiveNumber);
    mtab->add_option("--output", m_output, "output path (default stdout)");
    mtab->add_option("--format", m_format, "csv | json")->check(CLI::IsMember({"json", "csv"}));

    // ray-trace -----------------------------------------------------------
    auto* rtrace = app.add_subcommand("ray-trace", "Trace a Teichmuller geodesic ray");
    rtrace->fallthrough();
    std::string r_x = "0,1", r_lam = "1,0", r_output;
    double r_tmax = 3.0;
    int r_steps = 30;
    std::string r_format = "csv";
    rtrace->add_option("--x", r_x, "origin 'a,b'");
    rtrace->add_option("--lam", r_lam, "lamination 'p,q'");
    rtrace->add_option("--tmax", r_tmax, "final time")->check(CLI::PositiveNumber);
    rtrace->add_option("--steps", r_steps, "number of steps")->check(CLI::PositiveNumber);
    rtrace->add_option("--output", r_output, "output path (default stdout)");
    rtrace->add_option("--format", r_format, "csv | json")->check(CLI::IsMember({"json", "csv"}));

    // limit-trace ---------------------------------------------------------
    auto* ltrace = app.add_subcommand(
        "limit-trace", "Trace the ray values of a built-in function toward its radial limit");
    ltrace->fallthrough();
    std::string l_x = "0,1", l_lam = "1,0", l_fn = "Re(cayley)", l_output;
    double l_tol = 1e-9;
    std::string l_format = "csv";
    ltrace->add_option("--x", l_x, "origin 'a,b'");
    ltrace->add_option("--lam", l_lam, "lamination 'p,q'");
    ltrace->add_option("--fn", l_fn, "built-in function label (real-valued members)");
    ltrace->add_option("--tol", l_tol, "stabilization tolerance")->check(CLI::PositiveNumber);
    ltrace->add_option("--output", l_output, "output path (default stdout)");
    ltrace->add_option("--format", l_format, "csv | json")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);

        static const std::set<std::string> kKnownKeys = {
            "basepoint", "tol",  "seed",  "output", "format", "x0", "x",
            "grid",      "lam",  "tmax",  "steps",  "fn"};
        ConfigFile cfg = ConfigFile::load(config_path, kKnownKeys);

        if (verify->parsed()) {
            cfg.apply(verify->get_option("--basepoint"), "basepoint", v_basepoint);
            cfg.apply(tol_opt, "tol", v_tol);
            cfg.apply(verify->get_option("--seed"), "seed", v_seed);
            cfg.apply(verify->get_option("--output"), "output", v_output);
            cfg.apply(verify->get_option("--format"), "format", v_format);
            bool tol_given = tol_opt->count() > 0;
            if (!tol_given && v_tol > 0.0) {
                tol_given = true;  // came from the config file
            }
            return run_verify(which, parse_point(v_basepoint), v_tol, tol_given, v_seed,
                              v_output, v_format);
        }

        if (ktab->parsed()) {
            cfg.apply(ktab->get_option("--x0"), "x0", k_x0);
            cfg.apply(ktab->get_option("--x"), "x", k_x);
            cfg.apply(ktab->get_option("--grid"), "grid", k_grid);
            cfg.apply(ktab->get_option("--output"), "output", k_output);
            cfg.apply(ktab->get_option("--format"), "format", k_format);
            HalfPlanePoint x0 = parse_point(k_x0);
            HalfPlanePoint x = parse_point(k_x);
            if (k_format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (int k = 0; k < k_grid; ++k) {
                    double theta = teich::kPi * k / k_grid;
                    rows.push_back({{"theta", theta},
                                    {"endpoint", teich::endpoint_slope(theta)},
                                    {"kernel", teich::kernel_ratio(x0, x, theta)}});
                }
                write_output(k_output, rows.dump(2) + "\n");
            } else {
                std::string out = "theta,endpoint,kernel\n";
                for (int k = 0; k < k_grid; ++k) {
                    double theta = teich::kPi * k / k_grid;
                    out += fmt_double(theta) + "," + fmt_double(teich::endpoint_slope(theta)) +
                           "," + fmt_double(teich::kernel_ratio(x0, x, theta)) + "\n";
                }
                write_output(k_output, out);
            }
            return 0;
        }

        if (mtab->parsed()) {
            cfg.apply(mtab->get_option("--x"), "x", m_x);
            cfg.apply(mtab->get_option("--grid"), "grid", m_grid);
            cfg.apply(mtab->get_option("--output"), "output", m_output);
            cfg.apply(mtab->get_option("--format"), "format", m_format);
            HalfPlanePoint x = parse_point(m_x);
            teich::BoundaryMeasure mu(x);
            std::string out = "theta,density,endpoint,line_density\n";
            nlohmann::json rows = nlohmann::json::array();
            for (int k = 0; k < m_grid; ++k) {
                double theta = teich::kPi * (k + 0.5) / m_grid;
                double s = teich::endpoint_slope(theta);
                double line = teich::boundary_line_density(x, s);
                if (m_format == "json") {
                    rows.push_back({{"theta", theta},
                                    {"density", mu.density(theta)},
                                    {"endpoint", s},
                                    {"line_density", line}});
                } else {
                    out += fmt_double(theta) + "," + fmt_double(mu.density(theta)) + "," +
                           fmt_double(s) + "," + fmt_double(line) + "\n";
                }
            }
            write_output(m_output, m_format == "json" ? rows.dump(2) + "\n" : out);
            return 0;
        }

        if (rtrace->parsed()) {
            cfg.apply(rtrace->get_option("--x"), "x", r_x);
            cfg.apply(rtrace->get_option("--lam"), "lam", r_lam);
            cfg.apply(rtrace->get_option("--tmax"), "tmax", r_tmax);
            cfg.apply(rtrace->get_option("--steps"), "steps", r_steps);
            cfg.apply(rtrace->get_option("--output"), "output", r_output);
            cfg.apply(rtrace->get_option("--format"), "format", r_format);
            HalfPlanePoint x = parse_point(r_x);
            Lamination lam = parse_lamination(r_lam);
            teich::GeodesicRay ray(x, lam);
            std::string out = "t,a,b,ext,dist\n";
            nlohmann::json rows = nlohmann::json::array();
            for (int k = 0; k <= r_steps; ++k) {
                double t = r_tmax * k / r_steps;
                HalfPlanePoint y = ray.evaluate(t);
                double ext = teich::extremal_length(y, lam);
                double dist = teich::teich_distance(x, y);
                if (r_format == "json") {
                    rows.push_back(
                        {{"t", t}, {"a", y.a}, {"b", y.b}, {"ext", ext}, {"dist", dist}});
                } else {
                    out += fmt_double(t) + "," + fmt_double(y.a) + "," + fmt_double(y.b) + "," +
                           fmt_double(ext) + "," + fmt_double(dist) + "\n";
                }
            }
            write_output(r_output, r_format == "json" ? rows.dump(2) + "\n" : out);
            return 0;
        }

        if (ltrace->parsed()) {
            cfg.apply(ltrace->get_option("--x"), "x", l_x);
            cfg.apply(ltrace->get_option("--lam"), "lam", l_lam);
            cfg.apply(ltrace->get_option("--fn"), "fn", l_fn);
            cfg.apply(ltrace->get_option("--tol"), "tol", l_tol);
            cfg.apply(ltrace->get_option("--output"), "output", l_output);
            cfg.apply(ltrace->get_option("--format"), "format", l_format);
            HalfPlanePoint x = parse_point(l_x);
            Lamination lam = parse_lamination(l_lam);
            const teich::TestFunction* fn = nullptr;
            auto family = teich::builtin_families();
            for (const auto& f : family) {
                if (f.label() == l_fn && f.kind() != teich::FunctionKind::Holomorphic) {
                    fn = &f;
                    break;
                }
            }
            if (fn == nullptr) {
                std::cerr << "unknown or non-real function label: " << l_fn
                          << " (see README for the built-in labels)\n";
                return 2;
            }
            teich::GeodesicRay ray(x, lam);
            std::string out = "t,value\n";
            nlohmann::json rows = nlohmann::json::array();
            for (double t = 0.0; t <= 20.0; t = (t == 0.0) ? 0.5 : 1.5 * t) {
                double v = fn->value(ray.evaluate(t));
                if (l_format == "json") {
                    rows.push_back({{"t", t}, {"value", v}});
                } else {
                    out += fmt_double(t) + "," + fmt_double(v) + "\n";
                }
            }
            double lim = teich::radial_limit(*fn, lam, x, l_tol);
            if (l_format == "json") {
                rows.push_back({{"t", "limit"}, {"value", lim}});
                write_output(l_output, rows.dump(2) + "\n");
            } else {
                out += "limit," + fmt_double(lim) + "\n";
                write_output(l_output, out);
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
