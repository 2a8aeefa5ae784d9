// chirpaf - command-line front end: ambiguity-function grids, spatial
// spectra, band limits, aliasing loci and the validation suite.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chirpaf/ambiguity.hpp"
#include "chirpaf/circular.hpp"
#include "chirpaf/io.hpp"
#include "chirpaf/scenario.hpp"
#include "chirpaf/spectrum.hpp"
#include "chirpaf/ula.hpp"
#include "chirpaf/validate.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

using namespace chirpaf;

struct GlobalOpts {
    std::string scenario_path;
    std::string out_prefix = "chirpaf_out";
    std::uint64_t seed = 0;
    int threads = 0;
    std::string format = "csv";  // csv | f32 | both
    std::string nodes = "midpoint";
};

int resolve_threads(int requested) {
    if (const char* env = std::getenv("CHIRP_AF_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return requested;
}

NodePlacement placement_of(const GlobalOpts& g) {
    if (g.nodes == "midpoint") return NodePlacement::midpoint;
    if (g.nodes == "endpoint") return NodePlacement::endpoint;
    throw CLI::ValidationError("--nodes must be midpoint or endpoint");
}

RunManifest start_manifest(const std::string& command, const std::vector<std::string>& args,
                           const Scenario& s, const GlobalOpts& g) {
    RunManifest m;
    m.tool_version = kVersion;
    m.command = command;
    m.arguments = args;
    m.scenario_hash = scenario_hash(s);
    m.seed = g.seed;
    m.threads = g.threads;
    return m;
}

bool parse_axis(const std::string& text, AxisSpec& spec) {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3) return false;
    spec = {lo, hi, count};
    return spec.count >= 1;
}

int cmd_af_grid(const GlobalOpts& g, const std::string& axes_kind, const std::string& axis0,
                const std::string& axis1, std::optional<int> discrete_n, bool continuous,
                const std::vector<std::string>& raw_args) {
    const auto t0 = std::chrono::steady_clock::now();
    const Scenario s = load_scenario(g.scenario_path);

    FieldAxes axes;
    axes.kind = axes_kind == "polar" ? FieldAxes::Kind::polar : FieldAxes::Kind::cartesian;
    if (!parse_axis(axis0, axes.axis0) || !parse_axis(axis1, axes.axis1))
        throw CLI::ValidationError("axis spec must be lo:hi:count");

    std::optional<SamplingGrid> grid;
    if (!continuous) {
        Scenario sn = s;
        if (discrete_n) sn.antenna_count = *discrete_n;
        grid = sn.grid(placement_of(g));
    }

    const ComplexField field = af_field(s, grid ? &*grid : nullptr, axes);
    if (field.nan_count > 0)
        std::cerr << "warning: " << field.nan_count
                  << " grid nodes hit the array curve and were marked NaN\n";

    RunManifest m = start_manifest("af-grid", raw_args, s, g);
    if (g.format == "csv" || g.format == "both") {
        write_field_csv(field, g.out_prefix + ".csv");
        m.outputs.push_back(g.out_prefix + ".csv");
    }
    if (g.format == "f32" || g.format == "both") {
        write_field_f32(field, g.out_prefix + ".f32");
        m.outputs.push_back(g.out_prefix + ".f32");
    }
    write_field_meta(field, g.out_prefix + ".meta.json");
    m.outputs.push_back(g.out_prefix + ".meta.json");
    m.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    m.write(g.out_prefix + ".manifest.json");
    return field.nan_count == static_cast<std::int64_t>(field.values.size()) ? 3 : 0;
}

int cmd_spectrum(const GlobalOpts& g, const std::vector<double>& tentative_xy, double k_max,
                 int m_nodes, double eps_rel, const std::vector<std::string>& raw_args) {
    const auto t0 = std::chrono::steady_clock::now();
    const Scenario s = load_scenario(g.scenario_path);
    const Position tentative{tentative_xy[0], tentative_xy[1]};

    const double km = k_max > 0.0 ? k_max : default_k_max(s, tentative);
    const SpectrumGrid grid = spectrum_numeric(s, tentative, km, m_nodes);
    const BandLimit chirp_k = band_limit_chirp(s, tentative);

    nlohmann::json meta;
    meta["scenario"] = nlohmann::json::parse(scenario_to_json(s));
    meta["tentative"] = {tentative.x, tentative.y};
    meta["k_max"] = km;
    meta["nodes"] = m_nodes;
    meta["eps_rel"] = eps_rel;
    meta["K_chirp"] = chirp_k.k;
    try {
        const BandLimit measured = band_limit_measured(grid, eps_rel);
        meta["K_measured"] = measured.k;
        if (s.antenna_count) {
            const double delta = s.curve.domain_length() / *s.antenna_count;
            meta["no_alias"] = no_alias(delta, measured);
            meta["delta"] = delta;
        }
    } catch (const std::range_error& e) {
        meta["K_measured"] = nullptr;
        meta["error"] = e.what();
    }

    RunManifest man = start_manifest("spectrum", raw_args, s, g);
    write_spectrum_csv(grid, g.out_prefix + ".csv");
    man.outputs.push_back(g.out_prefix + ".csv");
    std::ofstream meta_out(g.out_prefix + ".meta.json");
    meta_out << meta.dump(2) << '\n';
    man.outputs.push_back(g.out_prefix + ".meta.json");
    man.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    man.write(g.out_prefix + ".manifest.json");
    return 0;
}

int cmd_bandlimit(const GlobalOpts& g, const std::vector<double>& tentative_xy, double eps_rel,
                  bool measure, int m_nodes) {
    const Scenario s = load_scenario(g.scenario_path);
    const Position tentative{tentative_xy[0], tentative_xy[1]};
    const BandLimit chirp_k = band_limit_chirp(s, tentative);

    nlohmann::json out;
    out["K_chirp"] = chirp_k.k;
    if (s.antenna_count) {
        const double delta = s.curve.domain_length() / *s.antenna_count;
        out["delta"] = delta;
        out["no_alias_chirp"] = no_alias(delta, chirp_k);
    }
    if (measure) {
        const SpectrumGrid grid =
            spectrum_numeric(s, tentative, default_k_max(s, tentative), m_nodes);
        try {
            const BandLimit measured = band_limit_measured(grid, eps_rel);
            out["K_measured"] = measured.k;
            out["eps_rel"] = eps_rel;
        } catch (const std::range_error& e) {
            out["K_measured"] = nullptr;
            out["error"] = e.what();
        }
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_alias_locus(const GlobalOpts& g, int orders, int angle_count,
                    const std::vector<std::string>& raw_args) {
    const auto t0 = std::chrono::steady_clock::now();
    const Scenario s = load_scenario(g.scenario_path);
    if (!s.antenna_count) throw std::runtime_error("alias-locus needs N in the scenario");
    const int n = *s.antenna_count;
    const double lambda = kTau / s.k.k;

    std::ofstream out(g.out_prefix + ".csv");
    if (!out) throw std::runtime_error("cannot open " + g.out_prefix + ".csv");
    out << "kind,order,theta,R,x,y\n";

    if (s.curve.kind() == ArrayCurve::Kind::circular_arc) {
        const double delta = s.curve.domain_length() / n;
        for (int m = 1; m <= orders; ++m) {
            for (int i = 0; i < angle_count; ++i) {
                const double theta = -kPi + kTau * i / angle_count;
                const double radius =
                    m * alias_radius(delta, theta, s.curve.half_angle(), lambda);
                if (!std::isfinite(radius)) continue;
                const Position p{s.source.x + radius * std::cos(theta),
                                 s.source.y + radius * std::sin(theta)};
                out << "ca_ring," << m << ',' << format_full(theta) << ','
                    << format_full(radius) << ',' << format_full(p.x) << ','
                    << format_full(p.y) << '\n';
            }
        }
    } else {
        const double length = s.curve.length();
        const PolarPosition src = to_polar(s.source);
        for (int m = 1; m <= orders; ++m) {
            for (int i = 0; i < angle_count; ++i) {
                const double theta = kPi * (i + 0.5) / angle_count;
                // folding boundary: L/2 |Delta| + |Omega| = m lambda N / L
                const double budget =
                    m * lambda * n / length - std::abs(std::cos(src.angle) - std::cos(theta));
                if (budget < 0.0) continue;
                const double dinv = 2.0 * budget / length;
                for (const double sign : {-1.0, 1.0}) {
                    const double inv = 1.0 / src.radius + sign * dinv;
                    if (inv <= 0.0) continue;
                    const double radius = 1.0 / inv;
                    out << (sign < 0 ? "ula_outer," : "ula_inner,") << m << ','
                        << format_full(theta) << ',' << format_full(radius) << ','
                        << format_full(radius * std::cos(theta)) << ','
                        << format_full(radius * std::sin(theta)) << '\n';
                }
            }
        }
    }
    out.close();

    RunManifest man = start_manifest("alias-locus", raw_args, s, g);
    man.outputs.push_back(g.out_prefix + ".csv");
    man.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    man.write(g.out_prefix + ".manifest.json");
    return 0;
}

int cmd_ca_analyze(const GlobalOpts& g, double sep_angle, double ray_r0, double ray_r1,
                   int ray_count, double window) {
    const Scenario s = load_scenario(g.scenario_path);
    if (s.curve.kind() != ArrayCurve::Kind::circular_arc)
        throw std::runtime_error("ca-analyze needs a circular scenario");
    const double psi = s.curve.half_angle();
    const double radius = s.curve.radius();
    const double lambda = kTau / s.k.k;

    nlohmann::json out;
    out["Omega"] = visual_aperture(sep_angle, psi);
    if (s.antenna_count) {
        const double delta = s.curve.domain_length() / *s.antenna_count;
        const double r_max = alias_radius(delta, sep_angle, psi, lambda);
        out["R_max"] = std::isfinite(r_max) ? nlohmann::json(r_max) : nlohmann::json(nullptr);
        if (std::isfinite(r_max)) {
            nlohmann::json mult = nlohmann::json::array();
            for (int m = 1; m * r_max <= window; ++m) mult.push_back(m * r_max);
            out["R_max_multiples_in_window"] = mult;
        }
    }

    nlohmann::json samples = nlohmann::json::array();
    for (int i = 0; i < ray_count; ++i) {
        const double rho = ray_r0 + (ray_r1 - ray_r0) * i / std::max(1, ray_count - 1);
        const SeriesEval cont = af_ca_series_continuous(rho, sep_angle, psi, radius, s.k);
        nlohmann::json entry;
        entry["R"] = rho;
        entry["K_ca"] = band_limit_ca(rho, sep_angle, psi, s.k).k;
        entry["af_series_re"] = cont.value.real();
        entry["af_series_im"] = cont.value.imag();
        entry["converged"] = cont.converged;
        if (s.antenna_count) {
            const SeriesEval disc =
                af_ca_series_discrete(rho, sep_angle, psi, *s.antenna_count, s.k);
            entry["af_series_discrete_re"] = disc.value.real();
            entry["af_series_discrete_im"] = disc.value.imag();
        }
        samples.push_back(entry);
    }
    out["ray"] = samples;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_ula_analyze(const GlobalOpts& g, const std::vector<double>& tentative_xy) {
    const Scenario s = load_scenario(g.scenario_path);
    if (s.curve.kind() != ArrayCurve::Kind::line_segment)
        throw std::runtime_error("ula-analyze needs a ula scenario");
    const double length = s.curve.length();
    const double lambda = kTau / s.k.k;
    const Position tentative{tentative_xy[0], tentative_xy[1]};
    const UlaMismatch m = mismatch(to_polar(s.source), to_polar(tentative));

    nlohmann::json out;
    out["Delta"] = m.delta;
    out["Omega"] = m.omega;
    out["K_ula"] = band_limit_ula(m, length, s.k).k;
    if (s.antenna_count) {
        out["aliasing"] = ula_aliasing(m, length, *s.antenna_count, s.k);
        const auto [lo, hi] = radial_alias_bounds(to_polar(s.source).radius, *s.antenna_count,
                                                  length, lambda);
        out["radial_bounds"] = nlohmann::json::array();
        out["radial_bounds"].push_back(lo);
        out["radial_bounds"].push_back(std::isfinite(hi) ? nlohmann::json(hi)
                                                         : nlohmann::json(nullptr));
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_validate(const GlobalOpts& g, bool quick, const std::string& report_path) {
    AcceptanceConfig cfg;
    cfg.quick = quick;
    cfg.seed = g.seed;
    const auto results = run_acceptance(cfg);

    bool all = true;
    for (const auto& r : results) {
        if (r.skipped) {
            std::cout << "criterion " << r.id << " [SKIP] " << r.name << "\n";
            continue;
        }
        std::cout << "criterion " << r.id << (r.passed ? " [PASS] " : " [FAIL] ") << r.name
                  << "  (" << r.seconds << " s)\n";
        for (const auto& c : r.checks)
            std::cout << "    " << (c.pass ? "ok   " : "FAIL ") << c.what << ": " << c.measured
                      << " " << c.op << " " << c.required << "\n";
        all = all && r.passed;
    }
    const std::string report = acceptance_report_json(results);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << report << '\n';
    } else {
        std::cout << report << '\n';
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near-field array ambiguity and spatial-aliasing toolkit"};
    app.set_version_flag("--version", kVersion);

    GlobalOpts g;
    app.add_option("--scenario", g.scenario_path, "scenario JSON file")->expected(1);
    app.add_option("--out", g.out_prefix, "output file prefix");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--threads", g.threads, "worker threads (0 = library default)");
    app.add_option("--format", g.format, "csv | f32 | both")
        ->check(CLI::IsMember({"csv", "f32", "both"}));
    app.add_option("--nodes", g.nodes, "antenna node placement: midpoint | endpoint")
        ->check(CLI::IsMember({"midpoint", "endpoint"}));

    // af-grid
    auto* grid_cmd = app.add_subcommand("af-grid", "ambiguity field over a position grid");
    std::string axes_kind = "cartesian", axis0, axis1;
    std::optional<int> discrete_n;
    bool continuous = false;
    grid_cmd->add_option("--axes", axes_kind, "cartesian | polar")
        ->check(CLI::IsMember({"cartesian", "polar"}));
    grid_cmd->add_option("--axis0", axis0, "first axis as lo:hi:count (x or R)")->required();
    grid_cmd->add_option("--axis1", axis1, "second axis as lo:hi:count (y or theta)")->required();
    grid_cmd->add_option("--discrete", discrete_n, "antenna count (defaults to scenario N)");
    grid_cmd->add_flag("--continuous", continuous, "evaluate the continuous-array field");

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "spatial spectrum G(k_tau)");
    std::vector<double> tentative_xy{0.0, 0.0};
    double k_max = 0.0, eps_rel = 0.01;
    int m_nodes = 1025;
    spec_cmd->add_option("--tentative", tentative_xy, "tentative position x,y")
        ->expected(2)
        ->required();
    spec_cmd->add_option("--k-max", k_max, "axis half-width (0 = auto)");
    spec_cmd->add_option("--nodes-k", m_nodes, "odd k_tau node count");
    spec_cmd->add_option("--eps", eps_rel, "relative band-limit threshold");

    // bandlimit
    auto* band_cmd = app.add_subcommand("bandlimit", "chirp-predicted (and measured) band limit");
    std::vector<double> band_xy{0.0, 0.0};
    double band_eps = 0.01;
    bool band_measure = false;
    int band_nodes = 1025;
    band_cmd->add_option("--tentative", band_xy, "tentative position x,y")
        ->expected(2)
        ->required();
    band_cmd->add_flag("--measured", band_measure, "also measure from the numeric spectrum");
    band_cmd->add_option("--eps", band_eps, "relative threshold for the measurement");
    band_cmd->add_option("--nodes-k", band_nodes, "odd k_tau node count for the measurement");

    // alias-locus
    auto* locus_cmd = app.add_subcommand("alias-locus", "predicted aliasing fronts as polylines");
    int locus_orders = 2, locus_angles = 360;
    locus_cmd->add_option("--orders", locus_orders, "number of alias orders");
    locus_cmd->add_option("--angles", locus_angles, "polyline angular resolution");

    // ca-analyze
    auto* ca_cmd = app.add_subcommand("ca-analyze", "circular-array closed forms along a ray");
    double ca_theta = 0.0, ca_r0 = 0.0, ca_r1 = 50.0, ca_window = 100.0;
    int ca_count = 51;
    ca_cmd->add_option("--theta", ca_theta, "separation angle theta_ss [rad]");
    ca_cmd->add_option("--ray-r0", ca_r0, "ray start radius");
    ca_cmd->add_option("--ray-r1", ca_r1, "ray end radius");
    ca_cmd->add_option("--ray-count", ca_count, "samples along the ray");
    ca_cmd->add_option("--window", ca_window, "report alias radii up to this distance");

    // ula-analyze
    auto* ula_cmd = app.add_subcommand("ula-analyze", "ULA mismatch, band limit and bounds");
    std::vector<double> ula_xy{0.0, 0.0};
    ula_cmd->add_option("--tentative", ula_xy, "tentative position x,y")
        ->expected(2)
        ->required();

    // validate
    auto* val_cmd = app.add_subcommand("validate", "run the acceptance suite");
    bool quick = false;
    std::string report_path;
    val_cmd->add_flag("--quick", quick, "fast subset (criteria 1, 5, 8)");
    val_cmd->add_option("--report", report_path, "write the JSON report here");

    app.require_subcommand(1);

    std::vector<std::string> raw_args(argv + 1, argv + argc);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const int threads = resolve_threads(g.threads);
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    g.threads = threads;

    try {
        if (grid_cmd->parsed())
            return cmd_af_grid(g, axes_kind, axis0, axis1, discrete_n, continuous, raw_args);
        if (spec_cmd->parsed())
            return cmd_spectrum(g, tentative_xy, k_max, m_nodes, eps_rel, raw_args);
        if (band_cmd->parsed())
            return cmd_bandlimit(g, band_xy, band_eps, band_measure, band_nodes);
        if (locus_cmd->parsed()) return cmd_alias_locus(g, locus_orders, locus_angles, raw_args);
        if (ca_cmd->parsed())
            return cmd_ca_analyze(g, ca_theta, ca_r0, ca_r1, ca_count, ca_window);
        if (ula_cmd->parsed()) return cmd_ula_analyze(g, ula_xy);
        if (val_cmd->parsed()) return cmd_validate(g, quick, report_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const chirpaf::convergence_error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
