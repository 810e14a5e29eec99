// qwsearch: quantum walk search on the complete graph with potential barriers.
//
// Subcommands:
//   discrete    success probability vs step count for the coined walk
//   continuous  success probability vs time for the vertex-space walk
//   spectrum    analytic eigensystem and closed-form predictions
//   sweep       peak table across sizes for a barrier scaling family
//   verify      self-check suite (analytics vs simulation vs brute force)
//
// Exit codes: 0 success, 1 failed verification, 2 invalid flags or
// parameters, 3 oracle size cap exceeded, 4 integration accuracy failure.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qws/analysis.hpp"
#include "qws/continuous_walk.hpp"
#include "qws/discrete_walk.hpp"
#include "qws/io.hpp"
#include "qws/verify.hpp"

namespace {

using nlohmann::json;

struct OutputOptions {
    std::string path;          // empty = stdout
    std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "Output file (default: stdout)");
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void emit(const OutputOptions& out, const std::function<void(std::ostream&)>& write_csv,
          const std::function<json()>& to_json) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.path.empty()) {
        file.open(out.path, std::ios::binary);  // binary keeps LF endings
        if (!file) throw std::invalid_argument("cannot open output file: " + out.path);
        os = &file;
    }
    if (out.format == "csv")
        write_csv(*os);
    else
        *os << to_json().dump(2) << "\n";
}

std::size_t default_discrete_steps(std::size_t n) {
    return static_cast<std::size_t>(
        std::ceil(3.0 * qws::kPi * std::sqrt(static_cast<double>(n)) / (2.0 * std::sqrt(2.0))));
}

double default_continuous_t_max(std::size_t n) {
    return 3.0 * qws::kPi * std::sqrt(static_cast<double>(n)) / 2.0;
}

struct DiscreteFlags {
    std::size_t n = 0;
    double phi = 0.0;
    double c = 0.0;
    bool has_c = false;
    std::size_t steps = 0;
    std::size_t marked = 0;
    bool full = false;
    std::size_t oracle_cap = qws::kDiscreteOracleCap;
    OutputOptions out;

    qws::DiscreteParams params() const {
        qws::DiscreteParams p;
        p.n = n;
        p.phi = has_c ? c / std::sqrt(static_cast<double>(n)) : phi;
        p.marked = marked;
        return p;
    }
};

struct ContinuousFlags {
    std::size_t n = 0;
    double gamma_n = 1.0;
    double epsilon = 0.0;
    double t_max = 0.0;
    double dt = 0.1;
    std::size_t marked = 0;
    bool full = false;
    std::size_t oracle_cap = qws::kContinuousOracleCap;
    OutputOptions out;

    qws::ContinuousParams params() const {
        qws::ContinuousParams p;
        p.n = n;
        p.gamma_n = gamma_n;
        p.epsilon = epsilon;
        p.marked = marked;
        p.t_max = t_max > 0.0 ? t_max : default_continuous_t_max(n);
        p.dt = dt;
        return p;
    }
};

struct SpectrumFlags {
    std::string walk;
    std::size_t n = 0;
    double phi = 0.0;
    double c = 0.0;
    bool has_c = false;
    double gamma_n = 1.0;
    double epsilon = 0.0;
    OutputOptions out;
};

struct SweepFlags {
    std::string walk = "discrete";
    double family_a = 0.0;
    double family_b = 0.0;
    std::vector<std::size_t> sizes;
    std::string gamma_policy = "fixed";
    std::size_t steps = 0;
    double t_max = 0.0;
    double dt = 0.0;
    OutputOptions out;
};

struct VerifyFlags {
    std::size_t oracle_cap = 64;
    double tol_p = 0.02;
    double tol_t = 0.05;
    std::string report_path;
};

int run_discrete(const DiscreteFlags& f) {
    const qws::DiscreteParams p = f.params();
    const std::size_t steps = f.steps > 0 ? f.steps : default_discrete_steps(f.n);
    const qws::ProbabilitySeries series = f.full
                                              ? qws::simulate_full(p, steps, f.oracle_cap)
                                              : qws::simulate_reduced(p, steps);
    emit(f.out, [&](std::ostream& os) { qws::write_series_csv(os, series); },
         [&] { return qws::series_to_json(series); });
    return 0;
}

int run_continuous(const ContinuousFlags& f) {
    const qws::ContinuousParams p = f.params();
    qws::ProbabilitySeries series;
    if (f.full) {
        qws::IntegrateOptions opts;
        opts.oracle_cap = f.oracle_cap;
        series = qws::integrate_full_c(p, opts);
    } else {
        series = qws::success_series_c(p);
    }
    emit(f.out, [&](std::ostream& os) { qws::write_series_csv(os, series); },
         [&] { return qws::series_to_json(series); });
    return 0;
}

int run_spectrum(const SpectrumFlags& f) {
    if (f.walk == "discrete") {
        qws::DiscreteParams p;
        p.n = f.n;
        p.phi = f.has_c ? f.c / std::sqrt(static_cast<double>(f.n)) : f.phi;
        const qws::SpectrumD s = qws::spectrum(p);
        emit(f.out, [&](std::ostream& os) { qws::write_discrete_spectrum_csv(os, p, s); },
             [&] { return qws::discrete_spectrum_to_json(p, s); });
    } else {
        qws::ContinuousParams p;
        p.n = f.n;
        p.gamma_n = f.gamma_n;
        p.epsilon = f.epsilon;
        p.t_max = 1.0;  // unused by the spectrum, but must validate
        const qws::SpectrumC s = qws::spectrum_c(p);
        emit(f.out, [&](std::ostream& os) { qws::write_continuous_spectrum_csv(os, p, s); },
             [&] { return qws::continuous_spectrum_to_json(p, s); });
    }
    return 0;
}

int run_sweep(const SweepFlags& f) {
    const qws::ScalingFamily family{f.family_a, f.family_b};
    std::vector<qws::SweepRow> rows;
    json params{{"walk", f.walk},
                {"family_a", f.family_a},
                {"family_b", f.family_b},
                {"sizes", f.sizes}};
    if (f.walk == "discrete") {
        qws::DiscreteSweepOptions opts;
        opts.steps_override = f.steps;
        rows = qws::sweep_discrete(family, f.sizes, opts);
    } else {
        qws::ContinuousSweepOptions opts;
        opts.policy = f.gamma_policy == "compensated" ? qws::GammaPolicy::Compensated
                                                      : qws::GammaPolicy::FixedAtOne;
        opts.t_max_override = f.t_max;
        opts.dt_override = f.dt;
        rows = qws::sweep_continuous(family, f.sizes, opts);
        params["gamma_policy"] = f.gamma_policy;
    }
    emit(f.out, [&](std::ostream& os) { qws::write_sweep_csv(os, rows); },
         [&] { return qws::sweep_to_json(rows, params); });
    return 0;
}

int run_verify(const VerifyFlags& f) {
    qws::VerifyOptions opts;
    opts.oracle_cap = f.oracle_cap;
    opts.tol_p = f.tol_p;
    opts.tol_t_rel = f.tol_t;

    const auto results = qws::run_verification(opts);
    std::size_t failures = 0;
    json checks = json::array();
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        if (!r.pass) ++failures;
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    if (failures == 0) {
        std::cout << "all checks passed\n";
    } else {
        std::cout << "failed checks:";
        for (const auto& r : results)
            if (!r.pass) std::cout << " " << r.name;
        std::cout << "\n";
    }

    if (!f.report_path.empty()) {
        json report{{"checks", checks},
                    {"passed", results.size() - failures},
                    {"failed", failures}};
        std::ofstream file(f.report_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + f.report_path);
        file << report.dump(2) << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum walk search on the complete graph with potential barriers"};
    app.require_subcommand(1);

    DiscreteFlags dflags;
    auto* discrete = app.add_subcommand("discrete", "Coined walk success probability vs steps");
    discrete->add_option("--n", dflags.n, "Number of vertices (>= 3)")->required();
    auto* phi_opt = discrete->add_option("--phi", dflags.phi, "Hop failure angle in [0, pi/2)");
    auto* c_opt = discrete->add_option("--c", dflags.c, "Barrier coefficient; sets phi = c/sqrt(N)");
    phi_opt->excludes(c_opt);
    c_opt->excludes(phi_opt);
    discrete->add_option("--steps", dflags.steps,
                         "Walk steps (default: ceil(3 pi sqrt(N) / (2 sqrt(2))))");
    discrete->add_option("--marked", dflags.marked, "Marked vertex index")->capture_default_str();
    discrete->add_flag("--full", dflags.full, "Use the full-Hilbert-space brute-force path");
    discrete->add_option("--oracle-cap", dflags.oracle_cap, "Max N for the brute-force path")
        ->capture_default_str();
    add_output_flags(discrete, dflags.out);

    ContinuousFlags cflags;
    auto* continuous =
        app.add_subcommand("continuous", "Vertex-space walk success probability vs time");
    continuous->add_option("--n", cflags.n, "Number of vertices (>= 2)")->required();
    continuous->add_option("--gamma-n", cflags.gamma_n, "Jumping rate as the product gamma*N")
        ->capture_default_str();
    continuous->add_option("--epsilon", cflags.epsilon, "Barrier strength in [0, 1)")
        ->capture_default_str();
    continuous->add_option("--t-max", cflags.t_max,
                           "Sampling horizon (default: 3 pi sqrt(N) / 2)");
    continuous->add_option("--dt", cflags.dt, "Sample interval")->capture_default_str();
    continuous->add_option("--marked", cflags.marked, "Marked vertex index")->capture_default_str();
    continuous->add_flag("--full", cflags.full, "Integrate the full N-dimensional system (RK4)");
    continuous->add_option("--oracle-cap", cflags.oracle_cap, "Max N for the brute-force path")
        ->capture_default_str();
    add_output_flags(continuous, cflags.out);

    SpectrumFlags sflags;
    auto* spect = app.add_subcommand("spectrum", "Analytic eigensystem and predictions");
    spect->add_option("--walk", sflags.walk, "Walk family")
        ->check(CLI::IsMember({"discrete", "continuous"}))
        ->required();
    spect->add_option("--n", sflags.n, "Number of vertices")->required();
    auto* sphi = spect->add_option("--phi", sflags.phi, "Hop failure angle (discrete)");
    auto* sc = spect->add_option("--c", sflags.c, "Barrier coefficient (discrete)");
    sphi->excludes(sc);
    sc->excludes(sphi);
    spect->add_option("--gamma-n", sflags.gamma_n, "gamma*N (continuous)")->capture_default_str();
    spect->add_option("--epsilon", sflags.epsilon, "Barrier strength (continuous)")
        ->capture_default_str();
    add_output_flags(spect, sflags.out);

    SweepFlags wflags;
    auto* sweep = app.add_subcommand("sweep", "Peak table across sizes for a scaling family");
    sweep->add_option("--walk", wflags.walk, "Walk family")
        ->check(CLI::IsMember({"discrete", "continuous"}))
        ->capture_default_str();
    sweep->add_option("--family-a", wflags.family_a, "Scaling amplitude a in a*N^b")->required();
    sweep->add_option("--family-b", wflags.family_b, "Scaling exponent b in a*N^b")->required();
    sweep->add_option("--sizes", wflags.sizes, "Comma-separated vertex counts")
        ->required()
        ->delimiter(',');
    sweep->add_option("--gamma-policy", wflags.gamma_policy,
                      "Continuous gamma*N choice: fixed (at 1) or compensated (1/(1-eps))")
        ->check(CLI::IsMember({"fixed", "compensated"}))
        ->capture_default_str();
    sweep->add_option("--steps", wflags.steps, "Discrete step budget override");
    sweep->add_option("--t-max", wflags.t_max, "Continuous horizon override");
    sweep->add_option("--dt", wflags.dt, "Continuous sample interval override");
    add_output_flags(sweep, wflags.out);

    VerifyFlags vflags;
    auto* verify = app.add_subcommand("verify", "Run the self-check suite");
    verify->add_option("--oracle-cap", vflags.oracle_cap, "Max N for brute-force cross-checks")
        ->capture_default_str();
    verify->add_option("--tol-p", vflags.tol_p, "Peak probability tolerance")
        ->capture_default_str();
    verify->add_option("--tol-t", vflags.tol_t, "Relative peak time tolerance")
        ->capture_default_str();
    verify->add_option("--out", vflags.report_path, "Write a JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    dflags.has_c = c_opt->count() > 0;
    sflags.has_c = sc->count() > 0;

    try {
        if (app.got_subcommand(discrete)) return run_discrete(dflags);
        if (app.got_subcommand(continuous)) return run_continuous(cflags);
        if (app.got_subcommand(spect)) return run_spectrum(sflags);
        if (app.got_subcommand(sweep)) return run_sweep(wflags);
        if (app.got_subcommand(verify)) return run_verify(vflags);
    } catch (const qws::OracleSizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qws::IntegrationAccuracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
