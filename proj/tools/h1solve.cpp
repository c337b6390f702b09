// h1solve: spectra, wavefunction samples and verification suites for the
// singular oscillator and singular Coulomb systems on H1.
//
// Exit codes: 0 success, 1 model or verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "h1/h1.hpp"
#include "h1/io/output.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using h1::io::format_double;
using Params = std::map<std::string, std::string>;

h1::Branch parse_branch(const std::string& s) { return s == "minus" ? h1::Branch::minus : h1::Branch::plus; }

h1::Parity parse_parity(const std::string& s) {
    if (s == "even")
        return h1::Parity::even;
    if (s == "odd")
        return h1::Parity::odd;
    return h1::Parity::half_line;
}

h1::io::Format parse_format(const std::string& s) { return s == "json" ? h1::io::Format::json : h1::io::Format::csv; }

struct OscillatorFlags {
    double omega = 0.0;
    double radius = 0.0;
    double k = 0.0;
    std::string branch = "plus";

    void attach(CLI::App* app, bool required) {
        auto* o = app->add_option("--omega", omega, "angular frequency omega > 0");
        auto* r = app->add_option("--radius", radius, "curvature radius R > 0");
        auto* kk = app->add_option("--k", k, "singularity strength k > 0");
        if (required) {
            o->required();
            r->required();
            kk->required();
        }
        app->add_option("--branch", branch, "sign of k: plus|minus")->check(CLI::IsMember({"plus", "minus"}));
    }
    h1::oscillator::OscillatorModel model() const { return {omega, radius, k, parse_branch(branch)}; }
    Params echo(const h1::oscillator::OscillatorModel& m) const {
        return {{"omega", format_double(omega)}, {"radius", format_double(radius)}, {"k", format_double(k)},
                {"branch", branch}, {"k0", format_double(m.k0())}};
    }
};

struct CoulombFlags {
    double mu = 0.0;
    double radius = 0.0;
    double p = 0.0;
    std::string branch = "plus";

    void attach(CLI::App* app, bool required) {
        auto* m = app->add_option("--mu", mu, "Coulomb coupling mu > 0");
        auto* r = app->add_option("--radius", radius, "curvature radius R > 0");
        auto* pp = app->add_option("--p", p, "singularity strength p > 0");
        if (required) {
            m->required();
            r->required();
            pp->required();
        }
        app->add_option("--branch", branch, "sign of k = 2p: plus|minus")->check(CLI::IsMember({"plus", "minus"}));
    }
    h1::coulomb::CoulombModel model() const { return {mu, radius, p, parse_branch(branch)}; }
    Params echo(const h1::coulomb::CoulombModel& m) const {
        return {{"mu", format_double(mu)}, {"radius", format_double(radius)}, {"p", format_double(p)},
                {"branch", branch}, {"nu", format_double(m.nu())}};
    }
};

struct GridFlags {
    unsigned n = 0;
    double tau_min = 0.0;
    double tau_max = 5.0;
    std::size_t points = 101;
    std::string parity = "half-line";

    void attach(CLI::App* app) {
        app->add_option("--n", n, "quantum number");
        app->add_option("--tau-min", tau_min, "first sample");
        app->add_option("--tau-max", tau_max, "last sample");
        app->add_option("--points", points, "number of samples (>= 2)");
        app->add_option("--parity", parity, "even|odd|half-line")->check(CLI::IsMember({"even", "odd", "half-line"}));
    }
    h1::UniformGrid grid() const {
        if (points < 2 || !(tau_max > tau_min))
            throw UsageError("need --points >= 2 and --tau-max > --tau-min");
        return h1::UniformGrid::spanning(tau_min, tau_max, points);
    }
    void echo(Params& p) const {
        p["n"] = std::to_string(n);
        p["tau_min"] = format_double(tau_min);
        p["tau_max"] = format_double(tau_max);
        p["points"] = std::to_string(points);
        p["parity"] = parity;
    }
};

double tolerance_scale() {
    const char* env = std::getenv("H1SOLVE_TOL_SCALE");
    if (env == nullptr || *env == '\0')
        return 1.0;
    try {
        std::size_t used = 0;
        const std::string s(env);
        const double v = std::stod(s, &used);
        if (used == s.size() && std::isfinite(v) && v > 0.0)
            return v;
    } catch (const std::exception&) {
    }
    throw UsageError("H1SOLVE_TOL_SCALE must be a positive real");
}

h1::io::OutputRecord spectrum_record(const h1::oscillator::OscillatorModel& m, Params params) {
    h1::io::OutputRecord rec("spectrum oscillator", std::move(params), {"n", "epsilon", "energy", "norm_constant"});
    for (const auto& s : h1::oscillator::spectrum(m))
        rec.add_row({static_cast<double>(s.n), s.epsilon, s.energy, s.norm_constant});
    return rec;
}

h1::io::OutputRecord spectrum_record(const h1::coulomb::CoulombModel& m, Params params) {
    h1::io::OutputRecord rec("spectrum coulomb", std::move(params), {"n", "sigma", "energy", "norm_constant"});
    for (const auto& s : h1::coulomb::spectrum(m))
        rec.add_row({static_cast<double>(s.n), s.sigma, s.energy, s.norm_constant});
    return rec;
}

h1::io::OutputRecord wavefunction_record(std::string command, const h1::GridFunction& g, Params params) {
    h1::io::OutputRecord rec(std::move(command), std::move(params), {"tau", "psi"});
    for (std::size_t i = 0; i < g.size(); ++i)
        rec.add_row({g.coordinate(i), g.values[i]});
    return rec;
}

h1::io::OutputRecord verify_record(const std::vector<h1::verify::VerificationReport>& reports, Params params) {
    h1::io::OutputRecord rec("verify", std::move(params),
                             {"check_name", "measured", "tolerance", "passed", "parameters", "oracle"});
    for (const auto& r : reports)
        rec.add_row({r.check_name, r.measured, r.tolerance, r.passed ? 1.0 : 0.0, r.parameter_string(), r.oracle});
    return rec;
}

int run(int argc, char** argv) {
    CLI::App app{"Exactly-solvable singular oscillator and Coulomb systems on the hyperbola H1"};
    app.name("h1solve");
    app.require_subcommand(1);
    std::string format = "csv";
    const auto add_format = [&format](CLI::App* a) {
        a->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* spectrum = app.add_subcommand("spectrum", "bound-state spectrum of a model");
    spectrum->require_subcommand(1);
    OscillatorFlags spec_osc;
    CoulombFlags spec_coul;
    auto* spectrum_osc = spectrum->add_subcommand("oscillator", "singular oscillator");
    spec_osc.attach(spectrum_osc, true);
    add_format(spectrum_osc);
    auto* spectrum_coul = spectrum->add_subcommand("coulomb", "singular Coulomb system");
    spec_coul.attach(spectrum_coul, true);
    add_format(spectrum_coul);

    auto* wave = app.add_subcommand("wavefunction", "sample a normalized bound state");
    wave->require_subcommand(1);
    OscillatorFlags wave_osc;
    CoulombFlags wave_coul;
    GridFlags wave_grid;
    auto* wave_osc_cmd = wave->add_subcommand("oscillator", "singular oscillator state");
    wave_osc.attach(wave_osc_cmd, true);
    wave_grid.attach(wave_osc_cmd);
    add_format(wave_osc_cmd);
    auto* wave_coul_cmd = wave->add_subcommand("coulomb", "singular Coulomb state");
    wave_coul.attach(wave_coul_cmd, true);
    wave_grid.attach(wave_coul_cmd);
    add_format(wave_coul_cmd);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite_name;
    std::string preset;
    std::string system;
    std::string defect_spec;
    OscillatorFlags ver_osc;
    CoulombFlags ver_coul;
    verify->add_option("suite", suite_name, "all|orthonormality|residual|oracle|duality|contraction")->required();
    verify->add_option("--preset", preset, "bundled parameter sets")->check(CLI::IsMember({"paper-demo"}));
    verify->add_option("--system", system, "oscillator|coulomb when no preset is given")
        ->check(CLI::IsMember({"oscillator", "coulomb"}));
    verify->add_option("--omega", ver_osc.omega, "oscillator omega");
    verify->add_option("--k", ver_osc.k, "oscillator k");
    verify->add_option("--mu", ver_coul.mu, "Coulomb mu");
    verify->add_option("--p", ver_coul.p, "Coulomb p");
    double ver_radius = 0.0;
    std::string ver_branch = "plus";
    verify->add_option("--radius", ver_radius, "curvature radius R");
    verify->add_option("--branch", ver_branch, "plus|minus")->check(CLI::IsMember({"plus", "minus"}));
    verify->add_option("--inject-defect", defect_spec, "negative control, e.g. epsilon:1e-6 or k0:1e-6");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto fmt = parse_format(format);
    try {
        if (*spectrum_osc) {
            const auto m = spec_osc.model();
            h1::io::write(std::cout, spectrum_record(m, spec_osc.echo(m)), fmt);
            return kExitOk;
        }
        if (*spectrum_coul) {
            const auto m = spec_coul.model();
            h1::io::write(std::cout, spectrum_record(m, spec_coul.echo(m)), fmt);
            return kExitOk;
        }
        if (*wave_osc_cmd) {
            const auto grid = wave_grid.grid();
            const auto m = wave_osc.model();
            const auto g = h1::oscillator::eval_wavefunction(m, wave_grid.n, grid, parse_parity(wave_grid.parity));
            Params p = wave_osc.echo(m);
            wave_grid.echo(p);
            h1::io::write(std::cout, wavefunction_record("wavefunction oscillator", g, std::move(p)), fmt);
            return kExitOk;
        }
        if (*wave_coul_cmd) {
            const auto grid = wave_grid.grid();
            const auto m = wave_coul.model();
            const auto g = h1::coulomb::wavefunction_tau(m, wave_grid.n, grid, parse_parity(wave_grid.parity));
            Params p = wave_coul.echo(m);
            wave_grid.echo(p);
            h1::io::write(std::cout, wavefunction_record("wavefunction coulomb", g, std::move(p)), fmt);
            return kExitOk;
        }
        if (*verify) {
            const auto suite = h1::verify::parse_suite(suite_name);
            if (!suite)
                throw UsageError("unknown suite '" + suite_name + "'");
            h1::verify::CheckOptions opt;
            opt.tol_scale = tolerance_scale();
            Params params{{"suite", suite_name}, {"tol_scale", format_double(opt.tol_scale)}};
            if (!defect_spec.empty()) {
                const auto d = h1::verify::parse_defect(defect_spec);
                if (!d)
                    throw UsageError("--inject-defect expects epsilon:<value> or k0:<value>");
                opt.defect = *d;
                params["inject_defect"] = defect_spec;
            }
            h1::verify::VerificationPlan plan;
            if (!preset.empty()) {
                if (!system.empty())
                    throw UsageError("--preset and --system are mutually exclusive");
                plan = h1::verify::paper_demo_plan();
                params["preset"] = preset;
            } else if (system == "oscillator") {
                if (!(ver_radius > 0.0) || !(ver_osc.omega > 0.0) || !(ver_osc.k > 0.0))
                    throw UsageError("--system oscillator needs --omega, --radius and --k");
                ver_osc.radius = ver_radius;
                ver_osc.branch = ver_branch;
                const auto m = ver_osc.model();
                plan.oscillators.push_back(m);
                plan.oscillator_contractions.push_back({ver_osc.omega, ver_osc.k, m.branch(), 0, {1e2, 1e3, 1e4}});
                params.merge(ver_osc.echo(m));
                params["system"] = system;
            } else if (system == "coulomb") {
                if (!(ver_radius > 0.0) || !(ver_coul.mu > 0.0) || !(ver_coul.p > 0.0))
                    throw UsageError("--system coulomb needs --mu, --radius and --p");
                ver_coul.radius = ver_radius;
                ver_coul.branch = ver_branch;
                const auto m = ver_coul.model();
                plan.coulombs.push_back(m);
                plan.coulomb_contractions.push_back({ver_coul.mu, ver_coul.p, m.branch(), 0, {1e2, 1e3}});
                params.merge(ver_coul.echo(m));
                params["system"] = system;
            } else {
                throw UsageError("verify needs --preset paper-demo or --system oscillator|coulomb");
            }
            const auto reports = h1::verify::run_suite(*suite, plan, opt);
            h1::io::write(std::cout, verify_record(reports, std::move(params)), fmt);
            return h1::verify::all_passed(reports) ? kExitOk : kExitFailure;
        }
    } catch (const UsageError& e) {
        std::cerr << "h1solve: usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const h1::Error& e) {
        std::cerr << "h1solve: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "h1solve: " << e.what() << '\n';
        return kExitFailure;
    }
}
