// bandlab: traveling-band chemotaxis models, their closed forms, and the
// finite-difference / jump-kernel simulators that cross-check them.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bandlab/analytic.hpp"
#include "bandlab/io.hpp"
#include "bandlab/kernel.hpp"
#include "bandlab/model.hpp"
#include "bandlab/pde.hpp"
#include "bandlab/verify.hpp"

namespace fs = std::filesystem;
using namespace bandlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct RawParams {
    double tau, mu, c, beta, gamma0, k, v_inf;
    ModelKind kind;
};

RawParams load_raw(const std::string& path, const std::string& kind_override) {
    auto [p, kind] = load_params_file(path);
    RawParams raw{p.tau, p.mu, p.c, p.beta, p.gamma0, p.k, p.v_inf, kind};
    if (!kind_override.empty()) raw.kind = kind_from_string(kind_override);
    return raw;
}

ModelParams derive(const RawParams& r) {
    return derive_params(r.tau, r.mu, r.c, r.beta, r.gamma0, r.k, r.v_inf,
                         r.kind);
}

struct SweepAxis {
    std::string param;
    std::vector<double> values;
};

SweepAxis parse_sweep(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw Error("--sweep expects <param>=<v1,v2,...>");
    SweepAxis axis;
    axis.param = text.substr(0, eq);
    std::stringstream ss(text.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            axis.values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw Error("bad sweep value '" + item + "'");
        }
    }
    if (axis.values.empty()) throw Error("--sweep has no values");
    static const std::vector<std::string> allowed = {"tau", "beta", "gamma0",
                                                     "d", "C7"};
    if (std::find(allowed.begin(), allowed.end(), axis.param) == allowed.end())
        throw Error("sweep axis must be one of tau, beta, gamma0, d, C7");
    return axis;
}

RawParams apply_axis(RawParams raw, const std::string& param, double value,
                     double& c7) {
    if (param == "tau")
        raw.tau = value;
    else if (param == "beta")
        raw.beta = value;
    else if (param == "gamma0")
        raw.gamma0 = value;
    else if (param == "d")
        raw.beta = value * raw.mu / 2.0;  // d is swept via beta
    else if (param == "C7")
        c7 = value;
    return raw;
}

std::string value_tag(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

Profile eval_closed_form(ModelKind kind, const ModelParams& p,
                         const std::vector<double>& zeta, double c7) {
    switch (kind) {
        case ModelKind::UnlimitedNoCrowd:
            return eval_model1(zeta, p);
        case ModelKind::LimitedCrowd:
            return eval_model3(zeta, p, c7);
        case ModelKind::LimitedNoCrowd:
            return eval_model4(zeta, p);
        case ModelKind::UnlimitedCrowd:
            throw UnsupportedKind(
                "the unlimited-substrate crowd system has no closed form; "
                "use `simulate --engine pde` or `verify --suite bounds`");
    }
    throw Error("invalid ModelKind");
}

std::size_t worker_count(std::size_t jobs) {
    std::size_t n = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("BANDLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = static_cast<std::size_t>(v);
    }
    if (n == 0) n = 1;
    return std::min(n, jobs);
}

struct AnalyticOpts {
    std::string params_file;
    std::string kind_override;
    std::string out_dir = ".";
    std::string format = "csv";
    std::string sweep;
    double zeta_min = -20.0, zeta_max = 20.0;
    std::size_t n = 4001;
    double c7 = 1.0;
    bool scaled_zeta = false;
};

void write_profile(const AnalyticOpts& o, const Profile& prof,
                   const std::string& tag) {
    const fs::path dir(o.out_dir);
    fs::create_directories(dir);
    const std::string stem = "profile_" + to_string(prof.kind) + "_" + tag;
    if (o.format == "csv")
        atomic_write(dir / (stem + ".csv"),
                     profile_to_csv(prof, true, o.scaled_zeta));
    else
        atomic_write(dir / (stem + ".json"), profile_to_json(prof));
}

int cmd_analytic(const AnalyticOpts& o) {
    const RawParams raw = load_raw(o.params_file, o.kind_override);
    const auto zeta = linspace(o.zeta_min, o.zeta_max, o.n);
    if (o.sweep.empty()) {
        write_profile(o, eval_closed_form(raw.kind, derive(raw), zeta, o.c7),
                      "base");
        return kExitOk;
    }

    const SweepAxis axis = parse_sweep(o.sweep);
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(axis.values.size());
    auto work = [&]() {
        for (std::size_t i = next.fetch_add(1); i < axis.values.size();
             i = next.fetch_add(1)) {
            try {
                double c7 = o.c7;
                const RawParams r = apply_axis(raw, axis.param, axis.values[i], c7);
                write_profile(o, eval_closed_form(r.kind, derive(r), zeta, c7),
                              axis.param + value_tag(axis.values[i]));
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < worker_count(axis.values.size()); ++w)
        pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (!e.empty()) throw Error(e);
    return kExitOk;
}

struct SimulateOpts {
    std::string params_file;
    std::string kind_override;
    std::string engine = "pde";
    std::string out_dir = ".";
    std::string format = "csv";
    std::string init = "analytic";
    double x_min = -20.0, x_max = 20.0;
    std::size_t nx = 2001;
    double dt = 0.0;  // 0: CFL default
    double t_end = 1.0;
    std::size_t snapshot_every = 0;
};

int cmd_simulate(const SimulateOpts& o) {
    const RawParams raw = load_raw(o.params_file, o.kind_override);
    const ModelParams p = derive(raw);
    const Grid1D grid = make_grid(o.x_min, o.x_max, o.nx);

    InitSpec init;
    if (o.init == "analytic")
        init.kind = InitKind::Analytic;
    else if (o.init == "step")
        init.kind = InitKind::Step;
    else if (o.init == "gaussian-bump")
        init.kind = InitKind::GaussianBump;
    else
        throw Error("unknown init '" + o.init + "'");

    const FieldState s0 = init_state(grid, raw.kind, p, init);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<FieldState> traj;
    double dt_used = 0.0;
    if (o.engine == "pde") {
        SolverConfig cfg{};
        cfg.dt = o.dt > 0.0 ? o.dt : cfl_dt(grid, p);
        cfg.t_end = o.t_end;
        cfg.snapshot_every = o.snapshot_every;
        dt_used = cfg.dt;
        traj = run(s0, raw.kind, p, cfg);
    } else if (o.engine == "kernel") {
        dt_used = p.tau;
        traj = kernel_run(s0, p, KernelSpec{}, raw.kind, o.t_end,
                          o.snapshot_every);
    } else {
        throw Error("unknown engine '" + o.engine + "'");
    }
    const auto t1 = std::chrono::steady_clock::now();

    const fs::path dir(o.out_dir);
    fs::create_directories(dir);
    const std::string stem =
        "trajectory_" + to_string(raw.kind) + "_" + o.engine;
    if (o.format == "csv")
        atomic_write(dir / (stem + ".csv"), trajectory_to_csv(traj));
    else
        atomic_write(dir / (stem + ".json"), trajectory_to_json(traj, o.engine));

    nlohmann::ordered_json meta;
    meta["engine"] = o.engine;
    meta["kind"] = to_string(raw.kind);
    meta["grid"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"n", grid.n}};
    meta["dt"] = dt_used;
    meta["cfl_dt"] = cfl_dt(grid, p);
    meta["t_end"] = o.t_end;
    meta["snapshots"] = traj.size();
    meta["wall_seconds"] =
        std::chrono::duration<double>(t1 - t0).count();
    atomic_write(dir / (stem + "_meta.json"), meta.dump(2) + "\n");
    return kExitOk;
}

struct VerifyOpts {
    std::string suite = "all";
    std::string params_file;
    std::string kind_override;
    std::string out_dir = ".";
};

int cmd_verify(const VerifyOpts& o) {
    VerifyReport rep;
    if (o.suite == "residuals") {
        rep = run_suite_residuals();
    } else if (o.suite == "bounds") {
        if (!o.params_file.empty())
            rep = run_suite_bounds(derive(load_raw(o.params_file, o.kind_override)));
        else
            rep = run_suite_bounds();
    } else if (o.suite == "speed") {
        rep = run_suite_speed();
    } else if (o.suite == "convergence") {
        rep = run_suite_convergence();
    } else if (o.suite == "all") {
        rep = run_suite_all();
    } else {
        throw Error("unknown suite '" + o.suite + "'");
    }

    const fs::path dir(o.out_dir);
    fs::create_directories(dir);
    atomic_write(dir / ("report_" + o.suite + ".json"), report_to_json(rep));
    atomic_write(dir / ("report_" + o.suite + ".txt"), report_to_text(rep));
    std::cout << report_to_text(rep);
    return rep.all_pass() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "traveling-band chemotaxis models: closed forms, PDE and jump-kernel "
        "simulation, and theorem verification"};
    app.require_subcommand(1);

    AnalyticOpts ao;
    auto add_analytic_opts = [&](CLI::App* sub) {
        sub->add_option("--params", ao.params_file, "parameter JSON file")
            ->required();
        sub->add_option("--kind", ao.kind_override, "model kind override");
        sub->add_option("--out", ao.out_dir, "output directory");
        sub->add_option("--format", ao.format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--zeta-min", ao.zeta_min, "left end of the zeta grid");
        sub->add_option("--zeta-max", ao.zeta_max, "right end of the zeta grid");
        sub->add_option("--n", ao.n, "number of zeta samples");
        sub->add_option("--c7", ao.c7, "integration constant C7 (model 3)");
        sub->add_flag("--scaled-zeta", ao.scaled_zeta,
                      "add the c/mu-scaled zeta column");
    };
    CLI::App* analytic = app.add_subcommand(
        "analytic", "evaluate a closed-form traveling-band profile");
    add_analytic_opts(analytic);
    analytic->add_option("--sweep", ao.sweep, "<param>=<v1,v2,...>");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "closed-form profiles across a parameter axis");
    add_analytic_opts(sweep);
    sweep->add_option("--sweep", ao.sweep, "<param>=<v1,v2,...>")->required();

    SimulateOpts so;
    CLI::App* simulate =
        app.add_subcommand("simulate", "time-step a model with a solver engine");
    simulate->add_option("--params", so.params_file, "parameter JSON file")
        ->required();
    simulate->add_option("--kind", so.kind_override, "model kind override");
    simulate->add_option("--engine", so.engine, "pde | kernel")
        ->check(CLI::IsMember({"pde", "kernel"}));
    simulate->add_option("--out", so.out_dir, "output directory");
    simulate->add_option("--format", so.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--init", so.init, "analytic | step | gaussian-bump");
    simulate->add_option("--x-min", so.x_min, "domain left end [cm]");
    simulate->add_option("--x-max", so.x_max, "domain right end [cm]");
    simulate->add_option("--nx", so.nx, "number of grid nodes");
    simulate->add_option("--dt", so.dt, "time step [h] (default: CFL bound)");
    simulate->add_option("--t-end", so.t_end, "final time [h]");
    simulate->add_option("--snapshot-every", so.snapshot_every,
                         "record every N steps (0: first and last only)");

    VerifyOpts vo;
    CLI::App* verify =
        app.add_subcommand("verify", "run a machine-checked theorem suite");
    verify->add_option("--suite", vo.suite,
                       "residuals | bounds | speed | convergence | all")
        ->check(CLI::IsMember(
            {"residuals", "bounds", "speed", "convergence", "all"}));
    verify->add_option("--params", vo.params_file,
                       "parameter JSON file (bounds suite)");
    verify->add_option("--kind", vo.kind_override, "model kind override");
    verify->add_option("--out", vo.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analytic)) return cmd_analytic(ao);
        if (app.got_subcommand(sweep)) return cmd_analytic(ao);
        if (app.got_subcommand(simulate)) return cmd_simulate(so);
        if (app.got_subcommand(verify)) return cmd_verify(vo);
        return kExitUsage;
    } catch (const NonPositiveParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateCrowd& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedKind& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StabilityViolation& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const NegativityBreach& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}
