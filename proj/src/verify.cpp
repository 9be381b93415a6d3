#include "bandlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "bandlab/kernel.hpp"

#include <nlohmann/json.hpp>

namespace bandlab {

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass || !c.gated; });
}

void VerifyReport::merge(const VerifyReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// short form for check names
std::string fmtg(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

double uniform_spacing(const std::vector<double>& z) {
    if (z.size() < 5) throw DegenerateInput("profile too short for residuals");
    const double h = z[1] - z[0];
    for (std::size_t i = 1; i + 1 < z.size(); ++i)
        if (std::fabs((z[i + 1] - z[i]) - h) > 1e-9 * std::max(1.0, std::fabs(h)))
            throw DegenerateInput("residuals need a uniform zeta grid");
    return h;
}

// 4th-order central first and second differences
double d1_4(const std::vector<double>& f, std::size_t i, double h) {
    return (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
}
double d2_4(const std::vector<double>& f, std::size_t i, double h) {
    return (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] -
            f[i - 2]) /
           (12.0 * h * h);
}

struct ResidualPoint {
    double r1, r2;
};

ResidualPoint residual_at(ModelKind kind, const ModelParams& p,
                          const PointDerivs& d) {
    ResidualPoint r{};
    switch (kind) {
        case ModelKind::UnlimitedNoCrowd:
            r.r1 = p.tau * p.c * d.du -
                   p.beta * (d.du * d.dlnv + d.u * d.d2lnv) +
                   0.5 * p.mu * d.d2u;
            r.r2 = p.c * d.dv - p.k * d.u;
            return r;
        case ModelKind::LimitedCrowd:
            r.r1 = p.tau * p.c * d.du - p.beta * d.dlnv * d.du +
                   0.5 * p.mu * d.d2u - p.tau * p.gamma * d.u * d.d2lnv;
            r.r2 = p.c * d.dv - p.k * d.u * d.v;
            return r;
        case ModelKind::LimitedNoCrowd:
            r.r1 = p.tau * p.c * d.du -
                   p.beta * (d.du * d.dlnv + d.u * d.d2lnv) +
                   0.5 * p.mu * d.d2u;
            r.r2 = p.c * d.dv - p.k * d.u * d.v;
            return r;
        case ModelKind::UnlimitedCrowd:
            break;
    }
    throw UnsupportedKind("no closed-form residual for the unlimited crowd system");
}

}  // namespace

ResidualNorms ode_residual(const Profile& profile, ModelKind kind,
                           const ModelParams& p, DerivMode mode, double C7) {
    if (kind == ModelKind::UnlimitedCrowd)
        throw UnsupportedKind("no closed-form residual for the unlimited crowd system");
    ResidualNorms n{};
    if (mode == DerivMode::Analytic) {
        const double h = uniform_spacing(profile.zeta);
        for (double z : profile.zeta) {
            PointDerivs d{};
            switch (kind) {
                case ModelKind::UnlimitedNoCrowd: d = model1_derivs(z, p); break;
                case ModelKind::LimitedCrowd: d = model3_derivs(z, p, C7); break;
                case ModelKind::LimitedNoCrowd: d = model4_derivs(z, p); break;
                case ModelKind::UnlimitedCrowd: break;
            }
            const ResidualPoint r = residual_at(kind, p, d);
            n.u_linf = std::max(n.u_linf, std::fabs(r.r1));
            n.v_linf = std::max(n.v_linf, std::fabs(r.r2));
            n.u_l2 += r.r1 * r.r1;
            n.v_l2 += r.r2 * r.r2;
        }
        n.u_l2 = std::sqrt(n.u_l2 * h);
        n.v_l2 = std::sqrt(n.v_l2 * h);
        return n;
    }

    const double h = uniform_spacing(profile.zeta);
    std::vector<double> lnv(profile.v.size());
    for (std::size_t i = 0; i < profile.v.size(); ++i)
        lnv[i] = std::log(profile.v[i]);
    for (std::size_t i = 2; i + 2 < profile.zeta.size(); ++i) {
        PointDerivs d{};
        d.u = profile.u[i];
        d.v = profile.v[i];
        d.du = d1_4(profile.u, i, h);
        d.d2u = d2_4(profile.u, i, h);
        d.dv = d1_4(profile.v, i, h);
        d.dlnv = d1_4(lnv, i, h);
        d.d2lnv = d2_4(lnv, i, h);
        const ResidualPoint r = residual_at(kind, p, d);
        n.u_linf = std::max(n.u_linf, std::fabs(r.r1));
        n.v_linf = std::max(n.v_linf, std::fabs(r.r2));
        n.u_l2 += r.r1 * r.r1;
        n.v_l2 += r.r2 * r.r2;
    }
    n.u_l2 = std::sqrt(n.u_l2 * h);
    n.v_l2 = std::sqrt(n.v_l2 * h);
    return n;
}

BoundReport check_bounds(const std::vector<FieldState>& traj,
                         const ModelParams& p, double eps) {
    if (crowd_neutral(p))
        throw DegenerateCrowd("alpha = 0 (gamma0 = 1/tau): use model 1 directly");
    BoundReport rep{};
    rep.eps = eps;
    for (const FieldState& s : traj) {
        const double f_plus = std::exp(p.lambda_plus * s.t);
        const double f_minus = std::exp(p.lambda_minus * s.t);
        const double lo = std::min(f_plus, f_minus);
        const double hi = std::max(f_plus, f_minus);
        for (std::size_t i = 0; i < s.u.size(); ++i) {
            const double ub = model1_derivs(s.grid.x(i) - p.c * s.t, p).u;
            const double below = (lo * ub - eps) - s.u[i];
            const double above = s.u[i] - (hi * ub + eps);
            const double margin = std::max(below, above);
            rep.worst_margin = std::max(rep.worst_margin, margin);
            if (margin > 0.0) ++rep.violations;
            ++rep.nodes_checked;
        }
    }
    return rep;
}

double max_ln_v_curvature(const Profile& profile) {
    const double h = uniform_spacing(profile.zeta);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < profile.v.size(); ++i) {
        const double d2 = (std::log(profile.v[i + 1]) -
                           2.0 * std::log(profile.v[i]) +
                           std::log(profile.v[i - 1])) /
                          (h * h);
        worst = std::max(worst, std::fabs(d2));
    }
    return worst;
}

std::vector<double> convergence_order(
    const std::vector<std::pair<double, double>>& error_pairs) {
    if (error_pairs.size() < 2)
        throw DegenerateInput("convergence order needs at least 2 (h, error) pairs");
    std::vector<double> orders;
    for (std::size_t i = 0; i + 1 < error_pairs.size(); ++i) {
        const auto [h0, e0] = error_pairs[i];
        const auto [h1, e1] = error_pairs[i + 1];
        if (!(h1 < h0)) throw DegenerateInput("h must be strictly decreasing");
        if (e0 <= 0.0 || e1 <= 0.0)
            throw DegenerateInput("errors must be strictly positive");
        orders.push_back(std::log(e0 / e1) / std::log(h0 / h1));
    }
    return orders;
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

namespace {

constexpr double kMu = 0.25, kC = 1.5, kK = 1.0, kVinf = 1.0;
const std::vector<double> kTaus = {0.05, 0.005};
const std::vector<double> kBetas = {0.1625, 0.25, 0.375, 0.625};
const std::vector<double> kGamma0s = {12.0, 25.0, 100.0};

CheckResult gate_below(std::string name, double value, double tol,
                       std::string note = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = tol;
    c.pass = value < tol;
    c.note = std::move(note);
    return c;
}

std::string tag(double tau, double beta) {
    return "tau=" + fmtg(tau) + ",beta=" + fmtg(beta);
}

// golden-section maximization of a unimodal function
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double lo, double hi) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::fabs(a));
         ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

void add_residual_checks(VerifyReport& rep, ModelKind kind,
                         const ModelParams& p, const std::string& label) {
    const auto zeta = linspace(-20.0, 20.0, 40001);  // spacing 1e-3
    Profile prof;
    switch (kind) {
        case ModelKind::UnlimitedNoCrowd: prof = eval_model1(zeta, p); break;
        case ModelKind::LimitedCrowd: prof = eval_model3(zeta, p); break;
        case ModelKind::LimitedNoCrowd: prof = eval_model4(zeta, p); break;
        case ModelKind::UnlimitedCrowd: throw UnsupportedKind("no closed form");
    }
    const ResidualNorms fd = ode_residual(prof, kind, p, DerivMode::FiniteDifference);
    rep.add(gate_below("residual-fd/" + label, fd.worst(), 1e-6));
    const ResidualNorms an = ode_residual(prof, kind, p, DerivMode::Analytic);
    rep.add(gate_below("residual-analytic/" + label, an.worst(), 1e-8));
}

void add_limit_checks(VerifyReport& rep, ModelKind kind, const ModelParams& p,
                      const std::string& label) {
    const Asymptotics lim = asymptotics(kind, p);
    const std::vector<double> zeta = {-40.0, 40.0};
    Profile prof;
    switch (kind) {
        case ModelKind::UnlimitedNoCrowd: prof = eval_model1(zeta, p); break;
        case ModelKind::LimitedCrowd: prof = eval_model3(zeta, p); break;
        case ModelKind::LimitedNoCrowd: prof = eval_model4(zeta, p); break;
        case ModelKind::UnlimitedCrowd: throw UnsupportedKind("no closed form");
    }
    rep.add(gate_below("limit-u-minus-inf/" + label,
                       std::fabs(prof.u[0] - lim.u_minus_inf), 1e-6));
    rep.add(gate_below("limit-u-plus-inf/" + label,
                       std::fabs(prof.u[1] - lim.u_plus_inf), 1e-6));
    rep.add(gate_below("limit-v-minus-inf/" + label,
                       std::fabs(prof.v[0] - lim.v_minus_inf), 1e-6));
    rep.add(gate_below("limit-v-plus-inf/" + label,
                       std::fabs(prof.v[1] - lim.v_plus_inf), 1e-6));
}

// half-max band width of the model-1 profile, by bisection on each flank
double half_max_width(const ModelParams& p) {
    const UMax m = umax_model1(p);
    const double half = 0.5 * m.u_max;
    const double scale = p.mu / (2.0 * p.tau * p.c);
    auto flank = [&](double far) {
        double a = m.zeta_star, b = far;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (model1_derivs(mid, p).u > half)
                a = mid;
            else
                b = mid;
        }
        return 0.5 * (a + b);
    };
    const double reach = scale * 80.0;
    return flank(m.zeta_star + reach) - flank(m.zeta_star - reach);
}

ModelParams table_params(double tau, double beta, double gamma0, ModelKind kind) {
    return derive_params(tau, kMu, kC, beta, gamma0, kK, kVinf, kind);
}

}  // namespace

VerifyReport run_suite_residuals() {
    VerifyReport rep;
    for (double tau : kTaus) {
        for (double beta : kBetas) {
            const std::string t = tag(tau, beta);
            const ModelParams p1 =
                table_params(tau, beta, 1.0 / tau, ModelKind::UnlimitedNoCrowd);
            add_residual_checks(rep, ModelKind::UnlimitedNoCrowd, p1,
                                "model1/" + t);

            // Proposition cross-check: golden-section vs closed-form (zeta*, u_max)
            const UMax m = umax_model1(p1);
            const double scale = p1.mu / (2.0 * p1.tau * p1.c);
            const double reach = scale * (std::fabs(std::log(1.0 / (p1.d - 1.0))) + 20.0);
            const auto [z_gs, u_gs] = golden_max(
                [&](double z) { return model1_derivs(z, p1).u; }, -reach, reach);
            rep.add(gate_below("umax-zeta-star/" + t,
                               std::fabs(z_gs - m.zeta_star), 1e-6));
            rep.add(gate_below("umax-value/" + t, std::fabs(u_gs - m.u_max), 1e-6));

            const ModelParams p4 =
                table_params(tau, beta, 1.0 / tau, ModelKind::LimitedNoCrowd);
            add_residual_checks(rep, ModelKind::LimitedNoCrowd, p4, "model4/" + t);

            for (double g0 : kGamma0s) {
                const ModelParams p3 =
                    table_params(tau, beta, g0, ModelKind::LimitedCrowd);
                add_residual_checks(rep, ModelKind::LimitedCrowd, p3,
                                    "model3/" + t + ",gamma0=" + fmtg(g0));
            }
        }
    }

    // theorem limits at zeta = +-40, on combinations whose tails have
    // decayed below the 1e-6 gate at that range
    add_limit_checks(rep, ModelKind::UnlimitedNoCrowd,
                     table_params(0.05, 0.25, 20.0, ModelKind::UnlimitedNoCrowd),
                     "model1/d=2");
    add_limit_checks(rep, ModelKind::LimitedCrowd,
                     table_params(0.05, 0.25, 12.0, ModelKind::LimitedCrowd),
                     "model3/beta=0.25,gamma0=12");
    add_limit_checks(rep, ModelKind::LimitedNoCrowd,
                     table_params(0.05, 0.1625, 20.0, ModelKind::LimitedNoCrowd),
                     "model4/d=1.3");

    // plateau values named by the theorems
    {
        const ModelParams p3 = table_params(0.05, 0.25, 25.0, ModelKind::LimitedCrowd);
        rep.add(gate_below("plateau-model3/beta=0.25,gamma0=25",
                           std::fabs(model3_derivs(-40.0, p3).u - 0.4), 1e-6));
        const ModelParams p4 = table_params(0.05, 0.25, 20.0, ModelKind::LimitedNoCrowd);
        rep.add(gate_below("plateau-model4/d=2",
                           std::fabs(model4_derivs(-40.0, p4).u - 0.45), 1e-6));
    }

    // curvature bound of Theorem 2: refine toward B = 0.09 from below
    {
        const ModelParams p =
            table_params(0.05, 0.25, 20.0, ModelKind::UnlimitedNoCrowd);
        double prev = 0.0;
        bool monotone = true;
        double est = 0.0;
        for (double dx : {0.02, 0.01, 0.005, 0.0025}) {
            const auto n = static_cast<std::size_t>(std::lround(40.0 / dx)) + 1;
            est = max_ln_v_curvature(eval_model1(linspace(-20.0, 20.0, n), p));
            rep.add(gate_below("curvature-below-B/dx=" + fmtg(dx), est,
                               p.B * (1.0 + 1e-3)));
            if (est + 1e-12 < prev) monotone = false;
            prev = est;
        }
        CheckResult mono;
        mono.name = "curvature-monotone-refinement";
        mono.value = monotone ? 1.0 : 0.0;
        mono.tolerance = 1.0;
        mono.pass = monotone;
        rep.add(mono);
        rep.add(gate_below("curvature-converged-to-B", std::fabs(p.B - est), 1e-6));
    }

    // figure behaviors: band width vs tau, plateau vs gamma0, plateau vs d
    {
        double prev_width = 0.0;
        bool increasing = true;
        for (double tau : {0.05, 0.025, 0.01, 0.005}) {
            const ModelParams p =
                table_params(tau, 0.1625, 1.0 / tau, ModelKind::UnlimitedNoCrowd);
            const double w = half_max_width(p);
            if (w <= prev_width) increasing = false;
            prev_width = w;
        }
        CheckResult c;
        c.name = "figure/band-width-grows-as-tau-shrinks";
        c.value = increasing ? 1.0 : 0.0;
        c.tolerance = 1.0;
        c.pass = increasing;
        rep.add(c);
    }
    {
        double prev = 1e300;
        bool decreasing = true;
        for (double g0 : {12.0, 25.0, 50.0, 100.0}) {
            const ModelParams p = table_params(0.05, 0.25, g0, ModelKind::LimitedCrowd);
            const double plateau = model3_derivs(-60.0, p).u;
            if (plateau >= prev) decreasing = false;
            prev = plateau;
        }
        CheckResult c;
        c.name = "figure/model3-plateau-decreases-in-gamma0";
        c.value = decreasing ? 1.0 : 0.0;
        c.tolerance = 1.0;
        c.pass = decreasing;
        rep.add(c);
    }
    {
        double worst = 0.0;
        for (double d : {1.5, 2.0, 3.0, 5.0}) {
            const ModelParams p =
                table_params(0.05, d * kMu / 2.0, 20.0, ModelKind::LimitedNoCrowd);
            worst = std::max(worst,
                             std::fabs(model4_derivs(-60.0, p).u * d - p.Q2));
        }
        rep.add(gate_below("figure/model4-plateau-inverse-in-d", worst, 1e-8));
    }
    return rep;
}

VerifyReport run_suite_bounds() {
    return run_suite_bounds(
        table_params(0.05, 0.25, 25.0, ModelKind::UnlimitedCrowd));
}

VerifyReport run_suite_bounds(const ModelParams& params) {
    if (crowd_neutral(params))
        throw DegenerateCrowd(
            "gamma0 = 1/tau makes alpha = 0: the crowd system degenerates to "
            "model 1 and has no envelope to check");
    VerifyReport rep;
    const ModelParams& p = params;

    auto run_at = [&](double dx, std::size_t every) {
        const auto n = static_cast<std::size_t>(std::lround(44.0 / dx)) + 1;
        const Grid1D grid = make_grid(-22.0, 22.0, n);
        FieldState s0 = init_state(grid, ModelKind::UnlimitedCrowd, p);
        SolverConfig cfg{};
        cfg.dt = cfl_dt(grid, p);
        cfg.t_end = 0.5;
        cfg.snapshot_every = every;
        return run(s0, ModelKind::UnlimitedCrowd, p, cfg);
    };
    const auto fine = run_at(0.01, 12500);
    const auto coarse = run_at(0.02, 3125);

    // discretization-error estimate on coincident nodes and times
    double disc = 0.0;
    for (std::size_t s = 0; s < coarse.size() && s < fine.size(); ++s) {
        for (std::size_t i = 0; i < coarse[s].u.size(); ++i)
            disc = std::max(disc,
                            std::fabs(coarse[s].u[i] - fine[s].u[2 * i]));
    }
    const double eps = std::max(1e-6, 3.0 * disc);

    const BoundReport br = check_bounds(fine, p, eps);
    CheckResult c;
    c.name = "theorem2-envelope/violations";
    c.value = static_cast<double>(br.violations);
    c.tolerance = 0.5;
    c.pass = br.violations == 0;
    c.note = "eps=" + fmt(eps) + " worst_margin=" + fmt(br.worst_margin) +
             " nodes=" + std::to_string(br.nodes_checked);
    rep.add(c);

    CheckResult info;
    info.name = "theorem2-envelope/worst-margin";
    info.value = br.worst_margin;
    info.tolerance = 0.0;
    info.pass = br.worst_margin <= 0.0;
    info.gated = false;
    rep.add(info);
    return rep;
}

VerifyReport run_suite_speed() {
    VerifyReport rep;
    const ModelParams p = table_params(0.05, 0.25, 20.0, ModelKind::LimitedNoCrowd);
    const Grid1D grid = make_grid(-20.0, 25.0, 4501);  // dx = 0.01
    FieldState s0 = init_state(grid, ModelKind::LimitedNoCrowd, p);
    SolverConfig cfg{};
    cfg.dt = cfl_dt(grid, p);
    cfg.t_end = 1.0;
    cfg.snapshot_every = 12500;
    const auto traj = run(s0, ModelKind::LimitedNoCrowd, p, cfg);

    const double c_est = measure_front_speed(traj, 0.5, p);
    rep.add(gate_below("front-speed/relative-error",
                       std::fabs(c_est - p.c) / p.c, 0.02,
                       "c_est=" + fmt(c_est)));

    const FieldState& last = traj.back();
    double linf = 0.0, umax = 0.0;
    for (std::size_t i = 0; i < last.u.size(); ++i) {
        const double ua = model4_derivs(grid.x(i) - p.c * last.t, p).u;
        linf = std::max(linf, std::fabs(last.u[i] - ua));
        umax = std::max(umax, ua);
    }
    rep.add(gate_below("front-speed/final-translate-linf", linf, 0.02 * umax,
                       "u_max=" + fmt(umax)));
    return rep;
}

VerifyReport run_suite_convergence() {
    VerifyReport rep;
    const ModelParams p = table_params(0.05, 0.25, 20.0, ModelKind::LimitedNoCrowd);

    // spatial order against the analytic translate, measured on an interior
    // window: the clamped ends carry an O(c t u') truncation error that does
    // not shrink with dx and would mask the scheme's order.
    // Regression baseline: the upwind advection term dominates, so the
    // observed order sits at 1 (measured 0.99).
    std::vector<std::pair<double, double>> pairs;
    for (double dx : {0.02, 0.01, 0.005}) {
        const auto n = static_cast<std::size_t>(std::lround(35.0 / dx)) + 1;
        const Grid1D grid = make_grid(-10.0, 25.0, n);
        FieldState s0 = init_state(grid, ModelKind::LimitedNoCrowd, p);
        SolverConfig cfg{};
        cfg.dt = cfl_dt(grid, p);
        cfg.t_end = 0.1;
        const auto traj = run(s0, ModelKind::LimitedNoCrowd, p, cfg);
        const FieldState& last = traj.back();
        double err = 0.0;
        for (std::size_t i = 0; i < last.u.size(); ++i) {
            const double x = grid.x(i);
            if (x < -6.0 || x > 8.0) continue;
            err = std::max(err, std::fabs(last.u[i] -
                                          model4_derivs(x - p.c * last.t, p).u));
        }
        pairs.emplace_back(dx, err);
    }
    const auto orders = convergence_order(pairs);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        CheckResult c;
        c.name = "spatial-order/model4/pair" + std::to_string(i);
        c.value = orders[i];
        c.tolerance = 0.0;
        c.pass = orders[i] > 0.9 && orders[i] < 1.1;
        c.note = "h=" + fmtg(pairs[i].first) + "->" + fmtg(pairs[i + 1].first) +
                 " err=" + fmt(pairs[i].second) + "->" + fmt(pairs[i + 1].second);
        rep.add(c);
    }

    // kernel-vs-PDE consistency under tau halving (per-unit-time drift and
    // variance held fixed: beta and mu scale with tau)
    {
        const Grid1D kgrid = make_grid(-15.0, 15.0, 601);    // dx = 0.05
        const Grid1D pgrid = make_grid(-15.0, 15.0, 2401);   // dx = 0.0125
        FieldState p0 = init_state(pgrid, ModelKind::LimitedNoCrowd, p);
        SolverConfig cfg{};
        cfg.dt = 1.25e-5;
        cfg.t_end = 0.25;
        cfg.snapshot_every = 20000;
        const auto pde_traj = run(p0, ModelKind::LimitedNoCrowd, p, cfg);

        // subsample the fine PDE states onto the kernel grid
        std::vector<FieldState> pde_sub;
        for (const FieldState& s : pde_traj) {
            FieldState c4;
            c4.grid = kgrid;
            c4.t = s.t;
            for (std::size_t i = 0; i < s.u.size(); i += 4) {
                c4.u.push_back(s.u[i]);
                c4.v.push_back(s.v[i]);
            }
            pde_sub.push_back(std::move(c4));
        }

        std::vector<double> discs;
        for (double scale : {1.0, 0.5, 0.25}) {
            const ModelParams kp =
                derive_params(0.05 * scale, kMu * scale, kC, 0.25 * scale,
                              20.0 / scale, kK, kVinf, ModelKind::LimitedNoCrowd);
            FieldState k0 = init_state(kgrid, ModelKind::LimitedNoCrowd, kp);
            const auto ktraj = kernel_run(k0, kp, KernelSpec{},
                                          ModelKind::LimitedNoCrowd, 0.25, 0);
            const auto cmp = compare_to_pde({ktraj.back()}, pde_sub);
            if (cmp.empty()) throw Error("kernel/PDE snapshot times never matched");
            discs.push_back(cmp.back().u_linf);
        }
        for (std::size_t i = 0; i + 1 < discs.size(); ++i) {
            const double ratio = discs[i] / discs[i + 1];
            CheckResult c;
            c.name = "kernel-pde-tau-halving/ratio" + std::to_string(i);
            c.value = ratio;
            c.tolerance = 0.0;
            c.pass = ratio > 1.5 && ratio < 3.0;
            c.note = "linf=" + fmt(discs[i]) + "->" + fmt(discs[i + 1]);
            rep.add(c);
        }
    }
    return rep;
}

VerifyReport run_suite_all() {
    VerifyReport rep = run_suite_residuals();
    rep.merge(run_suite_bounds());
    rep.merge(run_suite_speed());
    rep.merge(run_suite_convergence());
    return rep;
}

std::string report_to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["all_pass"] = r.all_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["value"] = fmt(c.value);
        jc["tolerance"] = fmt(c.tolerance);
        jc["pass"] = c.pass;
        jc["gated"] = c.gated;
        if (!c.note.empty()) jc["note"] = c.note;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerifyReport& r) {
    std::ostringstream os;
    for (const CheckResult& c : r.checks) {
        os << (c.pass ? "PASS" : (c.gated ? "FAIL" : "info")) << "  " << c.name
           << "  value=" << fmt(c.value) << "  tol=" << fmt(c.tolerance);
        if (!c.note.empty()) os << "  " << c.note;
        os << "\n";
    }
    os << (r.all_pass() ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace bandlab
