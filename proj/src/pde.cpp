#include "bandlab/pde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bandlab {

Grid1D make_grid(double x_min, double x_max, std::size_t n) {
    if (!(x_max > x_min)) throw Error("grid: x_max must exceed x_min");
    if (n < 16) throw GridTooCoarse("grid needs at least 16 nodes");
    return Grid1D{x_min, x_max, n};
}

double cfl_dt(const Grid1D& grid, const ModelParams& p) {
    const double dx = grid.dx();
    return 0.4 * dx * dx * p.tau / p.mu;
}

namespace {

double gamma_effective(ModelKind kind, const ModelParams& p) {
    // NoCrowd kinds are the gamma0 = 1/tau reduction regardless of the
    // gamma0 the caller happened to store.
    return is_no_crowd(kind) ? p.beta / p.tau : p.gamma;
}

struct Workspace {
    std::vector<double> lnv;
    std::vector<double> du1, dv1, du2, dv2, du3, dv3, du4, dv4;
    std::vector<double> ut, vt;

    void resize(std::size_t n) {
        for (auto* v : {&lnv, &du1, &dv1, &du2, &dv2, &du3, &dv3, &du4, &dv4,
                        &ut, &vt})
            v->assign(n, 0.0);
    }
};

// Semi-discrete right-hand side. u is held fixed at the ends (du = 0,
// clamping the truncated domain to its asymptotic organism levels); v
// follows its consumption ODE everywhere.
void rhs(const std::vector<double>& u, const std::vector<double>& v,
         ModelKind kind, const ModelParams& p, double dx, double v_floor_abs,
         Workspace& ws, std::vector<double>& du, std::vector<double>& dv) {
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i)
        ws.lnv[i] = std::log(std::max(v[i], v_floor_abs));

    const double adv = p.beta / p.tau;
    const double diff = p.mu / (2.0 * p.tau);
    const double gam = gamma_effective(kind, p);
    const double inv_dx = 1.0 / dx;
    const double inv_dx2 = inv_dx * inv_dx;

    du[0] = du[n - 1] = 0.0;

    if (is_no_crowd(kind)) {
        // conservative form: u_t = -(beta/tau) d/dx (u (ln v)_x) + diffusion,
        // face-centered upwind fluxes
        double q_left = 0.0;
        {
            const double vel = adv * (ws.lnv[1] - ws.lnv[0]) * inv_dx;
            q_left = vel > 0.0 ? vel * u[0] : vel * u[1];
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double vel = adv * (ws.lnv[i + 1] - ws.lnv[i]) * inv_dx;
            const double q_right = vel > 0.0 ? vel * u[i] : vel * u[i + 1];
            du[i] = -(q_right - q_left) * inv_dx +
                    diff * (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_dx2;
            q_left = q_right;
        }
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double vel = adv * (ws.lnv[i + 1] - ws.lnv[i - 1]) * 0.5 * inv_dx;
            const double ux = vel > 0.0 ? (u[i] - u[i - 1]) * inv_dx
                                        : (u[i + 1] - u[i]) * inv_dx;
            const double d2lnv =
                (ws.lnv[i + 1] - 2.0 * ws.lnv[i] + ws.lnv[i - 1]) * inv_dx2;
            du[i] = -vel * ux +
                    diff * (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_dx2 -
                    gam * u[i] * d2lnv;
        }
    }

    // v carries no transport: the consumption ODE applies at every node,
    // ends included (clamping it there would strand a stale ln v gradient
    // against the decaying interior and drive a spurious boundary outflow)
    if (is_limited(kind)) {
        for (std::size_t i = 0; i < n; ++i) dv[i] = -p.k * u[i] * v[i];
    } else {
        for (std::size_t i = 0; i < n; ++i) dv[i] = -p.k * u[i];
    }
}

void advance_inplace(FieldState& s, ModelKind kind, const ModelParams& p,
                     const SolverConfig& cfg, Workspace& ws) {
    const std::size_t n = s.u.size();
    const double dx = s.grid.dx();
    const double dt = cfg.dt;
    const double floor_abs = cfg.v_floor * p.v_inf;

    rhs(s.u, s.v, kind, p, dx, floor_abs, ws, ws.du1, ws.dv1);
    for (std::size_t i = 0; i < n; ++i) {
        ws.ut[i] = s.u[i] + 0.5 * dt * ws.du1[i];
        ws.vt[i] = s.v[i] + 0.5 * dt * ws.dv1[i];
    }
    rhs(ws.ut, ws.vt, kind, p, dx, floor_abs, ws, ws.du2, ws.dv2);
    for (std::size_t i = 0; i < n; ++i) {
        ws.ut[i] = s.u[i] + 0.5 * dt * ws.du2[i];
        ws.vt[i] = s.v[i] + 0.5 * dt * ws.dv2[i];
    }
    rhs(ws.ut, ws.vt, kind, p, dx, floor_abs, ws, ws.du3, ws.dv3);
    for (std::size_t i = 0; i < n; ++i) {
        ws.ut[i] = s.u[i] + dt * ws.du3[i];
        ws.vt[i] = s.v[i] + dt * ws.dv3[i];
    }
    rhs(ws.ut, ws.vt, kind, p, dx, floor_abs, ws, ws.du4, ws.dv4);

    double u_max = 0.0;
    double u_min = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s.u[i] += dt / 6.0 *
                  (ws.du1[i] + 2.0 * ws.du2[i] + 2.0 * ws.du3[i] + ws.du4[i]);
        s.v[i] += dt / 6.0 *
                  (ws.dv1[i] + 2.0 * ws.dv2[i] + 2.0 * ws.dv3[i] + ws.dv4[i]);
        if (s.v[i] < floor_abs) s.v[i] = floor_abs;
        u_max = std::max(u_max, s.u[i]);
        u_min = std::min(u_min, s.u[i]);
        if (!std::isfinite(s.u[i]) || !std::isfinite(s.v[i]))
            throw StabilityViolation("non-finite field at t = " +
                                     std::to_string(s.t + dt));
    }
    if (u_min < -1e-10 * u_max)
        throw NegativityBreach("u = " + std::to_string(u_min) + " at t = " +
                               std::to_string(s.t + dt));
    s.t += dt;
}

void check_dt(const FieldState& s, const ModelParams& p,
              const SolverConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw Error("dt must be positive");
    const double bound = cfl_dt(s.grid, p);
    if (cfg.dt > bound * (1.0 + 1e-12))
        throw StabilityViolation("dt = " + std::to_string(cfg.dt) +
                                 " exceeds the diffusion CFL bound " +
                                 std::to_string(bound));
}

}  // namespace

FieldState init_state(const Grid1D& grid, ModelKind kind, const ModelParams& p,
                      const InitSpec& init, double v_floor) {
    const double dx = grid.dx();
    const double band_width = p.mu / (p.tau * p.c);
    if (band_width / dx < 8.0)
        throw GridTooCoarse("fewer than 8 nodes span the band width " +
                            std::to_string(band_width) + " cm");

    FieldState s;
    s.grid = grid;
    s.t = 0.0;
    s.u.resize(grid.n);
    s.v.resize(grid.n);
    const double floor_abs = v_floor * p.v_inf;

    switch (init.kind) {
        case InitKind::Analytic: {
            std::vector<double> zeta(grid.n);
            for (std::size_t i = 0; i < grid.n; ++i) zeta[i] = grid.x(i);
            Profile prof;
            switch (kind) {
                case ModelKind::UnlimitedNoCrowd:
                case ModelKind::UnlimitedCrowd:
                    // the crowd system starts from the model-1 baseline
                    prof = eval_model1(zeta, p);
                    break;
                case ModelKind::LimitedCrowd:
                    prof = eval_model3(zeta, p);
                    break;
                case ModelKind::LimitedNoCrowd:
                    prof = eval_model4(zeta, p);
                    break;
            }
            s.u = std::move(prof.u);
            s.v = std::move(prof.v);
            break;
        }
        case InitKind::Step: {
            for (std::size_t i = 0; i < grid.n; ++i) {
                s.u[i] = 0.0;
                s.v[i] = p.v_inf * 0.5 * (1.0 + std::tanh(grid.x(i) / (2.0 * dx)));
            }
            break;
        }
        case InitKind::GaussianBump: {
            double integral = 0.0;
            for (std::size_t i = 0; i < grid.n; ++i) {
                const double z = (grid.x(i) - init.center) / init.width;
                s.u[i] = std::exp(-0.5 * z * z);
                s.v[i] = p.v_inf;
            }
            for (std::size_t i = 0; i + 1 < grid.n; ++i)
                integral += 0.5 * (s.u[i] + s.u[i + 1]) * dx;
            for (double& u : s.u) u *= init.mass / integral;
            break;
        }
    }
    for (double& v : s.v) v = std::max(v, floor_abs);
    return s;
}

FieldState step(const FieldState& state, ModelKind kind, const ModelParams& p,
                const SolverConfig& config) {
    check_dt(state, p, config);
    FieldState next = state;
    Workspace ws;
    ws.resize(state.u.size());
    advance_inplace(next, kind, p, config, ws);
    return next;
}

std::vector<FieldState> run(const FieldState& state, ModelKind kind,
                            const ModelParams& p, const SolverConfig& config) {
    check_dt(state, p, config);
    const auto n_steps = static_cast<std::size_t>(
        std::floor(config.t_end / config.dt + 1e-9));

    std::vector<FieldState> snaps;
    snaps.push_back(state);
    FieldState cur = state;
    Workspace ws;
    ws.resize(state.u.size());
    for (std::size_t k = 1; k <= n_steps; ++k) {
        advance_inplace(cur, kind, p, config, ws);
        const bool due =
            config.snapshot_every != 0 && k % config.snapshot_every == 0;
        if (due || k == n_steps) snaps.push_back(cur);
    }
    return snaps;
}

double front_position(const FieldState& state, double level,
                      const ModelParams& p) {
    const double target = level * p.v_inf;
    const auto& v = state.v;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] < target && v[i + 1] >= target) {
            const double f = (target - v[i]) / (v[i + 1] - v[i]);
            return state.grid.x(i) + f * state.grid.dx();
        }
    }
    throw NoCrossing("v never crosses " + std::to_string(target) + " at t = " +
                     std::to_string(state.t));
}

double measure_front_speed(const std::vector<FieldState>& snapshots,
                           double level, const ModelParams& p) {
    if (snapshots.size() < 3)
        throw DegenerateInput("front speed needs at least 3 snapshots");
    double t_mean = 0.0, x_mean = 0.0;
    std::vector<double> pos(snapshots.size());
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        pos[i] = front_position(snapshots[i], level, p);
        t_mean += snapshots[i].t;
        x_mean += pos[i];
    }
    t_mean /= static_cast<double>(snapshots.size());
    x_mean /= static_cast<double>(snapshots.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        const double dt = snapshots[i].t - t_mean;
        num += dt * (pos[i] - x_mean);
        den += dt * dt;
    }
    if (den == 0.0) throw DegenerateInput("all snapshots share one time");
    return num / den;
}

}  // namespace bandlab
