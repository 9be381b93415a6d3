#include "bandlab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bandlab {

double NodeKernel::moment1(double dx) const {
    double m = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j)
        m += w[j] * static_cast<double>(j_min + static_cast<long>(j)) * dx;
    return m;
}

double NodeKernel::central_moment2(double dx) const {
    const double m1 = moment1(dx);
    double m2 = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double d = static_cast<double>(j_min + static_cast<long>(j)) * dx - m1;
        m2 += w[j] * d * d;
    }
    return m2;
}

namespace {

std::vector<double> log_v(const FieldState& s, const ModelParams& p,
                          double v_floor) {
    const double floor_abs = v_floor * p.v_inf;
    std::vector<double> lnv(s.v.size());
    for (std::size_t i = 0; i < s.v.size(); ++i)
        lnv[i] = std::log(std::max(s.v[i], floor_abs));
    return lnv;
}

// centered (ln v)_x, one-sided at the ends
double grad(const std::vector<double>& f, std::size_t i, double dx) {
    if (i == 0) return (f[1] - f[0]) / dx;
    if (i + 1 == f.size()) return (f[i] - f[i - 1]) / dx;
    return (f[i + 1] - f[i - 1]) / (2.0 * dx);
}

NodeKernel gaussian_node_kernel(double mean, double sigma, double trunc,
                                double dx) {
    NodeKernel nk;
    nk.j_min = std::lround((mean - trunc * sigma) / dx);
    const long j_max = std::lround((mean + trunc * sigma) / dx);
    nk.w.resize(static_cast<std::size_t>(j_max - nk.j_min + 1));
    double sum = 0.0;
    for (long j = nk.j_min; j <= j_max; ++j) {
        const double z = (static_cast<double>(j) * dx - mean) / sigma;
        const double w = std::exp(-0.5 * z * z);
        nk.w[static_cast<std::size_t>(j - nk.j_min)] = w;
        sum += w;
    }
    for (double& w : nk.w) w /= sum;
    return nk;
}

}  // namespace

std::vector<NodeKernel> build_kernel(const FieldState& state,
                                     const ModelParams& p,
                                     const KernelSpec& spec) {
    const double dx = state.grid.dx();
    const double sigma = std::sqrt(p.mu);
    if (sigma < 3.0 * dx)
        throw ResolutionError("kernel sigma = " + std::to_string(sigma) +
                              " cm needs at least 3 nodes (dx = " +
                              std::to_string(dx) + ")");
    const auto lnv = log_v(state, p, spec.v_floor);
    std::vector<NodeKernel> kernels;
    kernels.reserve(state.u.size());
    for (std::size_t i = 0; i < state.u.size(); ++i) {
        const double mean = -p.beta * grad(lnv, i, dx);
        kernels.push_back(
            gaussian_node_kernel(mean, sigma, spec.truncation_sigmas, dx));
    }
    return kernels;
}

FieldState kernel_step(const FieldState& state, const ModelParams& p,
                       const KernelSpec& spec, ModelKind kind) {
    const auto kernels = build_kernel(state, p, spec);
    const std::size_t n = state.u.size();
    const long n_long = static_cast<long>(n);
    const double dx = state.grid.dx();
    const double floor_abs = spec.v_floor * p.v_inf;
    const auto lnv = log_v(state, p, spec.v_floor);
    const double gam = is_no_crowd(kind) ? p.beta / p.tau : p.gamma;

    FieldState next = state;
    next.t += p.tau;
    double u_max = 0.0, u_min = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const NodeKernel& nk = kernels[i];
        double acc = 0.0;
        for (std::size_t j = 0; j < nk.w.size(); ++j) {
            long idx = static_cast<long>(i) + nk.j_min + static_cast<long>(j);
            idx = std::clamp(idx, 0L, n_long - 1);
            acc += nk.w[j] * state.u[static_cast<std::size_t>(idx)];
        }
        double d2lnv = 0.0;
        if (i > 0 && i + 1 < n)
            d2lnv = (lnv[i + 1] - 2.0 * lnv[i] + lnv[i - 1]) / (dx * dx);
        next.u[i] = acc - p.tau * gam * state.u[i] * d2lnv;

        const double dv = is_limited(kind) ? -p.k * state.u[i] * state.v[i]
                                           : -p.k * state.u[i];
        next.v[i] = std::max(state.v[i] + p.tau * dv, floor_abs);

        u_max = std::max(u_max, next.u[i]);
        u_min = std::min(u_min, next.u[i]);
        if (!std::isfinite(next.u[i]) || !std::isfinite(next.v[i]))
            throw StabilityViolation("non-finite field at t = " +
                                     std::to_string(next.t));
    }
    if (u_min < -1e-10 * u_max)
        throw NegativityBreach("u = " + std::to_string(u_min) + " at t = " +
                               std::to_string(next.t));
    return next;
}

std::vector<FieldState> kernel_run(const FieldState& state, const ModelParams& p,
                                   const KernelSpec& spec, ModelKind kind,
                                   double t_end, std::size_t snapshot_every) {
    const auto n_steps =
        static_cast<std::size_t>(std::floor(t_end / p.tau + 1e-9));
    std::vector<FieldState> snaps;
    snaps.push_back(state);
    FieldState cur = state;
    for (std::size_t k = 1; k <= n_steps; ++k) {
        cur = kernel_step(cur, p, spec, kind);
        const bool due = snapshot_every == 0 || k % snapshot_every == 0;
        if (due || k == n_steps) {
            if (snaps.back().t != cur.t) snaps.push_back(cur);
        }
    }
    return snaps;
}

std::vector<DiscrepancyEntry> compare_to_pde(
    const std::vector<FieldState>& kernel_traj,
    const std::vector<FieldState>& pde_traj) {
    std::vector<DiscrepancyEntry> out;
    for (const auto& ks : kernel_traj) {
        for (const auto& ps : pde_traj) {
            if (std::fabs(ks.t - ps.t) > 1e-9) continue;
            if (ks.grid.n != ps.grid.n || ks.grid.x_min != ps.grid.x_min ||
                ks.grid.x_max != ps.grid.x_max)
                throw GridMismatch("trajectories live on different grids");
            DiscrepancyEntry e{};
            e.t = ks.t;
            for (std::size_t i = 0; i < ks.u.size(); ++i) {
                const double du = std::fabs(ks.u[i] - ps.u[i]);
                const double dv = std::fabs(ks.v[i] - ps.v[i]);
                e.u_linf = std::max(e.u_linf, du);
                e.v_linf = std::max(e.v_linf, dv);
                e.u_l2 += du * du;
                e.v_l2 += dv * dv;
            }
            const double dx = ks.grid.dx();
            e.u_l2 = std::sqrt(e.u_l2 * dx);
            e.v_l2 = std::sqrt(e.v_l2 * dx);
            out.push_back(e);
            break;
        }
    }
    return out;
}

}  // namespace bandlab
