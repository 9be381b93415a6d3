#pragma once

#include <cstddef>
#include <vector>

#include "bandlab/analytic.hpp"
#include "bandlab/model.hpp"

namespace bandlab {

/// Uniform 1-D grid.
struct Grid1D {
    double x_min;
    double x_max;
    std::size_t n;

    double dx() const { return (x_max - x_min) / static_cast<double>(n - 1); }
    double x(std::size_t i) const { return x_min + dx() * static_cast<double>(i); }
};

Grid1D make_grid(double x_min, double x_max, std::size_t n);

/// Solver state: both fields at one instant.
struct FieldState {
    Grid1D grid;
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;
};

struct SolverConfig {
    double dt;
    double t_end;
    double v_floor = 1e-12;        ///< fraction of v_inf; keeps ln v bounded
    std::size_t snapshot_every = 0;  ///< 0: only initial and final state
};

/// Largest stable RK4 step for the diffusion term (mu / 2 tau) u_xx,
/// with the 0.4 safety factor baked in.
double cfl_dt(const Grid1D& grid, const ModelParams& p);

enum class InitKind { Analytic, Step, GaussianBump };

struct InitSpec {
    InitKind kind = InitKind::Analytic;
    double mass = 1.0;    ///< gaussian-bump: total integral of u
    double center = 0.0;  ///< gaussian-bump: bump location [cm]
    double width = 1.0;   ///< gaussian-bump: standard deviation [cm]
};

/// Populates u, v on the grid. Analytic init seeds the traveling frame at
/// t = 0 (zeta = x); for UnlimitedCrowd it seeds the model-1 baseline with
/// the same raw parameters. Throws GridTooCoarse when fewer than 8 nodes
/// span the band width mu / (tau c).
FieldState init_state(const Grid1D& grid, ModelKind kind, const ModelParams& p,
                      const InitSpec& init = {}, double v_floor = 1e-12);

/// One explicit RK4 step of the semi-discrete system. Advection is
/// first-order upwind against the drift (beta/tau)(ln v)_x; diffusion and
/// the crowd term are centered second-order. u stays clamped to its
/// initial (asymptotic) values at the domain ends; v, which carries no
/// transport, follows its consumption ODE at every node.
FieldState step(const FieldState& state, ModelKind kind, const ModelParams& p,
                const SolverConfig& config);

/// Advances to t_end, collecting snapshots every `snapshot_every` steps
/// (always including the initial and final states).
std::vector<FieldState> run(const FieldState& state, ModelKind kind,
                            const ModelParams& p, const SolverConfig& config);

/// Least-squares front speed from the level-crossing position of v
/// (level as a fraction of v_inf) across snapshots.
double measure_front_speed(const std::vector<FieldState>& snapshots,
                           double level, const ModelParams& p);

/// Position where v first rises through level * v_inf (linear interpolation).
double front_position(const FieldState& state, double level,
                      const ModelParams& p);

}  // namespace bandlab
