#pragma once

#include <cstddef>
#include <vector>

#include "bandlab/model.hpp"
#include "bandlab/pde.hpp"

namespace bandlab {

/// Gaussian jump kernel: mean -beta (ln v)_x per node, variance mu,
/// truncated at `truncation_sigmas` standard deviations and renormalized.
struct KernelSpec {
    double truncation_sigmas = 6.0;
    double v_floor = 1e-12;  ///< fraction of v_inf, as in the PDE solver
};

/// Discrete kernel at one node: weights w[j] for jump offsets
/// (j_min + j) * dx, summing to 1.
struct NodeKernel {
    long j_min;
    std::vector<double> w;

    double moment1(double dx) const;          ///< first moment [cm]
    double central_moment2(double dx) const;  ///< second central moment [cm^2]
};

/// Midpoint-quadrature Gaussian kernels for every node of the state.
/// Throws ResolutionError when sigma = sqrt(mu) < 3 dx.
std::vector<NodeKernel> build_kernel(const FieldState& state,
                                     const ModelParams& p,
                                     const KernelSpec& spec);

/// One interval tau of the integral evolution law:
/// u(x, t+tau) = sum_j u(x + Delta_j) w_j + tau f_u, with the quorum source
/// f_u = -gamma u (ln v)_xx, and pure consumption for v. Out-of-range
/// convolution reads clamp to the boundary (asymptotic) values.
FieldState kernel_step(const FieldState& state, const ModelParams& p,
                       const KernelSpec& spec, ModelKind kind);

/// Runs kernel_step until t_end, snapshotting every `snapshot_every` steps
/// (0 keeps every step).
std::vector<FieldState> kernel_run(const FieldState& state, const ModelParams& p,
                                   const KernelSpec& spec, ModelKind kind,
                                   double t_end, std::size_t snapshot_every = 0);

/// Per-time L-inf / L2 discrepancy between two trajectories on one grid.
struct DiscrepancyEntry {
    double t;
    double u_linf, u_l2;
    double v_linf, v_l2;
};

std::vector<DiscrepancyEntry> compare_to_pde(
    const std::vector<FieldState>& kernel_traj,
    const std::vector<FieldState>& pde_traj);

}  // namespace bandlab
