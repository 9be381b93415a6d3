#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bandlab/analytic.hpp"
#include "bandlab/model.hpp"
#include "bandlab/pde.hpp"

namespace bandlab {

/// One machine-checked claim with its tolerance and verdict.
struct CheckResult {
    std::string name;
    double value = 0.0;      ///< measured quantity (residual, error, margin...)
    double tolerance = 0.0;  ///< gate the value was compared against
    bool pass = false;
    bool gated = true;  ///< informational checks never fail the suite
    std::string note;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const VerifyReport& other);
};

enum class DerivMode { Analytic, FiniteDifference };

struct ResidualNorms {
    double u_linf = 0.0, u_l2 = 0.0;
    double v_linf = 0.0, v_l2 = 0.0;

    double worst() const { return u_linf > v_linf ? u_linf : v_linf; }
};

/// Residual of the reduced traveling-wave ODE pair on the profile's grid
/// interior. FiniteDifference mode uses 4th-order stencils on the sampled
/// values; Analytic mode re-evaluates the closed form's derivatives
/// (model 3 with the given C7). Throws UnsupportedKind for UnlimitedCrowd.
ResidualNorms ode_residual(const Profile& profile, ModelKind kind,
                           const ModelParams& p,
                           DerivMode mode = DerivMode::FiniteDifference,
                           double C7 = 1.0);

/// Containment of a crowd-system trajectory in the e^{lambda t} envelopes
/// of its model-1 baseline, with absolute slack eps per node.
struct BoundReport {
    std::size_t nodes_checked = 0;
    std::size_t violations = 0;
    double worst_margin = 0.0;  ///< largest signed overshoot beyond the slack
    double eps = 0.0;
};

BoundReport check_bounds(const std::vector<FieldState>& traj,
                         const ModelParams& p, double eps);

/// max over interior nodes of |second difference of ln v| / dx^2.
double max_ln_v_curvature(const Profile& profile);

/// Observed orders log(e_{2h}/e_h) / log(2h/h) per adjacent (h, error) pair.
std::vector<double> convergence_order(
    const std::vector<std::pair<double, double>>& error_pairs);

/// Suite runners: the named check collections behind `verify --suite ...`.
VerifyReport run_suite_residuals();
VerifyReport run_suite_bounds();
/// Envelope suite for caller-chosen crowd-system parameters.
/// Throws DegenerateCrowd when gamma0 = 1/tau.
VerifyReport run_suite_bounds(const ModelParams& params);
VerifyReport run_suite_speed();
VerifyReport run_suite_convergence();
VerifyReport run_suite_all();

/// Fixed-format serializations (deterministic, 17 significant digits).
std::string report_to_json(const VerifyReport& r);
std::string report_to_text(const VerifyReport& r);

}  // namespace bandlab
