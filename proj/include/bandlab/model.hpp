#pragma once

#include <cmath>
#include <string>

#include "bandlab/errors.hpp"

namespace bandlab {

/// Which of the four chemotactic systems is active.
///
/// "Unlimited" substrate is consumed at constant rate (v_t = -k u);
/// "limited" at a concentration-proportional rate (v_t = -k u v).
/// "Crowd" kinds carry the quorum term -gamma tau u (ln v)_xx with
/// gamma0 != 1/tau; "NoCrowd" kinds are the gamma0 = 1/tau reductions,
/// where the organism equation collapses to conservative Keller-Segel form.
enum class ModelKind {
    UnlimitedNoCrowd,
    UnlimitedCrowd,
    LimitedCrowd,
    LimitedNoCrowd,
};

std::string to_string(ModelKind kind);
ModelKind kind_from_string(const std::string& name);

/// True for the kinds whose substrate law is v_t = -k u v.
inline bool is_limited(ModelKind k) {
    return k == ModelKind::LimitedCrowd || k == ModelKind::LimitedNoCrowd;
}

/// True for the gamma0 = 1/tau reductions (conservative organism flux).
inline bool is_no_crowd(ModelKind k) {
    return k == ModelKind::UnlimitedNoCrowd || k == ModelKind::LimitedNoCrowd;
}

/// All physical and derived constants of a model instance.
///
/// Raw fields are in the paper's cm/hour units. Derived fields are
/// recomputed on construction and never read from files. B and
/// lambda_{plus,minus} are meaningful only when d > 1; they are NaN
/// otherwise.
struct ModelParams {
    // raw
    double tau;     ///< collision time interval [h]
    double mu;      ///< motility / diffusion coefficient [cm^2/h]
    double c;       ///< band speed [cm/h]
    double beta;    ///< chemotactic coefficient [cm^2/h]
    double gamma0;  ///< quorum rate [1/h]
    double k;       ///< substrate consumption rate [1/h]
    double v_inf;   ///< far-field substrate concentration

    // derived
    double d;             ///< 2 beta / mu
    double gamma;         ///< beta * gamma0 [cm^2/h]
    double alpha;         ///< gamma tau - beta [cm^2]
    double B;             ///< (1/(d-1)) tau^2 c^2 / mu^2 [1/cm^2]; NaN if d <= 1
    double lambda_plus;   ///< +alpha B / tau [1/h]; NaN if d <= 1
    double lambda_minus;  ///< -alpha B / tau [1/h]; NaN if d <= 1
    double Q;             ///< 2 tau c^2 v_inf / (k mu)
    double Q1;            ///< 2 tau c^2 / (k beta)
    double Q2;            ///< 2 tau c^2 / (k mu)
};

/// Validates raw inputs, computes all derived constants.
///
/// Throws NonPositiveParameter naming the offending field, and
/// ConstraintViolation when d <= 1 for the unlimited-substrate kinds.
ModelParams derive_params(double tau, double mu, double c, double beta,
                          double gamma0, double k, double v_inf,
                          ModelKind kind);

/// True iff gamma tau = beta (gamma0 = 1/tau) within 1e-12 relative;
/// routes between the crowd system and its conservative reduction.
bool crowd_neutral(const ModelParams& p);

}  // namespace bandlab
