#pragma once

#include <vector>

#include "bandlab/model.hpp"

namespace bandlab {

/// A sampled traveling-wave profile in the co-moving coordinate
/// zeta = x - c t. zeta is strictly increasing, u >= 0, 0 < v <= v_inf.
struct Profile {
    std::vector<double> zeta;
    std::vector<double> u;
    std::vector<double> v;
    ModelParams params;
    ModelKind kind;
};

/// Sub/super-solution envelope e^{lambda_{-+} t} u at a fixed time.
struct BoundPair {
    std::vector<double> u_minus;  ///< lower envelope
    std::vector<double> u_plus;   ///< upper envelope
    double lambda_minus;
    double lambda_plus;
    double t;
};

/// Closed-form limits at zeta -> -inf / +inf.
struct Asymptotics {
    double u_minus_inf;
    double u_plus_inf;
    double v_minus_inf;
    double v_plus_inf;
};

/// u, v and their zeta-derivatives at one point of a closed-form profile.
struct PointDerivs {
    double u, du, d2u;
    double v, dv;
    double dlnv, d2lnv;
};

/// Traveling band of the conservative unlimited-substrate system:
/// v = v_inf (1 + e^{-2 tau c zeta / mu})^{-1/(d-1)} with the matching u.
/// Requires d > 1. Evaluated in log space; no overflow for any zeta.
Profile eval_model1(const std::vector<double>& zeta_grid, const ModelParams& p);

/// Location and value of the model-1 concentration maximum:
/// zeta* = (mu / 2 tau c) ln(1/(d-1)), u_max = Q d^{-d/(d-1)}.
struct UMax {
    double zeta_star;
    double u_max;
};
UMax umax_model1(const ModelParams& p);

/// Limited-substrate band with crowd effect. C7 > 0 selects the member of
/// the translation family (C7 = 1 by default, i.e. C5 = 1).
Profile eval_model3(const std::vector<double>& zeta_grid, const ModelParams& p,
                    double C7 = 1.0);

/// Limited-substrate band without crowd effect:
/// u = 2 tau c^2 / (k mu) (d + e^{2 tau c zeta / mu})^{-1}.
Profile eval_model4(const std::vector<double>& zeta_grid, const ModelParams& p);

/// Pointwise derivative bundles of the closed forms (analytic, not FD).
PointDerivs model1_derivs(double zeta, const ModelParams& p);
PointDerivs model3_derivs(double zeta, const ModelParams& p, double C7 = 1.0);
PointDerivs model4_derivs(double zeta, const ModelParams& p);

/// e^{lambda_{-+} t}-scaled envelopes of a model-1 baseline for the
/// crowd system. Throws DegenerateCrowd when alpha = 0. When alpha < 0
/// the envelope roles swap so that u_minus <= u_plus always holds.
BoundPair bounds_model2(const Profile& baseline, double t, const ModelParams& p);

/// Theorem limits at zeta -> -+inf. Throws UnsupportedKind for
/// UnlimitedCrowd, which has no closed form.
Asymptotics asymptotics(ModelKind kind, const ModelParams& p);

/// Uniformly spaced zeta grid helper.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace bandlab
