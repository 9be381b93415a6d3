#include "bandlab/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace bandlab {

namespace {

// log(1 + e^x) without overflow
double softplus(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

// e^x / (1 + e^x) without overflow
double logistic(double x) {
    if (x > 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

void require_d_above_one(const ModelParams& p) {
    if (!(p.d > 1.0))
        throw ConstraintViolation("model 1 requires d = 2 beta / mu > 1");
}

template <typename F>
Profile assemble(const std::vector<double>& zeta, const ModelParams& p,
                 ModelKind kind, F&& f) {
    Profile prof;
    prof.zeta = zeta;
    prof.params = p;
    prof.kind = kind;
    prof.u.reserve(zeta.size());
    prof.v.reserve(zeta.size());
    for (double z : zeta) {
        const PointDerivs pd = f(z);
        prof.u.push_back(pd.u);
        prof.v.push_back(pd.v);
    }
    return prof;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + h * static_cast<double>(i);
    return out;
}

PointDerivs model1_derivs(double zeta, const ModelParams& p) {
    require_d_above_one(p);
    const double a = 2.0 * p.tau * p.c / p.mu;
    const double s = -a * zeta;
    const double sig = logistic(s);
    const double dd = p.d / (p.d - 1.0);

    PointDerivs r{};
    const double lnv = std::log(p.v_inf) - softplus(s) / (p.d - 1.0);
    r.v = std::exp(lnv);
    r.dlnv = a * sig / (p.d - 1.0);
    r.d2lnv = -a * a * sig * (1.0 - sig) / (p.d - 1.0);
    r.dv = r.v * r.dlnv;

    const double lnu = std::log(p.Q / (p.d - 1.0)) + s - dd * softplus(s);
    r.u = std::exp(lnu);
    const double g1 = -a * (1.0 - dd * sig);
    const double dg1 = -a * a * dd * sig * (1.0 - sig);
    r.du = r.u * g1;
    r.d2u = r.u * (g1 * g1 + dg1);
    return r;
}

PointDerivs model3_derivs(double zeta, const ModelParams& p, double C7) {
    if (!(C7 > 0.0) || !std::isfinite(C7)) throw NonPositiveParameter("C7");
    const double a = 2.0 * p.tau * p.c / p.mu;
    const double r = a * zeta;
    const double P = p.beta + p.gamma * p.tau;
    const double u_plateau = 2.0 * p.tau * p.c * p.c / (p.k * P);
    const double lnC7 = std::log(C7);

    PointDerivs out{};
    const double sig_u = logistic(r - lnC7);
    const double lnu = std::log(u_plateau) - softplus(r - lnC7);
    out.u = std::exp(lnu);
    const double g1 = -a * sig_u;
    const double dg1 = -a * a * sig_u * (1.0 - sig_u);
    out.du = out.u * g1;
    out.d2u = out.u * (g1 * g1 + dg1);

    const double sig_v = logistic(lnC7 - r);
    const double lnv = std::log(p.v_inf) - (p.mu / P) * softplus(lnC7 - r);
    out.v = std::exp(lnv);
    out.dlnv = a * p.mu / P * sig_v;
    out.d2lnv = -a * a * p.mu / P * sig_v * (1.0 - sig_v);
    out.dv = out.v * out.dlnv;
    return out;
}

PointDerivs model4_derivs(double zeta, const ModelParams& p) {
    const double a = 2.0 * p.tau * p.c / p.mu;
    const double r = a * zeta;
    const double lnd = std::log(p.d);

    PointDerivs out{};
    const double sig = logistic(r - lnd);
    const double lnu = std::log(p.Q2) - lnd - softplus(r - lnd);
    out.u = std::exp(lnu);
    const double g1 = -a * sig;
    const double dg1 = -a * a * sig * (1.0 - sig);
    out.du = out.u * g1;
    out.d2u = out.u * (g1 * g1 + dg1);

    const double lnv = std::log(p.v_inf) - softplus(lnd - r) / p.d;
    out.v = std::exp(lnv);
    out.dlnv = (a / p.d) * (1.0 - sig);
    out.d2lnv = -(a * a / p.d) * sig * (1.0 - sig);
    out.dv = out.v * out.dlnv;
    return out;
}

Profile eval_model1(const std::vector<double>& zeta_grid, const ModelParams& p) {
    require_d_above_one(p);
    return assemble(zeta_grid, p, ModelKind::UnlimitedNoCrowd,
                    [&](double z) { return model1_derivs(z, p); });
}

UMax umax_model1(const ModelParams& p) {
    require_d_above_one(p);
    UMax m{};
    m.zeta_star = p.mu / (2.0 * p.tau * p.c) * std::log(1.0 / (p.d - 1.0));
    m.u_max = p.Q * std::pow(p.d, -p.d / (p.d - 1.0));
    return m;
}

Profile eval_model3(const std::vector<double>& zeta_grid, const ModelParams& p,
                    double C7) {
    if (!(C7 > 0.0) || !std::isfinite(C7)) throw NonPositiveParameter("C7");
    return assemble(zeta_grid, p, ModelKind::LimitedCrowd,
                    [&](double z) { return model3_derivs(z, p, C7); });
}

Profile eval_model4(const std::vector<double>& zeta_grid, const ModelParams& p) {
    return assemble(zeta_grid, p, ModelKind::LimitedNoCrowd,
                    [&](double z) { return model4_derivs(z, p); });
}

BoundPair bounds_model2(const Profile& baseline, double t, const ModelParams& p) {
    if (baseline.kind != ModelKind::UnlimitedNoCrowd)
        throw UnsupportedKind("bounds_model2 needs a model-1 baseline profile");
    if (crowd_neutral(p))
        throw DegenerateCrowd(
            "alpha = 0 (gamma0 = 1/tau): system reduces to model 1, no envelope");
    const ModelParams& b = baseline.params;
    if (b.tau != p.tau || b.mu != p.mu || b.c != p.c || b.beta != p.beta ||
        b.k != p.k || b.v_inf != p.v_inf)
        throw GridMismatch("baseline profile params differ from envelope params");

    const double f_plus = std::exp(p.lambda_plus * t);
    const double f_minus = std::exp(p.lambda_minus * t);
    const double lo = std::min(f_plus, f_minus);
    const double hi = std::max(f_plus, f_minus);

    BoundPair bp{};
    bp.lambda_minus = p.lambda_minus;
    bp.lambda_plus = p.lambda_plus;
    bp.t = t;
    bp.u_minus.reserve(baseline.u.size());
    bp.u_plus.reserve(baseline.u.size());
    for (double u : baseline.u) {
        bp.u_minus.push_back(lo * u);
        bp.u_plus.push_back(hi * u);
    }
    return bp;
}

Asymptotics asymptotics(ModelKind kind, const ModelParams& p) {
    Asymptotics a{};
    a.u_plus_inf = 0.0;
    a.v_minus_inf = 0.0;
    a.v_plus_inf = p.v_inf;
    switch (kind) {
        case ModelKind::UnlimitedNoCrowd:
            require_d_above_one(p);
            a.u_minus_inf = 0.0;
            return a;
        case ModelKind::LimitedCrowd:
            a.u_minus_inf =
                2.0 * p.tau * p.c * p.c / (p.k * (p.beta + p.gamma * p.tau));
            return a;
        case ModelKind::LimitedNoCrowd:
            a.u_minus_inf = p.tau * p.c * p.c / (p.k * p.beta);
            return a;
        case ModelKind::UnlimitedCrowd:
            throw UnsupportedKind(
                "no closed form for the unlimited-substrate crowd system; "
                "only the e^{lambda t} envelopes are available");
    }
    throw Error("invalid ModelKind");
}

}  // namespace bandlab
