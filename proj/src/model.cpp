#include "bandlab/model.hpp"

#include <cmath>
#include <limits>

namespace bandlab {

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::UnlimitedNoCrowd: return "unlimited-no-crowd";
        case ModelKind::UnlimitedCrowd: return "unlimited-crowd";
        case ModelKind::LimitedCrowd: return "limited-crowd";
        case ModelKind::LimitedNoCrowd: return "limited-no-crowd";
    }
    throw Error("invalid ModelKind");
}

ModelKind kind_from_string(const std::string& name) {
    if (name == "unlimited-no-crowd" || name == "UnlimitedNoCrowd")
        return ModelKind::UnlimitedNoCrowd;
    if (name == "unlimited-crowd" || name == "UnlimitedCrowd")
        return ModelKind::UnlimitedCrowd;
    if (name == "limited-crowd" || name == "LimitedCrowd")
        return ModelKind::LimitedCrowd;
    if (name == "limited-no-crowd" || name == "LimitedNoCrowd")
        return ModelKind::LimitedNoCrowd;
    throw Error("unknown model kind '" + name + "'");
}

namespace {
void require_positive(double x, const char* field) {
    if (!(x > 0.0) || !std::isfinite(x)) throw NonPositiveParameter(field);
}
}  // namespace

ModelParams derive_params(double tau, double mu, double c, double beta,
                          double gamma0, double k, double v_inf,
                          ModelKind kind) {
    require_positive(tau, "tau");
    require_positive(mu, "mu");
    require_positive(c, "c");
    require_positive(beta, "beta");
    require_positive(gamma0, "gamma0");
    require_positive(k, "k");
    require_positive(v_inf, "v_inf");

    ModelParams p{};
    p.tau = tau;
    p.mu = mu;
    p.c = c;
    p.beta = beta;
    p.gamma0 = gamma0;
    p.k = k;
    p.v_inf = v_inf;

    p.d = 2.0 * beta / mu;
    p.gamma = beta * gamma0;
    p.alpha = p.gamma * tau - beta;

    const bool unlimited =
        kind == ModelKind::UnlimitedNoCrowd || kind == ModelKind::UnlimitedCrowd;
    if (unlimited && !(p.d > 1.0)) {
        throw ConstraintViolation("d = 2 beta / mu = " + std::to_string(p.d) +
                                  " must exceed 1 for unlimited-substrate kinds");
    }

    if (p.d > 1.0) {
        p.B = (1.0 / (p.d - 1.0)) * tau * tau * c * c / (mu * mu);
        p.lambda_plus = p.alpha * p.B / tau;
        p.lambda_minus = -p.lambda_plus;
    } else {
        p.B = std::numeric_limits<double>::quiet_NaN();
        p.lambda_plus = std::numeric_limits<double>::quiet_NaN();
        p.lambda_minus = std::numeric_limits<double>::quiet_NaN();
    }

    p.Q2 = 2.0 * tau * c * c / (k * mu);
    p.Q = p.Q2 * v_inf;
    p.Q1 = 2.0 * tau * c * c / (k * beta);
    return p;
}

bool crowd_neutral(const ModelParams& p) {
    return std::fabs(p.gamma0 * p.tau - 1.0) < 1e-12;
}

}  // namespace bandlab
