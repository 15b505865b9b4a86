#include "l0fa/stationarity.hpp"

#include <cmath>
#include <limits>

namespace l0fa {

StationarityReport check_p_stationary(const Problem& prob, const SymMatrix& l,
                                      const SymMatrix& s, const SymMatrix& lambda,
                                      const SymMatrix& theta, double gamma, double tol) {
    if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
    if (!(tol > 0.0)) throw ConfigError("tol must be > 0");

    StationarityReport rep;
    rep.gamma_used = gamma;
    rep.tol_used = tol;
    rep.scale = std::max({1.0, l.norm(), s.norm()});

    rep.r_primal_l = min_eigenvalue(l);
    rep.r_primal_s = min_eigenvalue(s);
    rep.r_pd_sum = min_eigenvalue(l + s);
    rep.r_dual_l = min_eigenvalue(lambda);
    rep.r_dual_s = min_eigenvalue(theta);
    rep.r_slack_l = std::abs(lambda.inner(l));
    rep.r_slack_s = std::abs(theta.inner(s));

    const bool sum_pd = rep.r_pd_sum > pd_tol(l + s);
    if (sum_pd) {
        const SymMatrix gl = grad_l(prob, l, s);
        const SymMatrix gs = gl - SymMatrix::identity(prob.dim());
        rep.r_grad_l = (gl - lambda).norm();
        const SymMatrix fixed_point =
            prox_l0_matrix(s - (gs - theta) * gamma, ProxParams(gamma, prob.c()));
        rep.r_prox = (fixed_point - s).norm();
    } else {
        rep.r_grad_l = std::numeric_limits<double>::infinity();
        rep.r_prox = std::numeric_limits<double>::infinity();
    }

    auto require = [&rep](bool ok, const char* name) {
        if (!ok) rep.failed_conditions.emplace_back(name);
    };
    require(rep.r_primal_l >= -tol, "primal_l_psd");
    require(rep.r_primal_s >= -tol, "primal_s_psd");
    require(rep.r_pd_sum > tol, "sum_pd");
    require(rep.r_dual_l >= -tol, "dual_l_psd");
    require(rep.r_dual_s >= -tol, "dual_s_psd");
    require(rep.r_slack_l <= tol * rep.scale, "slack_l");
    require(rep.r_slack_s <= tol * rep.scale, "slack_s");
    require(rep.r_grad_l <= tol * rep.scale, "grad_l_stationarity");
    require(rep.r_prox <= tol * rep.scale, "prox_fixed_point");
    rep.pass = rep.failed_conditions.empty();
    return rep;
}

std::pair<double, double> theorem2_gamma_band(double lipschitz_estimate) {
    if (!(lipschitz_estimate > 0.0)) {
        throw NonPositiveK("Lipschitz estimate must be > 0");
    }
    return {0.0, 1.0 / (2.0 * lipschitz_estimate)};
}

}  // namespace l0fa
