#pragma once

#include <string>
#include <utility>
#include <vector>

#include "l0fa/objective.hpp"

namespace l0fa {

/// Per-condition residuals of the P-stationarity system. The lambda_min
/// fields are signed defects; everything else is a nonnegative residual.
struct StationarityReport {
    double r_primal_l = 0.0;  // lambda_min(L*)
    double r_primal_s = 0.0;  // lambda_min(S*)
    double r_pd_sum = 0.0;    // lambda_min(L* + S*)
    double r_dual_l = 0.0;    // lambda_min(Lambda*)
    double r_dual_s = 0.0;    // lambda_min(Theta*)
    double r_slack_l = 0.0;   // |tr(Lambda* L*)|
    double r_slack_s = 0.0;   // |tr(Theta* S*)|
    double r_grad_l = 0.0;    // ||grad_L f - Lambda*||_F
    double r_prox = 0.0;      // ||prox[S* - gamma(grad_S f - Theta*)] - S*||_F
    double gamma_used = 0.0;
    double scale = 1.0;  // max(1, ||L*||_F, ||S*||_F)
    double tol_used = 0.0;
    bool pass = false;
    std::vector<std::string> failed_conditions;
};

/// Verify the P-stationarity conditions numerically. Residuals that compare
/// against the L0 prox fixed point use the given gamma. Failures are report
/// content, never exceptions. If L+S fails the positive-definiteness floor
/// the gradient-based residuals are set to +infinity and the report fails.
StationarityReport check_p_stationary(const Problem& prob, const SymMatrix& l,
                                      const SymMatrix& s, const SymMatrix& lambda,
                                      const SymMatrix& theta, double gamma,
                                      double tol = 1e-2);

/// Admissible step-size band (0, 1/(2K)) for a Lipschitz estimate K.
std::pair<double, double> theorem2_gamma_band(double lipschitz_estimate);

}  // namespace l0fa
