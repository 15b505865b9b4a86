#pragma once

#include "l0fa/linalg.hpp"
#include "l0fa/prox.hpp"
#include "l0fa/sym_matrix.hpp"

namespace l0fa {

/// Immutable problem instance: sample covariance, its cached inverse, and the
/// penalty weights C and mu. The inverse is computed once at construction;
/// every evaluation reuses it.
class Problem {
public:
    Problem(SymMatrix sigma_check, double c_weight, double mu_weight);

    const SymMatrix& sigma_check() const { return sigma_check_; }
    const SymMatrix& sigma_check_inv() const { return sigma_check_inv_; }
    double log_det_sigma_check() const { return log_det_sigma_check_; }
    double c() const { return c_weight_; }
    double mu() const { return mu_weight_; }
    Eigen::Index dim() const { return sigma_check_.dim(); }

private:
    SymMatrix sigma_check_;
    SymMatrix sigma_check_inv_;
    double log_det_sigma_check_;
    double c_weight_;
    double mu_weight_;
};

/// Candidate decomposition point (L, S); feasibility means L >= 0, S >= 0 and
/// L + S > 0 within the library tolerances.
struct FeasiblePair {
    SymMatrix l;
    SymMatrix s;
};

/// Smooth term f(L,S) = tr(L) + mu * { tr[(L+S) SigmaCheck^-1] - log det(L+S) }.
/// Throws SingularSum when L+S fails the positive-definiteness floor.
double f_value(const Problem& prob, const SymMatrix& l, const SymMatrix& s);

/// Full objective F(L,S) = f(L,S) + C * ||S||_0.
double big_f_value(const Problem& prob, const SymMatrix& l, const SymMatrix& s,
                   double zero_tol = 0.0);

/// grad_L f = I + mu * (SigmaCheck^-1 - (L+S)^-1).
SymMatrix grad_l(const Problem& prob, const SymMatrix& l, const SymMatrix& s);

/// grad_S f = mu * (SigmaCheck^-1 - (L+S)^-1); equals grad_L f - I exactly.
SymMatrix grad_s(const Problem& prob, const SymMatrix& l, const SymMatrix& s);

/// Augmented Lagrangian
///   f + C||S||_0 + g(U) + g(V) - <Lambda, L-U> + (rho/2)||L-U||_F^2
///                              - <Theta, S-V> + (rho/2)||S-V||_F^2,
/// where g is the indicator of the PSD cone. Returns +infinity when U or V
/// has an eigenvalue below -1e-9 * max(1, ||.||_F).
double augmented_lagrangian(const Problem& prob, const SymMatrix& l, const SymMatrix& s,
                            const SymMatrix& u, const SymMatrix& v,
                            const SymMatrix& lambda, const SymMatrix& theta, double rho,
                            double zero_tol = 0.0);

namespace detail {

/// Eigen-factored view of a PD sum L+S shared by f, gradients and monitors.
struct PdSum {
    SymMatrix inverse;
    double log_det;
};

/// Factor L+S, enforcing lambda_min > pd_tol(L+S); throws SingularSum.
PdSum factor_pd_sum(const SymMatrix& l, const SymMatrix& s);

/// Augmented-Lagrangian value skipping the U/V cone checks; used by the
/// solver trace where U and V are PSD by construction.
double lagrangian_trusted(const Problem& prob, const SymMatrix& l, const SymMatrix& s,
                          const SymMatrix& u, const SymMatrix& v, const SymMatrix& lambda,
                          const SymMatrix& theta, double rho, double zero_tol);

}  // namespace detail

}  // namespace l0fa
