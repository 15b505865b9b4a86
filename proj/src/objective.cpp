#include "l0fa/objective.hpp"

#include <cmath>
#include <limits>

namespace l0fa {

Problem::Problem(SymMatrix sigma_check, double c_weight, double mu_weight)
    : sigma_check_(std::move(sigma_check)), c_weight_(c_weight), mu_weight_(mu_weight) {
    if (!(c_weight_ > 0.0)) throw ConfigError("c_weight must be > 0");
    if (!(mu_weight_ > 0.0)) throw ConfigError("mu_weight must be > 0");

    const EigenPairs ep = sym_eig(sigma_check_);
    if (ep.values.minCoeff() <= pd_tol(sigma_check_)) {
        throw NotPositiveDefinite("sample covariance is not positive definite");
    }
    sigma_check_inv_ = SymMatrix::from_product(
        ep.vectors * ep.values.cwiseInverse().asDiagonal() * ep.vectors.transpose());
    log_det_sigma_check_ = ep.values.array().log().sum();

    const double inv_defect =
        (sigma_check_.mat() * sigma_check_inv_.mat() -
         Eigen::MatrixXd::Identity(dim(), dim()))
            .norm();
    if (inv_defect > 1e-8) {
        throw NotPositiveDefinite("sample covariance is too ill-conditioned to invert");
    }
}

namespace detail {

PdSum factor_pd_sum(const SymMatrix& l, const SymMatrix& s) {
    const SymMatrix sum = l + s;
    const EigenPairs ep = sym_eig(sum);
    if (ep.values.minCoeff() <= pd_tol(sum)) {
        throw SingularSum("L + S is not positive definite");
    }
    PdSum out;
    out.inverse = SymMatrix::from_product(ep.vectors * ep.values.cwiseInverse().asDiagonal() *
                                          ep.vectors.transpose());
    out.log_det = ep.values.array().log().sum();
    return out;
}

double lagrangian_trusted(const Problem& prob, const SymMatrix& l, const SymMatrix& s,
                          const SymMatrix& u, const SymMatrix& v, const SymMatrix& lambda,
                          const SymMatrix& theta, double rho, double zero_tol) {
    const SymMatrix dl = l - u;
    const SymMatrix ds = s - v;
    return big_f_value(prob, l, s, zero_tol) - lambda.inner(dl) +
           0.5 * rho * dl.norm() * dl.norm() - theta.inner(ds) +
           0.5 * rho * ds.norm() * ds.norm();
}

}  // namespace detail

double f_value(const Problem& prob, const SymMatrix& l, const SymMatrix& s) {
    const detail::PdSum sum = detail::factor_pd_sum(l, s);
    const double trace_term = (l + s).inner(prob.sigma_check_inv());
    return l.trace() + prob.mu() * (trace_term - sum.log_det);
}

double big_f_value(const Problem& prob, const SymMatrix& l, const SymMatrix& s,
                   double zero_tol) {
    return f_value(prob, l, s) + prob.c() * static_cast<double>(l0_norm(s, zero_tol));
}

SymMatrix grad_l(const Problem& prob, const SymMatrix& l, const SymMatrix& s) {
    const detail::PdSum sum = detail::factor_pd_sum(l, s);
    return SymMatrix::identity(prob.dim()) +
           (prob.sigma_check_inv() - sum.inverse) * prob.mu();
}

SymMatrix grad_s(const Problem& prob, const SymMatrix& l, const SymMatrix& s) {
    const detail::PdSum sum = detail::factor_pd_sum(l, s);
    return (prob.sigma_check_inv() - sum.inverse) * prob.mu();
}

double augmented_lagrangian(const Problem& prob, const SymMatrix& l, const SymMatrix& s,
                            const SymMatrix& u, const SymMatrix& v,
                            const SymMatrix& lambda, const SymMatrix& theta, double rho,
                            double zero_tol) {
    if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
    const double cone_tol_u = 1e-9 * std::max(1.0, u.norm());
    const double cone_tol_v = 1e-9 * std::max(1.0, v.norm());
    if (!is_psd(u, cone_tol_u) || !is_psd(v, cone_tol_v)) {
        return std::numeric_limits<double>::infinity();
    }
    return detail::lagrangian_trusted(prob, l, s, u, v, lambda, theta, rho, zero_tol);
}

}  // namespace l0fa
