#include "l0fa/prox.hpp"

#include <cmath>

namespace l0fa {

double prox_l0_scalar(double s, const ProxParams& p) {
    return std::abs(s) <= p.l0_threshold() ? 0.0 : s;
}

double prox_l1_scalar(double s, const ProxParams& p) {
    const double shrunk = std::abs(s) - p.l1_threshold();
    if (shrunk <= 0.0) return 0.0;
    return s > 0.0 ? shrunk : -shrunk;
}

SymMatrix prox_l0_matrix(const SymMatrix& s, const ProxParams& p) {
    const double t = p.l0_threshold();
    Eigen::MatrixXd out = s.mat();
    // The decision |s_ij| <= t is identical for (i,j) and (j,i), so symmetry
    // is preserved entry for entry.
    out = (out.cwiseAbs().array() <= t).select(0.0, out);
    return SymMatrix::from_product(out);
}

SymMatrix prox_l1_matrix(const SymMatrix& s, const ProxParams& p) {
    Eigen::MatrixXd out = s.mat();
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
        for (Eigen::Index i = 0; i < out.rows(); ++i) {
            out(i, j) = prox_l1_scalar(out(i, j), p);
        }
    }
    return SymMatrix::from_product(out);
}

long l0_norm(const SymMatrix& s, double zero_tol) {
    if (zero_tol < 0.0) throw ConfigError("zero_tol must be >= 0");
    return (s.mat().cwiseAbs().array() > zero_tol).count();
}

double external_zero_tol(const SymMatrix& s) { return 1e-8 * s.max_abs(); }

}  // namespace l0fa
