#pragma once

#include "l0fa/sym_matrix.hpp"

namespace l0fa {

/// Step size and penalty weight of the elementwise proximal operators.
/// Thresholds are derived on demand so they can never go stale.
struct ProxParams {
    double gamma;
    double c;

    ProxParams(double gamma_in, double c_in) : gamma(gamma_in), c(c_in) {
        if (!(gamma > 0.0)) throw ConfigError("prox step gamma must be > 0");
        if (!(c > 0.0)) throw ConfigError("penalty weight c must be > 0");
    }

    /// Hard-threshold level sqrt(2*gamma*c).
    double l0_threshold() const { return std::sqrt(2.0 * gamma * c); }
    /// Soft-threshold level gamma*c.
    double l1_threshold() const { return gamma * c; }
};

/// Hard thresholding: 0 when |s| <= sqrt(2*gamma*c), s otherwise.
/// The boundary resolves to 0.
double prox_l0_scalar(double s, const ProxParams& p);

/// Soft thresholding: sign(s) * max(|s| - gamma*c, 0).
double prox_l1_scalar(double s, const ProxParams& p);

SymMatrix prox_l0_matrix(const SymMatrix& s, const ProxParams& p);
SymMatrix prox_l1_matrix(const SymMatrix& s, const ProxParams& p);

/// Number of entries with |s_ij| > zero_tol.
long l0_norm(const SymMatrix& s, double zero_tol = 0.0);

/// Zero tolerance for externally loaded matrices: 1e-8 * max|s_ij|.
/// Solver iterates carry exact zeros and use zero_tol = 0.
double external_zero_tol(const SymMatrix& s);

}  // namespace l0fa
