#include "l0fa/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace l0fa {

EigenPairs sym_eig(const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.mat());
    if (solver.info() != Eigen::Success) {
        throw InvalidMatrix("eigendecomposition failed to converge");
    }
    // Eigen sorts ascending; flip to descending.
    const Eigen::Index p = a.dim();
    EigenPairs out;
    out.values = solver.eigenvalues().reverse();
    out.vectors.resize(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        out.vectors.col(i) = solver.eigenvectors().col(p - 1 - i);
    }
    return out;
}

double min_eigenvalue(const SymMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.mat(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw InvalidMatrix("eigendecomposition failed to converge");
    }
    return solver.eigenvalues().minCoeff();
}

double pd_tol(const SymMatrix& a) { return 1e-10 * std::max(1.0, a.norm()); }

bool is_pd(const SymMatrix& a, double tol) { return min_eigenvalue(a) > tol; }

bool is_psd(const SymMatrix& a, double tol) { return min_eigenvalue(a) >= -tol; }

SymMatrix psd_project(const SymMatrix& t) {
    const EigenPairs ep = sym_eig(t);
    const Eigen::VectorXd clipped = ep.values.cwiseMax(0.0);
    return SymMatrix::from_product(ep.vectors * clipped.asDiagonal() *
                                   ep.vectors.transpose());
}

double kl_divergence(const SymMatrix& sigma, const SymMatrix& sigma_check) {
    const EigenPairs es = sym_eig(sigma);
    if (es.values.minCoeff() <= pd_tol(sigma)) {
        throw NotPositiveDefinite("first argument of kl_divergence is not positive definite");
    }
    const EigenPairs ec = sym_eig(sigma_check);
    if (ec.values.minCoeff() <= pd_tol(sigma_check)) {
        throw NotPositiveDefinite("second argument of kl_divergence is not positive definite");
    }
    const Eigen::Index p = sigma.dim();
    const Eigen::MatrixXd check_inv = ec.vectors * ec.values.cwiseInverse().asDiagonal() *
                                      ec.vectors.transpose();
    const double trace_term = sigma.mat().cwiseProduct(check_inv).sum();
    const double logdet_term = ec.values.array().log().sum() - es.values.array().log().sum();
    return logdet_term + trace_term - static_cast<double>(p);
}

std::optional<int> numerical_rank(const SymMatrix& l, double ratio_threshold) {
    if (!(ratio_threshold > 0.0 && ratio_threshold < 1.0)) {
        throw ConfigError("ratio_threshold must lie in (0, 1)");
    }
    const Eigen::Index p = l.dim();
    if (p < 2) return std::nullopt;

    Eigen::VectorXd lam = sym_eig(l).values;
    if (lam(0) <= 0.0) return std::nullopt;  // no positive leading eigenvalue
    const double floor = 1e-12 * lam(0);
    lam = lam.cwiseMax(floor);

    // i_max: smallest index (1-based) with lambda_{i+1} / lambda_i below the
    // threshold; Undetermined when no index qualifies.
    int i_max = 0;
    for (Eigen::Index i = 0; i + 1 < p; ++i) {
        if (lam(i + 1) / lam(i) < ratio_threshold) {
            i_max = static_cast<int>(i) + 1;
            break;
        }
    }
    if (i_max == 0) return std::nullopt;

    int best = 1;
    double best_ratio = lam(0) / lam(1);
    for (int i = 2; i <= i_max; ++i) {
        const double r = lam(i - 1) / lam(i);
        if (r > best_ratio) {
            best_ratio = r;
            best = i;
        }
    }
    return best;
}

}  // namespace l0fa
