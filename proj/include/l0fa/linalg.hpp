#pragma once

#include <optional>

#include "l0fa/sym_matrix.hpp"

namespace l0fa {

/// Full eigendecomposition with eigenvalues sorted descending.
EigenPairs sym_eig(const SymMatrix& a);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const SymMatrix& a);

/// Relative positive-definiteness floor: 1e-10 * max(1, ||A||_F).
double pd_tol(const SymMatrix& a);

/// lambda_min(A) > tol.
bool is_pd(const SymMatrix& a, double tol);

/// lambda_min(A) >= -tol.
bool is_psd(const SymMatrix& a, double tol);

/// Projection onto the cone of positive semidefinite matrices:
/// eigenvalues clipped at zero, eigenvectors kept.
SymMatrix psd_project(const SymMatrix& t);

/// KL divergence between the zero-mean Gaussians with covariances Sigma and
/// SigmaCheck: log det(Sigma^-1 SigmaCheck) + tr(Sigma SigmaCheck^-1) - p.
/// Both arguments must be positive definite.
double kl_divergence(const SymMatrix& sigma, const SymMatrix& sigma_check);

/// Numerical rank r* = argmax_{i <= i_max} lambda_i / lambda_{i+1} with
/// eigenvalues descending, where i_max is the smallest index i such that
/// lambda_{i+1} / lambda_i < ratio_threshold. Eigenvalues are clipped at
/// 1e-12 * lambda_1 before ratios are formed. Returns nullopt (Undetermined)
/// when no index meets the threshold condition; ties break toward the
/// smallest index.
std::optional<int> numerical_rank(const SymMatrix& l, double ratio_threshold = 0.05);

}  // namespace l0fa
