#pragma once

#include <Eigen/Dense>

#include "l0fa/errors.hpp"

namespace l0fa {

/// Relative entrywise tolerance for accepting an input matrix as symmetric.
inline constexpr double kSymmetryTol = 1e-12;

/// Dense real symmetric matrix, the universal currency of the library.
///
/// Construction from raw data validates squareness, finiteness and symmetry
/// (|a_ij - a_ji| <= 1e-12 * max(1, |a_ij|)), then stores (A + A^T)/2 so that
/// eigensolvers always see an exactly symmetric matrix. Sums, differences and
/// scalar multiples of symmetric matrices are exactly symmetric entrywise and
/// skip revalidation.
class SymMatrix {
public:
    SymMatrix() = default;

    explicit SymMatrix(const Eigen::MatrixXd& m);

    static SymMatrix zero(Eigen::Index p);
    static SymMatrix identity(Eigen::Index p);

    /// Symmetrize a matrix known to be symmetric up to rounding (e.g. a
    /// Q*D*Q^T reconstruction) without the entrywise asymmetry check.
    static SymMatrix from_product(const Eigen::MatrixXd& m);

    Eigen::Index dim() const { return m_.rows(); }
    const Eigen::MatrixXd& mat() const { return m_; }
    double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    double trace() const { return m_.trace(); }
    double norm() const { return m_.norm(); }
    double max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

    /// Frobenius inner product <A, B> = sum_ij a_ij b_ij.
    double inner(const SymMatrix& other) const {
        return m_.cwiseProduct(other.m_).sum();
    }

    /// ||A - A^T||_F / max(1, ||A||_F); ~0 for every constructed instance.
    double sym_defect() const {
        return (m_ - m_.transpose()).norm() / std::max(1.0, m_.norm());
    }

    bool all_finite() const { return m_.allFinite(); }

    SymMatrix operator+(const SymMatrix& rhs) const;
    SymMatrix operator-(const SymMatrix& rhs) const;
    SymMatrix operator*(double a) const;
    friend SymMatrix operator*(double a, const SymMatrix& m) { return m * a; }

private:
    struct Trusted {};
    SymMatrix(Eigen::MatrixXd m, Trusted) : m_(std::move(m)) {}

    Eigen::MatrixXd m_;
};

/// Eigendecomposition of a symmetric matrix, eigenvalues sorted descending,
/// column i of `vectors` paired with `values[i]`.
struct EigenPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

}  // namespace l0fa
