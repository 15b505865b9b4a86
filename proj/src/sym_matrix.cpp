#include "l0fa/sym_matrix.hpp"

#include <cmath>

namespace l0fa {

namespace {

void check_square_finite(const Eigen::MatrixXd& m) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw InvalidMatrix("matrix must be square with dim >= 1, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (!m.allFinite()) {
        throw InvalidMatrix("matrix has non-finite entries");
    }
}

}  // namespace

SymMatrix::SymMatrix(const Eigen::MatrixXd& m) {
    check_square_finite(m);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
            const double defect = std::abs(m(i, j) - m(j, i));
            if (defect > kSymmetryTol * std::max(1.0, std::abs(m(i, j)))) {
                throw InvalidMatrix("matrix is not symmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + "): defect " +
                                    std::to_string(defect));
            }
        }
    }
    m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::zero(Eigen::Index p) {
    if (p < 1) throw InvalidMatrix("dim must be >= 1");
    return SymMatrix(Eigen::MatrixXd::Zero(p, p), Trusted{});
}

SymMatrix SymMatrix::identity(Eigen::Index p) {
    if (p < 1) throw InvalidMatrix("dim must be >= 1");
    return SymMatrix(Eigen::MatrixXd::Identity(p, p), Trusted{});
}

SymMatrix SymMatrix::from_product(const Eigen::MatrixXd& m) {
    check_square_finite(m);
    return SymMatrix(0.5 * (m + m.transpose()), Trusted{});
}

SymMatrix SymMatrix::operator+(const SymMatrix& rhs) const {
    return SymMatrix(m_ + rhs.m_, Trusted{});
}

SymMatrix SymMatrix::operator-(const SymMatrix& rhs) const {
    return SymMatrix(m_ - rhs.m_, Trusted{});
}

SymMatrix SymMatrix::operator*(double a) const {
    return SymMatrix(a * m_, Trusted{});
}

}  // namespace l0fa
