#pragma once

#include <Eigen/Dense>

#include "rls/errors.hpp"

namespace rls {

inline Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& A) {
    return 0.5 * (A + A.transpose());
}

/// Cholesky solve of A X = B for symmetric positive definite A.
/// Throws NumericalBreakdown when the factorization fails or B is non-finite.
Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

/// Inverse of a symmetric positive definite matrix, symmetrized.
Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& A);

/// Decomposition-based SPD check: finite, symmetric to round-off, LLT succeeds.
bool is_spd(const Eigen::MatrixXd& A);

struct SymEig {
    Eigen::VectorXd values;   // ascending (Eigen's native order)
    Eigen::MatrixXd vectors;  // columns match values
};

/// Eigen-decomposition of a symmetric matrix. Throws SvdFailure on solver failure.
SymEig sym_eig(const Eigen::MatrixXd& A);

/// Singular values of a symmetric PSD matrix, descending, clamped at zero.
Eigen::VectorXd sym_singular_values_desc(const Eigen::MatrixXd& A);

}  // namespace rls
