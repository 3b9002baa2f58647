#include "rls/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace rls {

Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    if (!A.allFinite() || !B.allFinite()) {
        throw NumericalBreakdown("spd_solve: non-finite input");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success) {
        throw NumericalBreakdown("spd_solve: Cholesky factorization failed");
    }
    Eigen::MatrixXd X = llt.solve(B);
    if (!X.allFinite()) {
        throw NumericalBreakdown("spd_solve: non-finite solution");
    }
    return X;
}

Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& A) {
    return symmetrize(spd_solve(A, Eigen::MatrixXd::Identity(A.rows(), A.cols())));
}

bool is_spd(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols() || !A.allFinite()) {
        return false;
    }
    const double scale = A.cwiseAbs().maxCoeff();
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(scale, 1.0)) {
        return false;
    }
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    return llt.info() == Eigen::Success;
}

SymEig sym_eig(const Eigen::MatrixXd& A) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetrize(A));
    if (es.info() != Eigen::Success) {
        throw SvdFailure("sym_eig: eigensolver failed");
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd sym_singular_values_desc(const Eigen::MatrixXd& A) {
    Eigen::VectorXd v = sym_eig(A).values.reverse();
    return v.cwiseMax(0.0);
}

}  // namespace rls
