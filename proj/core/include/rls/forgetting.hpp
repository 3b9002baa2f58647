#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rls/estimator.hpp"

namespace rls {

/// Information directions of a covariance P and the regressor content along
/// them. U columns are ordered by descending singular value of P^{-1}
/// (equivalently ascending singular value of P; both share singular vectors).
struct InformationDecomposition {
    Eigen::MatrixXd U;          // n x n orthonormal
    Eigen::VectorXd sigma_inv;  // singular values of P^{-1}, descending
    Eigen::MatrixXd psi;        // p x n projected regressor, phi * U
    Eigen::VectorXd col_norms;  // information content per direction
    std::vector<bool> rich_mask;  // col_norms[i] > epsilon (strict)

    int rich_count() const;
};

/// Diagonal forgetting profile and its similarity transform back to the
/// original coordinates.
struct ForgettingMatrix {
    Eigen::VectorXd lambda_bar_diag;  // entries in {sqrt(lambda), 1}
    Eigen::MatrixXd Lambda;           // U diag U^T, SPD
    Eigen::MatrixXd Lambda_inv;       // U diag^{-1} U^T
};

InformationDecomposition decompose_information(const Eigen::MatrixXd& P,
                                               const Eigen::MatrixXd& phi, double epsilon);

ForgettingMatrix build_forgetting_matrix(const InformationDecomposition& decomp, double lambda);

/// Variable-direction forgetting step: forgetting acts only on directions with
/// information content above epsilon. Covariance route is the SPD rank-p
/// downdate of Pbar = Lambda^{-1} P Lambda^{-1}; the information cache follows
/// Pinv' = Lambda Pinv Lambda + phi^T phi. Plain theta update.
std::pair<EstimatorState, TraceRecord> vdf_update(const EstimatorState& state, const DataPoint& d,
                                                  double lambda, double epsilon);

/// Same covariance update, but theta minimizes the running quadratic cost with
/// regularizer R_k = R_{k-1} + Lambda Pinv Lambda - Pinv, which adds the
/// correction term P_{k+1} (R_k - R_{k-1}) (theta0 - theta_k).
std::pair<EstimatorState, TraceRecord> vdf_update_cost_consistent(const EstimatorState& state,
                                                                  const DataPoint& d,
                                                                  double lambda, double epsilon,
                                                                  const Eigen::VectorXd& theta0);

enum class KreisselmeierVariant { I, II };

/// Stabilized information update P_{k+1}^{-1} = (I + M_k P_k) P_k^{-1} + phi^T phi
/// with the caller-supplied stabilization matrix M_k.
EstimatorState kreisselmeier_general(const EstimatorState& state, const DataPoint& d,
                                     const Eigen::MatrixXd& M);

/// The two published M_k choices:
///   I:  M = -(1-lambda) (I - alpha P)^N P^{-1}
///   II: M = -(1-lambda) (P^{-1} - alpha I)^N (P^{-1} + beta I)^{-N} P^{-1}
EstimatorState kreisselmeier_update(const EstimatorState& state, const DataPoint& d,
                                    double lambda, double alpha, double beta, int n_odd,
                                    KreisselmeierVariant variant);

/// Rank-one directional forgetting restricted to the regressor direction;
/// scalar measurement only (p = 1). phi = 0 passes the state through.
EstimatorState cao_update(const EstimatorState& state, const DataPoint& d, double lambda);

/// Advances `state` by one sample under its own strategy and returns the
/// pre-update diagnostics.
std::pair<EstimatorState, TraceRecord> step(const EstimatorState& state, const DataPoint& d);

}  // namespace rls
