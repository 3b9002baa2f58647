#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rls/errors.hpp"
#include "rls/strategy.hpp"

namespace rls {

/// One measurement: y = phi * theta with phi of shape p x n.
struct DataPoint {
    Eigen::MatrixXd phi;  // p x n regressor
    Eigen::VectorXd y;    // p measurements

    DataPoint(Eigen::MatrixXd phi_in, Eigen::VectorXd y_in);

    /// p = 1 convenience.
    static DataPoint scalar(const Eigen::RowVectorXd& phi_row, double y_value);

    Eigen::Index p() const { return phi.rows(); }
    Eigen::Index n() const { return phi.cols(); }
};

using History = std::vector<DataPoint>;

/// Bookkeeping for the cost-consistent variable-direction theta update:
/// the regularizer R_{k-1} of the running quadratic cost and the prior estimate
/// it is anchored to.
struct VdfCostState {
    Eigen::MatrixXd R_prev;
    Eigen::VectorXd theta0;
};

struct EstimatorState {
    long k = 0;
    Eigen::VectorXd theta;
    Eigen::MatrixXd P;  // symmetric positive definite covariance
    std::optional<Eigen::MatrixXd> Pinv_cache;
    ForgettingStrategy strategy;
    std::optional<VdfCostState> vdf_cost;

    Eigen::Index n() const { return theta.size(); }

    /// Information matrix: the cache when present, otherwise an SPD solve.
    Eigen::MatrixXd information_matrix() const;
};

/// Per-step diagnostics, all evaluated at index k before the state advances:
/// z_k uses the pre-update estimate, sigma_P/kappa_P describe P_k.
struct TraceRecord {
    long k = 0;
    Eigen::VectorXd z;        // predicted error, phi_k * theta_k - y_k
    Eigen::VectorXd theta;    // theta_k
    Eigen::VectorXd sigma_P;  // singular values of P_k, descending
    double kappa_P = 0.0;
    std::optional<double> theta_err_norm;
    std::optional<double> V;
    std::optional<Eigen::VectorXd> psi_col_norms;
};

/// Diagnostics of `state` against `d` without advancing.
TraceRecord make_trace(const EstimatorState& state, const DataPoint& d);

/// Start an estimator from a prior: P_0 = R^{-1}.
EstimatorState init(const Eigen::VectorXd& theta0, const Eigen::MatrixXd& R,
                    const ForgettingStrategy& strategy);

/// Covariance-form update with the theta update first (p x p solve), then P.
/// Requires a none/uniform strategy.
std::pair<EstimatorState, TraceRecord> step_covariance(const EstimatorState& state,
                                                       const DataPoint& d);

/// Information-form update: P_{k+1}^{-1} = lambda P_k^{-1} + phi^T phi, then an
/// n x n solve recovers P_{k+1}. Maintains Pinv_cache.
std::pair<EstimatorState, TraceRecord> step_information(const EstimatorState& state,
                                                        const DataPoint& d);

/// Direct normal-equation solve of the exponentially weighted cost over the
/// whole history. Independent of any recursion; used as the oracle.
Eigen::VectorXd batch_solve(const History& history, double lambda, const Eigen::MatrixXd& R,
                            const Eigen::VectorXd& theta0);

/// z = phi * theta - y with the current (pre-update) estimate.
Eigen::VectorXd predicted_error(const EstimatorState& state, const DataPoint& d);

/// V = (theta - theta_true)^T P^{-1} (theta - theta_true); simulation-only diagnostic.
double lyapunov_value(const EstimatorState& state, const Eigen::VectorXd& theta_true);

/// Product of the parameter-error transition matrices accumulated while
/// replaying the uniform-forgetting recursion over `history`:
///   A_k = (I - P_{k+1} phi_k^T phi_k) ... (I - P_1 phi_0^T phi_0).
Eigen::MatrixXd error_transition_product(const History& history, double lambda,
                                         const Eigen::MatrixXd& R);

struct KalmanState {
    Eigen::VectorXd xhat;
    Eigen::MatrixXd P;
};

/// One-step optimal predictor: gain chosen to minimize tr P_{k+1}.
KalmanState kalman_predictor_step(const KalmanState& state, const Eigen::MatrixXd& A,
                                  const Eigen::MatrixXd& B, const Eigen::MatrixXd& C,
                                  const Eigen::MatrixXd& Q, const Eigen::MatrixXd& Rn,
                                  const Eigen::VectorXd& u, const Eigen::VectorXd& y);

}  // namespace rls
