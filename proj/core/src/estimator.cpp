#include "rls/estimator.hpp"

#include <cmath>
#include <limits>

#include "rls/linalg.hpp"

namespace rls {

namespace {

void check_dims(const EstimatorState& state, const DataPoint& d) {
    if (d.n() != state.n()) {
        throw DimensionMismatch("regressor column count does not match the estimate dimension");
    }
}

void check_uniform(const EstimatorState& state) {
    if (state.strategy.tag != Forgetting::None && state.strategy.tag != Forgetting::Uniform) {
        throw ParameterOutOfRange("this update handles only the none/uniform strategies");
    }
}

}  // namespace

DataPoint::DataPoint(Eigen::MatrixXd phi_in, Eigen::VectorXd y_in)
    : phi(std::move(phi_in)), y(std::move(y_in)) {
    if (phi.rows() < 1 || phi.cols() < 1) {
        throw DimensionMismatch("regressor must have at least one row and one column");
    }
    if (y.size() != phi.rows()) {
        throw DimensionMismatch("measurement length must equal the regressor row count");
    }
    if (!phi.allFinite() || !y.allFinite()) {
        throw NumericalBreakdown("data point contains non-finite entries");
    }
}

DataPoint DataPoint::scalar(const Eigen::RowVectorXd& phi_row, double y_value) {
    Eigen::VectorXd y(1);
    y << y_value;
    return DataPoint(phi_row, y);
}

Eigen::MatrixXd EstimatorState::information_matrix() const {
    if (Pinv_cache) {
        return *Pinv_cache;
    }
    return spd_inverse(P);
}

TraceRecord make_trace(const EstimatorState& state, const DataPoint& d) {
    check_dims(state, d);
    TraceRecord rec;
    rec.k = state.k;
    rec.z = predicted_error(state, d);
    rec.theta = state.theta;
    rec.sigma_P = sym_singular_values_desc(state.P);
    const double smin = rec.sigma_P(rec.sigma_P.size() - 1);
    rec.kappa_P = smin > 0.0 ? rec.sigma_P(0) / smin : std::numeric_limits<double>::infinity();
    return rec;
}

EstimatorState init(const Eigen::VectorXd& theta0, const Eigen::MatrixXd& R,
                    const ForgettingStrategy& strategy) {
    strategy.validate();
    if (R.rows() != R.cols()) {
        throw DimensionMismatch("prior weight must be square");
    }
    if (theta0.size() != R.rows()) {
        throw DimensionMismatch("initial estimate length must match the prior weight dimension");
    }
    if (!is_spd(R)) {
        throw NonSPDInput("prior weight must be symmetric positive definite");
    }
    EstimatorState state;
    state.k = 0;
    state.theta = theta0;
    state.P = spd_inverse(R);
    state.Pinv_cache = symmetrize(R);
    state.strategy = strategy;
    if (strategy.tag == Forgetting::VariableDirection && strategy.cost_consistent) {
        state.vdf_cost = VdfCostState{symmetrize(R), theta0};
    }
    return state;
}

std::pair<EstimatorState, TraceRecord> step_covariance(const EstimatorState& state,
                                                       const DataPoint& d) {
    check_dims(state, d);
    check_uniform(state);
    const double lambda = state.strategy.lambda;
    const Eigen::Index p = d.p();

    TraceRecord rec = make_trace(state, d);

    // theta first through the p x p solve, then the covariance.
    const Eigen::MatrixXd G = state.P * d.phi.transpose();  // n x p
    const Eigen::MatrixXd S =
        symmetrize(lambda * Eigen::MatrixXd::Identity(p, p) + d.phi * G);
    const Eigen::MatrixXd K = spd_solve(S, G.transpose()).transpose();  // n x p

    EstimatorState next = state;
    next.k = state.k + 1;
    next.theta = state.theta + K * (d.y - d.phi * state.theta);
    next.P = symmetrize((state.P - K * G.transpose()) / lambda);
    if (state.Pinv_cache) {
        next.Pinv_cache =
            symmetrize(lambda * (*state.Pinv_cache) + d.phi.transpose() * d.phi);
    }
    if (!next.theta.allFinite() || !next.P.allFinite()) {
        throw NumericalBreakdown("covariance update produced non-finite values");
    }
    return {std::move(next), std::move(rec)};
}

std::pair<EstimatorState, TraceRecord> step_information(const EstimatorState& state,
                                                        const DataPoint& d) {
    check_dims(state, d);
    check_uniform(state);
    const double lambda = state.strategy.lambda;

    TraceRecord rec = make_trace(state, d);

    const Eigen::MatrixXd Pinv = state.information_matrix();
    const Eigen::MatrixXd Pinv_next =
        symmetrize(lambda * Pinv + d.phi.transpose() * d.phi);

    EstimatorState next = state;
    next.k = state.k + 1;
    next.P = spd_inverse(Pinv_next);
    next.Pinv_cache = Pinv_next;
    next.theta = state.theta + next.P * d.phi.transpose() * (d.y - d.phi * state.theta);
    if (!next.theta.allFinite()) {
        throw NumericalBreakdown("information update produced non-finite values");
    }
    return {std::move(next), std::move(rec)};
}

Eigen::VectorXd batch_solve(const History& history, double lambda, const Eigen::MatrixXd& R,
                            const Eigen::VectorXd& theta0) {
    if (history.empty()) {
        throw InsufficientData("batch solve needs at least one data point");
    }
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw ParameterOutOfRange("forgetting factor must lie in (0, 1]");
    }
    const Eigen::Index n = theta0.size();
    if (R.rows() != n || R.cols() != n) {
        throw DimensionMismatch("prior weight dimension must match the estimate length");
    }
    const long k = static_cast<long>(history.size()) - 1;
    Eigen::MatrixXd A = std::pow(lambda, k + 1) * symmetrize(R);
    Eigen::VectorXd b = std::pow(lambda, k + 1) * (symmetrize(R) * theta0);
    for (long i = 0; i <= k; ++i) {
        const DataPoint& d = history[static_cast<std::size_t>(i)];
        if (d.n() != n) {
            throw DimensionMismatch("history entry dimension mismatch");
        }
        const double w = std::pow(lambda, k - i);
        A.noalias() += w * d.phi.transpose() * d.phi;
        b.noalias() += w * d.phi.transpose() * d.y;
    }
    return spd_solve(symmetrize(A), b);
}

Eigen::VectorXd predicted_error(const EstimatorState& state, const DataPoint& d) {
    check_dims(state, d);
    return d.phi * state.theta - d.y;
}

double lyapunov_value(const EstimatorState& state, const Eigen::VectorXd& theta_true) {
    if (theta_true.size() != state.n()) {
        throw DimensionMismatch("true parameter length must match the estimate length");
    }
    const Eigen::VectorXd err = state.theta - theta_true;
    double v = 0.0;
    if (state.Pinv_cache) {
        v = err.dot(*state.Pinv_cache * err);
    } else {
        v = err.dot(spd_solve(state.P, err));
    }
    return std::max(v, 0.0);
}

Eigen::MatrixXd error_transition_product(const History& history, double lambda,
                                         const Eigen::MatrixXd& R) {
    if (history.empty()) {
        throw InsufficientData("transition product needs at least one data point");
    }
    const Eigen::Index n = history.front().n();
    EstimatorState state = init(Eigen::VectorXd::Zero(n), R, ForgettingStrategy::uniform(lambda));
    Eigen::MatrixXd product = Eigen::MatrixXd::Identity(n, n);
    for (const DataPoint& d : history) {
        auto [next, rec] = step_information(state, d);
        product = (Eigen::MatrixXd::Identity(n, n) - next.P * d.phi.transpose() * d.phi) * product;
        state = std::move(next);
    }
    return product;
}

KalmanState kalman_predictor_step(const KalmanState& state, const Eigen::MatrixXd& A,
                                  const Eigen::MatrixXd& B, const Eigen::MatrixXd& C,
                                  const Eigen::MatrixXd& Q, const Eigen::MatrixXd& Rn,
                                  const Eigen::VectorXd& u, const Eigen::VectorXd& y) {
    const Eigen::Index n = state.xhat.size();
    const Eigen::Index p = C.rows();
    if (A.rows() != n || A.cols() != n || C.cols() != n || Q.rows() != n || Q.cols() != n ||
        Rn.rows() != p || Rn.cols() != p || y.size() != p || B.rows() != n ||
        B.cols() != u.size() || state.P.rows() != n || state.P.cols() != n) {
        throw DimensionMismatch("inconsistent predictor dimensions");
    }
    const Eigen::MatrixXd CP = C * state.P;                      // p x n
    const Eigen::MatrixXd S = symmetrize(Rn + CP * C.transpose());
    const Eigen::MatrixXd APC = A * CP.transpose();              // n x p
    const Eigen::MatrixXd K = spd_solve(S, APC.transpose()).transpose();

    KalmanState next;
    next.xhat = A * state.xhat + B * u + K * (y - C * state.xhat);
    next.P = symmetrize(A * state.P * A.transpose() + Q - K * APC.transpose());
    if (!next.xhat.allFinite() || !next.P.allFinite()) {
        throw NumericalBreakdown("predictor update produced non-finite values");
    }
    return next;
}

}  // namespace rls
