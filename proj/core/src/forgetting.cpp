#include "rls/forgetting.hpp"

#include <cmath>

#include "rls/linalg.hpp"

namespace rls {

namespace {

void check_dims(const EstimatorState& state, const DataPoint& d) {
    if (d.n() != state.n()) {
        throw DimensionMismatch("regressor column count does not match the estimate dimension");
    }
}

void check_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw ParameterOutOfRange("forgetting factor must lie in (0, 1]");
    }
}

Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& A, int n) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(A.rows(), A.cols());
    for (int i = 0; i < n; ++i) {
        out = out * A;
    }
    return out;
}

/// Shared covariance-route VDF update. Returns the advanced state without the
/// theta update applied; the caller finishes theta.
EstimatorState vdf_advance_covariance(const EstimatorState& state, const DataPoint& d,
                                      const ForgettingMatrix& fm) {
    const Eigen::Index p = d.p();
    const Eigen::MatrixXd Pbar = symmetrize(fm.Lambda_inv * state.P * fm.Lambda_inv);
    const Eigen::MatrixXd G = Pbar * d.phi.transpose();  // n x p
    const Eigen::MatrixXd S = symmetrize(Eigen::MatrixXd::Identity(p, p) + d.phi * G);
    const Eigen::MatrixXd K = spd_solve(S, G.transpose()).transpose();

    EstimatorState next = state;
    next.k = state.k + 1;
    next.P = symmetrize(Pbar - K * G.transpose());

    const Eigen::MatrixXd Pinv = state.information_matrix();
    next.Pinv_cache =
        symmetrize(fm.Lambda * Pinv * fm.Lambda + d.phi.transpose() * d.phi);
    if (!next.P.allFinite()) {
        throw NumericalBreakdown("variable-direction update produced non-finite covariance");
    }
    return next;
}

}  // namespace

int InformationDecomposition::rich_count() const {
    int count = 0;
    for (bool b : rich_mask) {
        count += b ? 1 : 0;
    }
    return count;
}

InformationDecomposition decompose_information(const Eigen::MatrixXd& P,
                                               const Eigen::MatrixXd& phi, double epsilon) {
    if (P.rows() != P.cols() || phi.cols() != P.rows()) {
        throw DimensionMismatch("regressor columns must match the covariance dimension");
    }
    if (!(epsilon > 0.0)) {
        throw ParameterOutOfRange("information-content threshold must be positive");
    }
    // Eigen returns the spectrum of P ascending, which is exactly descending
    // order for the singular values of P^{-1}; both share singular vectors.
    const SymEig eig = sym_eig(P);
    if (!(eig.values.minCoeff() > 0.0)) {
        throw SvdFailure("covariance is not positive definite");
    }
    InformationDecomposition decomp;
    decomp.U = eig.vectors;
    decomp.sigma_inv = eig.values.cwiseInverse();
    decomp.psi = phi * decomp.U;
    decomp.col_norms = decomp.psi.colwise().norm();
    decomp.rich_mask.resize(static_cast<std::size_t>(decomp.col_norms.size()));
    for (Eigen::Index i = 0; i < decomp.col_norms.size(); ++i) {
        decomp.rich_mask[static_cast<std::size_t>(i)] = decomp.col_norms(i) > epsilon;
    }
    return decomp;
}

ForgettingMatrix build_forgetting_matrix(const InformationDecomposition& decomp, double lambda) {
    check_lambda(lambda);
    const Eigen::Index n = decomp.U.rows();
    ForgettingMatrix fm;
    fm.lambda_bar_diag = Eigen::VectorXd::Ones(n);
    const double root = std::sqrt(lambda);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (decomp.rich_mask[static_cast<std::size_t>(i)]) {
            fm.lambda_bar_diag(i) = root;
        }
    }
    fm.Lambda = symmetrize(decomp.U * fm.lambda_bar_diag.asDiagonal() * decomp.U.transpose());
    fm.Lambda_inv = symmetrize(decomp.U * fm.lambda_bar_diag.cwiseInverse().asDiagonal() *
                               decomp.U.transpose());
    return fm;
}

std::pair<EstimatorState, TraceRecord> vdf_update(const EstimatorState& state, const DataPoint& d,
                                                  double lambda, double epsilon) {
    check_dims(state, d);
    check_lambda(lambda);

    const InformationDecomposition decomp = decompose_information(state.P, d.phi, epsilon);
    const ForgettingMatrix fm = build_forgetting_matrix(decomp, lambda);

    TraceRecord rec = make_trace(state, d);
    rec.psi_col_norms = decomp.col_norms;

    EstimatorState next = vdf_advance_covariance(state, d, fm);
    next.theta = state.theta + next.P * d.phi.transpose() * (d.y - d.phi * state.theta);
    if (!next.theta.allFinite()) {
        throw NumericalBreakdown("variable-direction update produced non-finite estimate");
    }
    return {std::move(next), std::move(rec)};
}

std::pair<EstimatorState, TraceRecord> vdf_update_cost_consistent(const EstimatorState& state,
                                                                  const DataPoint& d,
                                                                  double lambda, double epsilon,
                                                                  const Eigen::VectorXd& theta0) {
    check_dims(state, d);
    check_lambda(lambda);
    if (theta0.size() != state.n()) {
        throw DimensionMismatch("prior estimate length must match the estimate dimension");
    }
    if (!state.vdf_cost) {
        throw ParameterOutOfRange(
            "cost-consistent update requires a state initialized with that strategy");
    }

    const InformationDecomposition decomp = decompose_information(state.P, d.phi, epsilon);
    const ForgettingMatrix fm = build_forgetting_matrix(decomp, lambda);

    TraceRecord rec = make_trace(state, d);
    rec.psi_col_norms = decomp.col_norms;

    const Eigen::MatrixXd Pinv = state.information_matrix();
    // R_k - R_{k-1} = Lambda P^{-1} Lambda - P^{-1}; no extra inversion needed.
    const Eigen::MatrixXd R_step = symmetrize(fm.Lambda * Pinv * fm.Lambda - Pinv);

    EstimatorState next = vdf_advance_covariance(state, d, fm);
    next.theta = state.theta + next.P * d.phi.transpose() * (d.y - d.phi * state.theta) +
                 next.P * R_step * (theta0 - state.theta);
    next.vdf_cost = VdfCostState{symmetrize(state.vdf_cost->R_prev + R_step), theta0};
    if (!next.theta.allFinite()) {
        throw NumericalBreakdown("cost-consistent update produced non-finite estimate");
    }
    return {std::move(next), std::move(rec)};
}

EstimatorState kreisselmeier_general(const EstimatorState& state, const DataPoint& d,
                                     const Eigen::MatrixXd& M) {
    check_dims(state, d);
    if (M.rows() != state.n() || M.cols() != state.n()) {
        throw DimensionMismatch("stabilization matrix dimension mismatch");
    }
    // (I + M P) P^{-1} + phi^T phi collapses to P^{-1} + M + phi^T phi.
    const Eigen::MatrixXd Pinv = state.information_matrix();
    const Eigen::MatrixXd Pinv_next = symmetrize(Pinv + M + d.phi.transpose() * d.phi);

    EstimatorState next = state;
    next.k = state.k + 1;
    next.P = spd_inverse(Pinv_next);
    next.Pinv_cache = Pinv_next;
    next.theta = state.theta + next.P * d.phi.transpose() * (d.y - d.phi * state.theta);
    if (!next.theta.allFinite()) {
        throw NumericalBreakdown("stabilized update produced non-finite estimate");
    }
    return next;
}

EstimatorState kreisselmeier_update(const EstimatorState& state, const DataPoint& d,
                                    double lambda, double alpha, double beta, int n_odd,
                                    KreisselmeierVariant variant) {
    check_dims(state, d);
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw ParameterOutOfRange("Kreisselmeier forgetting requires lambda in (0, 1)");
    }
    if (!(alpha > 0.0) || beta < 0.0 || n_odd < 1 || n_odd % 2 == 0) {
        throw ParameterOutOfRange("invalid Kreisselmeier parameters");
    }
    const Eigen::Index n = state.n();
    const Eigen::MatrixXd Pinv = state.information_matrix();

    Eigen::MatrixXd M;
    if (variant == KreisselmeierVariant::I) {
        const Eigen::MatrixXd T =
            matrix_power(Eigen::MatrixXd::Identity(n, n) - alpha * state.P, n_odd);
        M = -(1.0 - lambda) * T * Pinv;
    } else {
        const Eigen::MatrixXd T =
            matrix_power(Pinv - alpha * Eigen::MatrixXd::Identity(n, n), n_odd);
        const Eigen::MatrixXd B = symmetrize(Pinv + beta * Eigen::MatrixXd::Identity(n, n));
        Eigen::MatrixXd X = T;
        for (int i = 0; i < n_odd; ++i) {
            X = spd_solve(B, X);
        }
        M = -(1.0 - lambda) * X * Pinv;
    }
    // All factors commute (rational functions of P), so M is symmetric.
    return kreisselmeier_general(state, d, symmetrize(M));
}

EstimatorState cao_update(const EstimatorState& state, const DataPoint& d, double lambda) {
    check_dims(state, d);
    check_lambda(lambda);
    if (d.p() != 1) {
        throw ScalarOnly("directional rank-one forgetting is defined for scalar measurements");
    }
    const Eigen::RowVectorXd phi = d.phi.row(0);

    EstimatorState next = state;
    next.k = state.k + 1;
    if (phi.isZero(0.0)) {
        // Both the inflation and the rank-one downdate vanish with phi = 0.
        return next;
    }

    const Eigen::VectorXd x = spd_solve(state.P, phi.transpose());  // P^{-1} phi^T
    const double s = phi.dot(x);
    if (!(s > 0.0)) {
        throw NumericalBreakdown("regressor quadratic form is not positive");
    }
    const Eigen::MatrixXd Pbar =
        symmetrize(state.P + ((1.0 - lambda) / (lambda * s)) * phi.transpose() * phi);
    const Eigen::MatrixXd Pinv = state.information_matrix();

    const Eigen::VectorXd h = Pbar * phi.transpose();
    const double denom = 1.0 + phi.dot(h);
    next.P = symmetrize(Pbar - (h * h.transpose()) / denom);
    next.Pinv_cache = symmetrize(Pinv - ((1.0 - lambda) / s) * x * x.transpose() +
                                 phi.transpose() * phi);
    next.theta = state.theta + next.P * d.phi.transpose() * (d.y - d.phi * state.theta);
    if (!next.theta.allFinite() || !next.P.allFinite()) {
        throw NumericalBreakdown("directional forgetting update produced non-finite values");
    }
    return next;
}

std::pair<EstimatorState, TraceRecord> step(const EstimatorState& state, const DataPoint& d) {
    switch (state.strategy.tag) {
        case Forgetting::None:
        case Forgetting::Uniform:
            return step_covariance(state, d);
        case Forgetting::VariableDirection:
            if (state.strategy.cost_consistent) {
                if (!state.vdf_cost) {
                    throw ParameterOutOfRange("cost-consistent state is missing its bookkeeping");
                }
                return vdf_update_cost_consistent(state, d, state.strategy.lambda,
                                                  state.strategy.epsilon,
                                                  state.vdf_cost->theta0);
            }
            return vdf_update(state, d, state.strategy.lambda, state.strategy.epsilon);
        case Forgetting::KreisselmeierI:
        case Forgetting::KreisselmeierII: {
            TraceRecord rec = make_trace(state, d);
            EstimatorState next = kreisselmeier_update(
                state, d, state.strategy.lambda, state.strategy.alpha, state.strategy.beta,
                state.strategy.n_odd,
                state.strategy.tag == Forgetting::KreisselmeierI ? KreisselmeierVariant::I
                                                                 : KreisselmeierVariant::II);
            return {std::move(next), std::move(rec)};
        }
        case Forgetting::Cao: {
            TraceRecord rec = make_trace(state, d);
            EstimatorState next = cao_update(state, d, state.strategy.lambda);
            return {std::move(next), std::move(rec)};
        }
    }
    throw ParameterOutOfRange("unknown strategy");
}

}  // namespace rls
