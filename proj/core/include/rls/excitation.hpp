#pragma once

#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "rls/errors.hpp"

namespace rls {

/// Windowed Gram matrix F_{j,j+N} = sum_{i=j}^{j+N} phi_i^T phi_i.
struct WindowGram {
    long j = 0;
    long N = 0;
    Eigen::MatrixXd F;      // symmetric PSD n x n
    Eigen::VectorXd sigma;  // singular values, descending
};

/// Scan verdict over all complete windows of the available data. The verdict
/// is observed-data only: persistency proper quantifies over every window of
/// the infinite sequence.
struct PEReport {
    long N = 0;
    double tol_rel = 0.0;    // caller-supplied relative tolerance
    double tol = 0.0;        // resolved absolute threshold, tol_rel * beta_hat
    double alpha_hat = 0.0;  // min over windows of sigma_min(F)
    double beta_hat = 0.0;   // max over windows of sigma_max(F)
    bool is_pe = false;      // alpha_hat > tol
    std::vector<WindowGram> windows;
};

WindowGram window_gram(const std::vector<Eigen::MatrixXd>& regressors, long j, long N);

PEReport pe_scan(const std::vector<Eigen::MatrixXd>& regressors, long N, double tol = 1e-12);

/// sigma_max / sigma_min of an SPD matrix.
double condition_number(const Eigen::MatrixXd& P);

struct ScalarBounds {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
};

/// Spectral bounds on P_k^{-1} for lambda = 1 under persistency:
///   floor(k/(N+1)) alpha + sigma_min(P_0^{-1})  <=  sigma(P_k^{-1})
///   sigma(P_k^{-1})  <=  ceil(k/(N+1)) beta + sigma_max(P_0^{-1}),   k >= N+1.
ScalarBounds bound_prop3(long k, long N, double alpha, double beta, const Eigen::MatrixXd& P0inv);

/// Spectral bounds on P_k^{-1} for lambda in (0,1) under persistency, k >= N+1:
///   lambda^N (1-lambda) alpha / (1-lambda^{N+1})  and
///   beta / (1-lambda^{N+1}) + sigma_max(P_N^{-1}).
ScalarBounds bound_prop4(long N, double alpha, double beta, double lambda,
                         const Eigen::MatrixXd& PNinv);

/// Converse window bounds implied by alpha_bar I <= P_k^{-1} <= beta_bar I:
///   (1 + (1-lambda) N) alpha_bar - lambda beta_bar  <=  sigma(F_{j,j+N})
///   sigma(F_{j,j+N})  <=  (1-lambda^{N+1}) / (lambda^N (1-lambda)) beta_bar,
/// valid for N >= (lambda beta_bar - alpha_bar) / ((1-lambda) alpha_bar).
ScalarBounds bound_prop5(double lambda, double alpha_bar, double beta_bar, long N);

/// Variable-direction lower bound on P_k^{-1} under persistency (no upper bound).
ScalarBounds bound_prop10(long N, double alpha, double lambda);

/// Spectrum extrema of one replayed matrix (P_k^{-1} or F window).
struct SpectrumSample {
    long k = 0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
};

enum class BoundKind { Prop3, Prop4, Prop5, Prop10 };

struct BoundCheck {
    BoundKind kind = BoundKind::Prop4;
    long violations = 0;
    double worst_margin = std::numeric_limits<double>::infinity();  // most negative normalized slack
    long first_violation_k = -1;
};

/// Counts bound violations beyond a relative slack (default 1e-9).
/// `trace` and `bounds` must be aligned index-by-index.
BoundCheck check_bounds(const std::vector<SpectrumSample>& trace,
                        const std::vector<ScalarBounds>& bounds, BoundKind kind,
                        double slack = 1e-9);

}  // namespace rls
