#pragma once

#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rls/estimator.hpp"

namespace rls {

/// Name of the deterministic generator recorded in trace headers.
inline constexpr const char* kPrngName = "mt19937_64/box-muller";

/// sin(2 pi k / 17) + sin(2 pi k / 23) + sin(2 pi k / 53).
double three_sine(long k);

/// SISO transfer function num(q)/den(q) in descending powers of the
/// forward-shift operator; den monic, deg(num) < deg(den). Simulated as the
/// implied difference equation with zero initial conditions.
struct LtiSiso {
    Eigen::VectorXd num;
    Eigen::VectorXd den;

    LtiSiso(Eigen::VectorXd num_in, Eigen::VectorXd den_in);

    Eigen::Index order() const { return den.size() - 1; }
};

std::vector<double> simulate(const LtiSiso& sys, const std::vector<double>& u);

/// Row regressor [u_{k-1} ... u_{k-nb}  y_{k-1} ... y_{k-na}], zero-padded
/// before time 0.
Eigen::RowVectorXd arx_regressor(const std::vector<double>& u, const std::vector<double>& y,
                                 long k, int nb, int na);

/// Parameter vector that makes y_k = arx_regressor(...) * theta reproduce the
/// difference equation of `sys`. Derived mechanically from (num, den); nb and
/// na must cover the system order.
Eigen::VectorXd arx_theta(const LtiSiso& sys, int nb, int na);

/// Deterministic zero-mean Gaussian stream (Box-Muller over mt19937_64).
class GaussianWhite {
public:
    GaussianWhite(std::uint64_t seed, double stddev);
    double next();

private:
    std::mt19937_64 rng_;
    double stddev_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

enum class GeneratorKind {
    ThreeSine,
    Constant,
    SwitchedThreeSineToConstant,
    GaussianWhite,
    HarmonicDecay,
    ZeroAfter,
    SubspaceSine,
};

/// Deterministic source description. The first four kinds are scalar input
/// streams; the last three produce scripted regressor/measurement pairs.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Constant;
    double constant_value = 1.0;          // Constant / SwitchedThreeSineToConstant level
    long switch_step = 0;                 // SwitchedThreeSineToConstant / ZeroAfter cutover
    std::uint64_t seed = 0;               // GaussianWhite
    double stddev = 1.0;                  // GaussianWhite
    double phibar = 1.0;                  // ZeroAfter pre-cutover level
    Eigen::VectorXd theta_true;           // scripted kinds; kind-specific default if empty

    void validate() const;
};

/// Scalar input stream u_0..u_{steps-1} for the input kinds.
std::vector<double> generate_input(const GeneratorSpec& spec, long steps);

/// Exact (phi, y) sequences for the scripted regressor kinds, y = phi * theta.
std::vector<DataPoint> scripted_regressors(const GeneratorSpec& spec, long steps);

/// Default true parameter of a scripted kind (e.g. [0.4 1.4] for SubspaceSine).
Eigen::VectorXd scripted_default_theta(GeneratorKind kind);

std::string to_string(GeneratorKind kind);

}  // namespace rls
