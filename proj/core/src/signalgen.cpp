#include "rls/signalgen.hpp"

#include <cmath>
#include <numbers>

namespace rls {

double three_sine(long k) {
    const double x = 2.0 * std::numbers::pi * static_cast<double>(k);
    return std::sin(x / 17.0) + std::sin(x / 23.0) + std::sin(x / 53.0);
}

LtiSiso::LtiSiso(Eigen::VectorXd num_in, Eigen::VectorXd den_in)
    : num(std::move(num_in)), den(std::move(den_in)) {
    if (den.size() < 2) {
        throw ParameterOutOfRange("denominator must have degree at least one");
    }
    if (den(0) != 1.0) {
        throw ParameterOutOfRange("denominator must be monic");
    }
    if (num.size() < 1 || num.size() >= den.size()) {
        throw ParameterOutOfRange("numerator degree must be below the denominator degree");
    }
}

std::vector<double> simulate(const LtiSiso& sys, const std::vector<double>& u) {
    const long d = static_cast<long>(sys.order());
    const long m = static_cast<long>(sys.num.size()) - 1;
    const long steps = static_cast<long>(u.size());
    std::vector<double> y(u.size(), 0.0);
    // y_k = -sum a_i y_{k-i} + sum b_j u_{k-(d-m)-j}, zero before time 0.
    for (long k = 0; k < steps; ++k) {
        double acc = 0.0;
        for (long i = 1; i <= d; ++i) {
            if (k - i >= 0) {
                acc -= sys.den(i) * y[static_cast<std::size_t>(k - i)];
            }
        }
        for (long j = 0; j <= m; ++j) {
            const long lag = (d - m) + j;
            if (k - lag >= 0) {
                acc += sys.num(j) * u[static_cast<std::size_t>(k - lag)];
            }
        }
        y[static_cast<std::size_t>(k)] = acc;
    }
    return y;
}

Eigen::RowVectorXd arx_regressor(const std::vector<double>& u, const std::vector<double>& y,
                                 long k, int nb, int na) {
    if (nb < 0 || na < 0 || nb + na < 1) {
        throw ParameterOutOfRange("regressor needs at least one tap");
    }
    Eigen::RowVectorXd phi = Eigen::RowVectorXd::Zero(nb + na);
    for (int i = 1; i <= nb; ++i) {
        const long idx = k - i;
        if (idx >= 0 && idx < static_cast<long>(u.size())) {
            phi(i - 1) = u[static_cast<std::size_t>(idx)];
        }
    }
    for (int i = 1; i <= na; ++i) {
        const long idx = k - i;
        if (idx >= 0 && idx < static_cast<long>(y.size())) {
            phi(nb + i - 1) = y[static_cast<std::size_t>(idx)];
        }
    }
    return phi;
}

Eigen::VectorXd arx_theta(const LtiSiso& sys, int nb, int na) {
    const long d = static_cast<long>(sys.order());
    const long m = static_cast<long>(sys.num.size()) - 1;
    if (nb < d - m + m || na < d) {
        // nb must reach lag d (= d-m+m) on the input side, na must cover all
        // denominator taps.
        throw ParameterOutOfRange("tap counts do not cover the system order");
    }
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(nb + na);
    for (long j = 0; j <= m; ++j) {
        const long lag = (d - m) + j;  // coefficient of u_{k-lag}
        theta(lag - 1) = sys.num(j);
    }
    for (long i = 1; i <= d; ++i) {
        theta(nb + i - 1) = -sys.den(i);  // coefficient of y_{k-i}
    }
    return theta;
}

GaussianWhite::GaussianWhite(std::uint64_t seed, double stddev) : rng_(seed), stddev_(stddev) {
    if (!(stddev > 0.0)) {
        throw ParameterOutOfRange("standard deviation must be positive");
    }
}

double GaussianWhite::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_ * stddev_;
    }
    // Box-Muller on (0,1] uniforms keeps the stream pinned by the engine spec.
    const double scale = 1.0 / (static_cast<double>(rng_.max()) + 1.0);
    const double u1 = (static_cast<double>(rng_()) + 1.0) * scale;
    const double u2 = (static_cast<double>(rng_()) + 1.0) * scale;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a) * stddev_;
}

void GeneratorSpec::validate() const {
    switch (kind) {
        case GeneratorKind::GaussianWhite:
            if (!(stddev > 0.0)) {
                throw ParameterOutOfRange("standard deviation must be positive");
            }
            break;
        case GeneratorKind::SwitchedThreeSineToConstant:
        case GeneratorKind::ZeroAfter:
            if (switch_step < 0) {
                throw ParameterOutOfRange("switch step must be nonnegative");
            }
            break;
        default:
            break;
    }
}

std::vector<double> generate_input(const GeneratorSpec& spec, long steps) {
    spec.validate();
    if (steps < 0) {
        throw ParameterOutOfRange("step count must be nonnegative");
    }
    std::vector<double> u(static_cast<std::size_t>(steps), 0.0);
    switch (spec.kind) {
        case GeneratorKind::ThreeSine:
            for (long k = 0; k < steps; ++k) {
                u[static_cast<std::size_t>(k)] = three_sine(k);
            }
            break;
        case GeneratorKind::Constant:
            for (long k = 0; k < steps; ++k) {
                u[static_cast<std::size_t>(k)] = spec.constant_value;
            }
            break;
        case GeneratorKind::SwitchedThreeSineToConstant:
            for (long k = 0; k < steps; ++k) {
                u[static_cast<std::size_t>(k)] =
                    k < spec.switch_step ? three_sine(k) : spec.constant_value;
            }
            break;
        case GeneratorKind::GaussianWhite: {
            GaussianWhite g(spec.seed, spec.stddev);
            for (long k = 0; k < steps; ++k) {
                u[static_cast<std::size_t>(k)] = g.next();
            }
            break;
        }
        default:
            throw ParameterOutOfRange("generator kind does not produce a scalar input stream");
    }
    return u;
}

Eigen::VectorXd scripted_default_theta(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::SubspaceSine: {
            Eigen::VectorXd t(2);
            t << 0.4, 1.4;
            return t;
        }
        case GeneratorKind::HarmonicDecay:
        case GeneratorKind::ZeroAfter:
        case GeneratorKind::Constant:
            return Eigen::VectorXd::Ones(1);
        default:
            throw ParameterOutOfRange("generator kind has no scripted parameter");
    }
}

std::vector<DataPoint> scripted_regressors(const GeneratorSpec& spec, long steps) {
    spec.validate();
    if (steps < 0) {
        throw ParameterOutOfRange("step count must be nonnegative");
    }
    const Eigen::VectorXd theta =
        spec.theta_true.size() > 0 ? spec.theta_true : scripted_default_theta(spec.kind);
    std::vector<DataPoint> data;
    data.reserve(static_cast<std::size_t>(steps));
    for (long k = 0; k < steps; ++k) {
        Eigen::RowVectorXd phi;
        switch (spec.kind) {
            case GeneratorKind::HarmonicDecay:
                phi = Eigen::RowVectorXd::Constant(1, 1.0 / std::sqrt(static_cast<double>(k) + 1.0));
                break;
            case GeneratorKind::ZeroAfter:
                phi = Eigen::RowVectorXd::Constant(1, k < spec.switch_step ? spec.phibar : 0.0);
                break;
            case GeneratorKind::Constant:
                phi = Eigen::RowVectorXd::Constant(1, spec.constant_value);
                break;
            case GeneratorKind::SubspaceSine: {
                const double s =
                    std::sin(2.0 * std::numbers::pi * static_cast<double>(k) / 100.0);
                phi = Eigen::RowVectorXd::Constant(2, s);
                break;
            }
            default:
                throw ParameterOutOfRange("generator kind does not script regressors");
        }
        if (phi.size() != theta.size()) {
            throw DimensionMismatch("scripted parameter length does not match the regressor");
        }
        data.push_back(DataPoint::scalar(phi, phi.dot(theta)));
    }
    return data;
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::ThreeSine: return "three-sine";
        case GeneratorKind::Constant: return "constant";
        case GeneratorKind::SwitchedThreeSineToConstant: return "switched-three-sine";
        case GeneratorKind::GaussianWhite: return "gaussian-white";
        case GeneratorKind::HarmonicDecay: return "harmonic-decay";
        case GeneratorKind::ZeroAfter: return "zero-after";
        case GeneratorKind::SubspaceSine: return "subspace-sine";
    }
    return "unknown";
}

}  // namespace rls
