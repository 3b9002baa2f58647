#include "rls/strategy.hpp"

#include <cstdio>

#include "rls/errors.hpp"

namespace rls {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

ForgettingStrategy ForgettingStrategy::none() {
    ForgettingStrategy s;
    s.tag = Forgetting::None;
    s.lambda = 1.0;
    return s;
}

ForgettingStrategy ForgettingStrategy::uniform(double lambda) {
    ForgettingStrategy s;
    s.tag = Forgetting::Uniform;
    s.lambda = lambda;
    s.validate();
    return s;
}

ForgettingStrategy ForgettingStrategy::variable_direction(double lambda, double epsilon,
                                                          bool cost_consistent) {
    ForgettingStrategy s;
    s.tag = Forgetting::VariableDirection;
    s.lambda = lambda;
    s.epsilon = epsilon;
    s.cost_consistent = cost_consistent;
    s.validate();
    return s;
}

ForgettingStrategy ForgettingStrategy::kreisselmeier1(double lambda, double alpha, int n_odd) {
    ForgettingStrategy s;
    s.tag = Forgetting::KreisselmeierI;
    s.lambda = lambda;
    s.alpha = alpha;
    s.n_odd = n_odd;
    s.validate();
    return s;
}

ForgettingStrategy ForgettingStrategy::kreisselmeier2(double lambda, double alpha, double beta,
                                                      int n_odd) {
    ForgettingStrategy s;
    s.tag = Forgetting::KreisselmeierII;
    s.lambda = lambda;
    s.alpha = alpha;
    s.beta = beta;
    s.n_odd = n_odd;
    s.validate();
    return s;
}

ForgettingStrategy ForgettingStrategy::cao(double lambda) {
    ForgettingStrategy s;
    s.tag = Forgetting::Cao;
    s.lambda = lambda;
    s.validate();
    return s;
}

void ForgettingStrategy::validate() const {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw ParameterOutOfRange("forgetting factor must lie in (0, 1]");
    }
    switch (tag) {
        case Forgetting::None:
            if (lambda != 1.0) {
                throw ParameterOutOfRange("no-forgetting strategy requires lambda = 1");
            }
            break;
        case Forgetting::VariableDirection:
            if (!(epsilon > 0.0)) {
                throw ParameterOutOfRange("information-content threshold must be positive");
            }
            break;
        case Forgetting::KreisselmeierI:
        case Forgetting::KreisselmeierII:
            if (!(lambda < 1.0)) {
                throw ParameterOutOfRange("Kreisselmeier forgetting requires lambda < 1");
            }
            if (!(alpha > 0.0)) {
                throw ParameterOutOfRange("Kreisselmeier alpha must be positive");
            }
            if (beta < 0.0) {
                throw ParameterOutOfRange("Kreisselmeier beta must be nonnegative");
            }
            if (n_odd < 1 || n_odd % 2 == 0) {
                throw ParameterOutOfRange("Kreisselmeier power must be an odd positive integer");
            }
            break;
        case Forgetting::Uniform:
        case Forgetting::Cao:
            break;
    }
}

std::string ForgettingStrategy::describe() const {
    std::string out = to_string(tag);
    out += " lambda=" + fmt_double(lambda);
    if (tag == Forgetting::VariableDirection) {
        out += " epsilon=" + fmt_double(epsilon);
        if (cost_consistent) {
            out += " cost-consistent";
        }
    } else if (tag == Forgetting::KreisselmeierI || tag == Forgetting::KreisselmeierII) {
        out += " alpha=" + fmt_double(alpha);
        if (tag == Forgetting::KreisselmeierII) {
            out += " beta=" + fmt_double(beta);
        }
        out += " N=" + std::to_string(n_odd);
    }
    return out;
}

std::string to_string(Forgetting tag) {
    switch (tag) {
        case Forgetting::None: return "none";
        case Forgetting::Uniform: return "uniform";
        case Forgetting::VariableDirection: return "vdf";
        case Forgetting::KreisselmeierI: return "kreisselmeier-1";
        case Forgetting::KreisselmeierII: return "kreisselmeier-2";
        case Forgetting::Cao: return "cao";
    }
    return "unknown";
}

}  // namespace rls
