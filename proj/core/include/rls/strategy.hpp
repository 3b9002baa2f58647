#pragma once

#include <string>

namespace rls {

enum class Forgetting {
    None,
    Uniform,
    VariableDirection,
    KreisselmeierI,
    KreisselmeierII,
    Cao,
};

/// Tagged forgetting configuration. Only the fields relevant to the tag are
/// meaningful; validate() enforces the per-tag parameter ranges.
struct ForgettingStrategy {
    Forgetting tag = Forgetting::None;
    double lambda = 1.0;   // forgetting factor, (0, 1]
    double epsilon = 1e-8; // information-content threshold (variable-direction only)
    double alpha = 1.0;    // Kreisselmeier floor level
    double beta = 0.0;     // Kreisselmeier variant II shift
    int n_odd = 1;         // Kreisselmeier matrix-power order, odd
    bool cost_consistent = false; // variable-direction theta update with the R_k correction term

    static ForgettingStrategy none();
    static ForgettingStrategy uniform(double lambda);
    static ForgettingStrategy variable_direction(double lambda, double epsilon = 1e-8,
                                                 bool cost_consistent = false);
    static ForgettingStrategy kreisselmeier1(double lambda, double alpha, int n_odd);
    static ForgettingStrategy kreisselmeier2(double lambda, double alpha, double beta, int n_odd);
    static ForgettingStrategy cao(double lambda);

    /// Throws ParameterOutOfRange on invalid parameters for the tag.
    void validate() const;

    /// Short human-readable form, e.g. "vdf lambda=0.9 epsilon=1e-08".
    std::string describe() const;
};

std::string to_string(Forgetting tag);

}  // namespace rls
