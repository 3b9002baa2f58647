#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rls/forgetting.hpp"
#include "rls/signalgen.hpp"

namespace rls {

inline constexpr const char* kToolVersion = "rlscore 1.0.0";

/// Divergence guard threshold: a run aborts with a flagged final row once
/// kappa(P_k) exceeds this or any traced value is non-finite.
inline constexpr double kKappaGuard = 1e14;

enum class RegressorKind {
    Scripted,      // scripted (phi, y) pairs straight from the generator
    ArxFromLti,    // simulate an LTI system, regressor from input/output taps
    SignalWindow,  // phi_k = [u_k u_{k-1} ... u_{k-taps+1}]
};

struct ScenarioOutputs {
    bool with_V = false;
    bool with_psi = false;
};

struct Scenario {
    std::string name;
    std::string description;

    RegressorKind regressor = RegressorKind::Scripted;
    GeneratorSpec gen;
    std::optional<LtiSiso> sys;  // ArxFromLti
    int nb = 0;                  // ArxFromLti input taps
    int na = 0;                  // ArxFromLti output taps
    int window_taps = 2;         // SignalWindow

    std::optional<Eigen::VectorXd> theta_true;  // scenario metadata, never fed to the estimator
    ForgettingStrategy strategy;
    Eigen::VectorXd theta0;  // empty means zeros
    double r_scale = 1.0;    // R = r_scale * I

    long steps = 1000;
    std::uint64_t seed = 0;
    long pe_window = 10;
    ScenarioOutputs outputs;

    Eigen::Index dimension() const;
    void validate() const;  // throws ConfigError with field-level messages
};

struct RunResult {
    Scenario scenario;  // echo, with any overrides applied
    std::vector<TraceRecord> trace;
    EstimatorState final_state;
    bool guard_tripped = false;
    long guard_step = -1;
    std::string guard_reason;
};

/// Deterministic data for the scenario (regressor/measurement pairs).
std::vector<DataPoint> build_data(const Scenario& sc, long steps);

RunResult run_scenario(const Scenario& sc);

const std::vector<Scenario>& builtin_scenarios();

/// Throws ConfigError when the name is unknown.
const Scenario& find_builtin(const std::string& name);

/// JSON round trip for scenario files and the machine-readable catalog.
Scenario scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const Scenario& sc);

}  // namespace rls
