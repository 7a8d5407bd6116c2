#pragma once

// The pull-back iteration on marked configurations 0 = x_0 < ... < x_n = 1.

#include "thurston/combinatorics.hpp"
#include "thurston/critvals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thurston {

struct MarkedConfiguration {
    RealVector x;
    int step = 0;
};

MarkedConfiguration init_configuration(const Combinatorics& c, const PrecisionContext& ctx);

/// Critical values x_{m_j} for the critical indices j (d_j > 1), left to
/// right, with derivative-root multiplicities d_j - 1.
struct CriticalData {
    std::vector<int> indices;
    std::vector<int> multiplicities;
    CriticalValueSpec values;
};

CriticalData critical_value_vector(const Combinatorics& c, const MarkedConfiguration& x);

/// Orientation (+1/-1) of the last lap of the PL model.
int last_lap_orientation(const Combinatorics& c);

/// A map with the prescribed critical values, before framing.
RealizedMap mapmake(const Combinatorics& c, const CriticalData& data, const PrecisionContext& ctx,
                    const InversionOptions& opts = {});

struct NormalizedMap {
    Polynomial f;
    RealVector critical_points;  // in [0,1], one per critical index
    Real frame_a;                // framing points of the raw map
    Real frame_b;
};

class NormalizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finds the framing points A < B of the raw map and returns f = f_raw o nu
/// with nu(0) = A, nu(1) = B.
NormalizedMap normalize(const Combinatorics& c, const RealizedMap& raw, const PrecisionContext& ctx);

class PullbackError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// x'_j = critical point for critical j, otherwise the lap preimage of prev[m_j].
MarkedConfiguration pullback_step(const Combinatorics& c, const NormalizedMap& map, const MarkedConfiguration& prev,
                                  const PrecisionContext& ctx, Execution exec = Execution::parallel);

/// (1/n) sqrt(sum_j (f(x_j) - x_{m_j})^2)
Real fit_error(const Combinatorics& c, const Polynomial& f, const MarkedConfiguration& x);

/// Maximal runs of consecutive indices whose successive gaps are below threshold.
std::vector<std::vector<int>> detect_collapse(const MarkedConfiguration& x, const Real& threshold);

/// One full iteration: mapmaking, normalization, pullback, fit.
struct StepOutcome {
    CriticalData critical;
    NormalizedMap map;
    MarkedConfiguration next;
    Real fit_error;
    std::string inversion_method;
};

StepOutcome thurston_step(const Combinatorics& c, const MarkedConfiguration& x, const PrecisionContext& ctx,
                          Execution exec = Execution::parallel);

struct StepRecord {
    int step = 0;
    Polynomial f;
    RealVector x;
    RealVector critical_values;
    Real fit_error;
    int digits = 0;
    Real frame_a;
    Real frame_b;
    std::string combinatorics;
};

struct CollapseReport {
    std::vector<std::vector<int>> groups;  // indices of the input combinatorics
    Combinatorics simplified;
    int step = 0;
};

struct RunOptions {
    double tol = 1e-10;
    int max_iter = 100;
    int start_digits = 40;
    int max_digits = 640;
    /// Defaults to 1e-8 / n when unset.
    std::optional<double> collapse_threshold;
    int collapse_window = 3;
    /// Escalate precision when eps fails to drop by stall_factor over stall_window steps.
    double stall_factor = 0.5;
    int stall_window = 4;
    bool trace = false;
    Execution exec = Execution::parallel;
};

struct PrecisionEvent {
    int step = 0;
    int from_digits = 0;
    int to_digits = 0;
    std::string reason;
};

struct RunResult {
    Combinatorics input;
    Combinatorics final_combinatorics;
    Polynomial f;
    RealVector x;
    int iterations = 0;
    Real fit_error;
    bool converged = false;
    int digits = 0;
    std::vector<int> precision_history;  // working digits per iteration
    std::vector<double> error_history;   // eps per iteration
    std::vector<PrecisionEvent> escalations;
    std::optional<CollapseReport> collapse;
    std::vector<StepRecord> trace;
    std::string message;

    explicit RunResult(Combinatorics c) : input(c), final_combinatorics(std::move(c)) {}
};

/// Iterates until eps <= tol, max_iter, or unrecoverable failure. Solver
/// failures are reported in `message` with converged = false.
RunResult run(const Combinatorics& c, const RunOptions& opts = {});

}  // namespace thurston
