#pragma once

// Prescribing critical values: the Douady-Sentenac map from critical-point
// gaps to critical-value differences, its Jacobian, and its inverse.

#include "thurston/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace thurston {

enum class Execution { serial, parallel };

/// r distinct critical points described by their r - 1 consecutive gaps and
/// r multiplicities (as roots of the derivative).
struct PhiProblem {
    RealVector gaps;
    std::vector<int> multiplicities;

    int r() const { return static_cast<int>(multiplicities.size()); }
    /// d = 1 + sum k_i, the degree of the integrated polynomial.
    int degree() const;
};

/// Dense row-major square matrix of multiprecision entries.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t n, const Real& fill) : n_(n), a_(n * n, fill) {}

    std::size_t size() const { return n_; }
    Real& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Real& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    RealVector a_;
};

class SingularJacobian : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NewtonStalled : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContinuationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RealizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solves A x = b by Gaussian elimination with partial pivoting.
RealVector solve_linear(Matrix a, RealVector b, const PrecisionContext& ctx);

/// Critical points from gaps under the centering sum k_i c_i = 0.
RealVector centered_critical_points(const PhiProblem& problem, const PrecisionContext& ctx);

/// Sign of prod (x - c_m)^{k_m} strictly between c_i and c_{i+1}.
int gap_sign(const std::vector<int>& multiplicities, std::size_t i);

/// s_i = |integral of prod (x - c_m)^{k_m} over [c_i, c_{i+1}]|.
RealVector phi(const PhiProblem& problem, const PrecisionContext& ctx);

/// Exact partial derivatives ds_i / d(delta_j).
Matrix phi_jacobian(const PhiProblem& problem, const PrecisionContext& ctx, Execution exec = Execution::parallel);

/// Gaps of the Chebyshev critical points, rescaled by homogeneity so that
/// max_i phi(rho)_i = 1.
RealVector chebyshev_init(const std::vector<int>& multiplicities, const PrecisionContext& ctx);

struct NewtonRecord {
    int iteration = 0;
    Real residual;
    Real step_scale;
};

struct InversionResult {
    RealVector gaps;
    Real residual;
    int iterations = 0;
    std::string method;
    std::vector<NewtonRecord> trace;
};

struct InversionOptions {
    int max_iterations = 200;
    int max_halvings = 60;
    int continuation_steps = 64;
    int max_refinements = 20;
    int polish_iterations = 60;
    Execution exec = Execution::parallel;
};

/// Residual target 10^(-digits + 6), relative to max s.
Real inversion_tolerance(const PrecisionContext& ctx);

/// Damped Newton from the Chebyshev start. Throws NewtonStalled when the
/// residual cannot be reduced.
InversionResult invert_phi(const RealVector& s, const std::vector<int>& multiplicities, const PrecisionContext& ctx,
                           const InversionOptions& opts = {});

/// Path lifting along the segment from phi(rho) to s (RK4), then Newton polish.
InversionResult continuation_invert(const RealVector& s, const std::vector<int>& multiplicities,
                                    const PrecisionContext& ctx, const InversionOptions& opts = {});

/// invert_phi, falling back to continuation_invert when Newton stalls.
InversionResult solve_gaps(const RealVector& s, const std::vector<int>& multiplicities, const PrecisionContext& ctx,
                           const InversionOptions& opts = {});

struct CriticalValueSpec {
    RealVector values;  // one per distinct critical point, left to right
};

struct RealizedMap {
    Polynomial f;
    RealVector critical_points;
    InversionResult inversion;
};

/// Polynomial f with f' = sigma * prod (x - c_i)^{k_i} and f(c_i) = v_i,
/// where sigma is the orientation of the last lap.
RealizedMap realize_critical_values(const CriticalValueSpec& spec, const std::vector<int>& multiplicities,
                                    int last_lap_orientation, const PrecisionContext& ctx,
                                    const InversionOptions& opts = {});

}  // namespace thurston
