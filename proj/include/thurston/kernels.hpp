#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial reference kept for
// testing; both produce bit-identical results because every task is computed
// independently with the same operations.

#include "thurston/polynomial.hpp"

#include <vector>

namespace thurston::kernels {

/// Partials of s_i with respect to each critical point c_m:
/// rows i = 0..r-2 (gaps), columns m = 0..r-1.
struct CriticalPointPartials {
    std::size_t rows = 0;
    std::size_t cols = 0;
    RealVector values;  // row-major

    const Real& operator()(std::size_t i, std::size_t m) const { return values[i * cols + m]; }
};

CriticalPointPartials critical_point_partials_serial(const RealVector& points, const std::vector<int>& multiplicities,
                                                     const PrecisionContext& ctx);
CriticalPointPartials critical_point_partials_parallel(const RealVector& points,
                                                       const std::vector<int>& multiplicities,
                                                       const PrecisionContext& ctx);

/// One monotone-lap preimage problem: p(x) = target on [lo, hi].
struct LapSolveTask {
    Real target;
    LapBound lo;
    LapBound hi;
    int orientation = 1;
};

/// Results are in task order. Any failing task rethrows after the loop.
RealVector lap_solve_serial(const Polynomial& p, const std::vector<LapSolveTask>& tasks, const PrecisionContext& ctx);
RealVector lap_solve_parallel(const Polynomial& p, const std::vector<LapSolveTask>& tasks,
                              const PrecisionContext& ctx);

RealVector sample_serial(const Polynomial& p, const RealVector& xs);
RealVector sample_parallel(const Polynomial& p, const RealVector& xs);

int max_threads();

}  // namespace thurston::kernels
