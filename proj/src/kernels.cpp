#include "thurston/kernels.hpp"

#include "thurston/critvals.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace thurston::kernels {

namespace {

// d s_i / d c_m for a single column m, all rows i.
void partials_column(const RealVector& points, const std::vector<int>& k, std::size_t m,
                     const PrecisionContext& ctx, RealVector& out, std::size_t cols) {
    RealVector roots;
    std::vector<int> mult;
    for (std::size_t l = 0; l < points.size(); ++l) {
        const int e = k[l] - (l == m ? 1 : 0);
        if (e > 0) {
            roots.push_back(points[l]);
            mult.push_back(e);
        }
    }
    // d/dc_m of prod (x - c_l)^{k_l} = -k_m * prod with k_m lowered by one.
    const Polynomial reduced = poly_from_roots(roots, mult, 1, ctx);
    const Polynomial primitive = antiderivative(reduced, ctx.zero(), ctx.zero());
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        Real integral = primitive(points[i + 1]) - primitive(points[i]);
        integral *= static_cast<long>(-k[m] * gap_sign(k, i));
        out[i * cols + m] = std::move(integral);
    }
}

}  // namespace

CriticalPointPartials critical_point_partials_serial(const RealVector& points, const std::vector<int>& multiplicities,
                                                     const PrecisionContext& ctx) {
    CriticalPointPartials d;
    d.rows = points.size() - 1;
    d.cols = points.size();
    d.values.assign(d.rows * d.cols, ctx.zero());
    for (std::size_t m = 0; m < d.cols; ++m) partials_column(points, multiplicities, m, ctx, d.values, d.cols);
    return d;
}

CriticalPointPartials critical_point_partials_parallel(const RealVector& points,
                                                       const std::vector<int>& multiplicities,
                                                       const PrecisionContext& ctx) {
    CriticalPointPartials d;
    d.rows = points.size() - 1;
    d.cols = points.size();
    d.values.assign(d.rows * d.cols, ctx.zero());
    const auto cols = static_cast<long>(d.cols);
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (long m = 0; m < cols; ++m) {
        try {
            partials_column(points, multiplicities, static_cast<std::size_t>(m), ctx, d.values, d.cols);
        } catch (...) {
#pragma omp critical(thurston_kernel_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return d;
}

RealVector lap_solve_serial(const Polynomial& p, const std::vector<LapSolveTask>& tasks, const PrecisionContext& ctx) {
    RealVector out;
    out.reserve(tasks.size());
    for (const auto& t : tasks) out.push_back(solve_monotone(p, t.target, t.lo, t.hi, t.orientation, ctx));
    return out;
}

RealVector lap_solve_parallel(const Polynomial& p, const std::vector<LapSolveTask>& tasks,
                              const PrecisionContext& ctx) {
    RealVector out(tasks.size(), ctx.zero());
    const auto count = static_cast<long>(tasks.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        const auto& t = tasks[static_cast<std::size_t>(i)];
        try {
            out[static_cast<std::size_t>(i)] = solve_monotone(p, t.target, t.lo, t.hi, t.orientation, ctx);
        } catch (...) {
#pragma omp critical(thurston_kernel_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

RealVector sample_serial(const Polynomial& p, const RealVector& xs) {
    RealVector out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(p(x));
    return out;
}

RealVector sample_parallel(const Polynomial& p, const RealVector& xs) {
    RealVector out(xs.size());
    const auto count = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = p(xs[static_cast<std::size_t>(i)]);
    return out;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace thurston::kernels
