#include "thurston/critvals.hpp"

#include "thurston/kernels.hpp"

#include <numeric>

namespace thurston {

namespace {

void check_problem(const PhiProblem& problem) {
    if (problem.multiplicities.empty()) throw std::invalid_argument("at least one critical point is required");
    if (problem.gaps.size() + 1 != problem.multiplicities.size()) {
        throw std::invalid_argument("r critical points need r - 1 gaps");
    }
    for (int k : problem.multiplicities) {
        if (k < 1) throw std::invalid_argument("multiplicities must be positive");
    }
    for (const auto& g : problem.gaps) {
        if (!(g > 0L)) throw std::domain_error("critical gaps must be positive, got " + g.str(12));
    }
}

Real max_abs(const RealVector& v, const PrecisionContext& ctx) {
    Real m = ctx.zero();
    for (const auto& x : v) m = max(m, abs(x));
    return m;
}

RealVector residual(const RealVector& phi_value, const RealVector& target) {
    RealVector out;
    out.reserve(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) out.push_back(phi_value[i] - target[i]);
    return out;
}

bool all_positive(const RealVector& v) {
    for (const auto& x : v) {
        if (!(x > 0L)) return false;
    }
    return true;
}

RealVector normalized_target(const RealVector& s, const PrecisionContext& ctx, Real& scale) {
    for (const auto& x : s) {
        if (!(x > 0L)) throw std::domain_error("critical value gaps must be positive, got " + x.str(12));
    }
    scale = max_abs(s, ctx);
    RealVector out;
    out.reserve(s.size());
    for (const auto& x : s) out.push_back(ctx.adopt(x) / scale);
    return out;
}

// Undo the normalization Phi(delta) = s / scale using Phi(l delta) = l^d Phi(delta).
RealVector rescale_gaps(const RealVector& gaps, const Real& scale, int degree, const PrecisionContext& ctx) {
    const Real factor = pow(scale, ctx.one() / static_cast<long>(degree));
    RealVector out;
    out.reserve(gaps.size());
    for (const auto& g : gaps) out.push_back(g * factor);
    return out;
}

}  // namespace

int PhiProblem::degree() const {
    return 1 + std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

RealVector solve_linear(Matrix a, RealVector b, const PrecisionContext& ctx) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: dimension mismatch");
    Real scale = ctx.zero();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) scale = max(scale, abs(a(i, j)));
    }
    const Real tiny = scale * ldexp(ctx.one(), -(ctx.bits() - 8));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (abs(a(i, col)) > abs(a(pivot, col))) pivot = i;
        }
        if (!(abs(a(pivot, col)) > tiny)) throw SingularJacobian("singular Jacobian in column " + std::to_string(col));
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            const Real factor = a(i, col) / a(col, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
            b[i] -= factor * b[col];
        }
    }
    RealVector x(n, ctx.zero());
    for (std::size_t i = n; i-- > 0;) {
        Real acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

RealVector centered_critical_points(const PhiProblem& problem, const PrecisionContext& ctx) {
    check_problem(problem);
    const std::size_t r = problem.multiplicities.size();
    RealVector points(r, ctx.zero());
    for (std::size_t i = 1; i < r; ++i) points[i] = points[i - 1] + ctx.adopt(problem.gaps[i - 1]);
    Real weighted = ctx.zero();
    long total = 0;
    for (std::size_t i = 0; i < r; ++i) {
        weighted += points[i] * static_cast<long>(problem.multiplicities[i]);
        total += problem.multiplicities[i];
    }
    const Real shift = weighted / total;
    for (auto& p : points) p -= shift;
    return points;
}

int gap_sign(const std::vector<int>& multiplicities, std::size_t i) {
    int above = 0;
    for (std::size_t l = i + 1; l < multiplicities.size(); ++l) above += multiplicities[l];
    return above % 2 == 0 ? 1 : -1;
}

RealVector phi(const PhiProblem& problem, const PrecisionContext& ctx) {
    const RealVector points = centered_critical_points(problem, ctx);
    const Polynomial g = poly_from_roots(points, problem.multiplicities, 1, ctx);
    const Polynomial primitive = antiderivative(g, ctx.zero(), ctx.zero());
    RealVector s;
    s.reserve(problem.gaps.size());
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        Real integral = primitive(points[i + 1]) - primitive(points[i]);
        if (gap_sign(problem.multiplicities, i) < 0) integral = -integral;
        s.push_back(std::move(integral));
    }
    return s;
}

Matrix phi_jacobian(const PhiProblem& problem, const PrecisionContext& ctx, Execution exec) {
    const RealVector points = centered_critical_points(problem, ctx);
    const auto& k = problem.multiplicities;
    const std::size_t r = k.size();
    const std::size_t q = r - 1;
    Matrix jac(q, ctx.zero());
    if (q == 0) return jac;

    const auto partials = exec == Execution::parallel
                              ? kernels::critical_point_partials_parallel(points, k, ctx)
                              : kernels::critical_point_partials_serial(points, k, ctx);

    // c_m = t + sum_{l<m} delta_l with t fixed by centering, so
    // dc_m/d(delta_j) = [j < m] - (sum_{l>j} k_l) / K.
    const long total = std::accumulate(k.begin(), k.end(), 0L);
    for (std::size_t j = 0; j < q; ++j) {
        long above = 0;
        for (std::size_t l = j + 1; l < r; ++l) above += k[l];
        const Real shift = ctx.ratio(above, total);
        for (std::size_t i = 0; i < q; ++i) {
            Real acc = ctx.zero();
            for (std::size_t m = 0; m < r; ++m) {
                Real dc = -shift;
                if (j < m) dc += 1L;
                acc += partials(i, m) * dc;
            }
            jac(i, j) = std::move(acc);
        }
    }
    return jac;
}

RealVector chebyshev_init(const std::vector<int>& multiplicities, const PrecisionContext& ctx) {
    const std::size_t r = multiplicities.size();
    if (r < 1) throw std::invalid_argument("chebyshev_init: at least one critical point is required");
    if (r == 1) return {};
    // Critical points of T_{r+1} are cos(j pi / (r+1)), j = 1..r.
    const Real scale = ctx.make(2L) / pow(ctx.make(4L), ctx.one() / static_cast<long>(r));
    const Real pi = ctx.pi();
    RealVector rho;
    rho.reserve(r - 1);
    for (std::size_t j = 1; j < r; ++j) {
        const Real a = cos(pi * static_cast<long>(j) / static_cast<long>(r + 1));
        const Real b = cos(pi * static_cast<long>(j + 1) / static_cast<long>(r + 1));
        rho.push_back(abs(scale * (a - b)));
    }
    const PhiProblem problem{rho, multiplicities};
    const RealVector s = phi(problem, ctx);
    return rescale_gaps(rho, ctx.one() / max_abs(s, ctx), problem.degree(), ctx);
}

Real inversion_tolerance(const PrecisionContext& ctx) { return ctx.pow10(-ctx.digits() + 6); }

namespace {

// Newton on the normalized problem phi(delta) = target with max target = 1.
InversionResult newton_normalized(const RealVector& target, const std::vector<int>& k, RealVector start,
                                  const PrecisionContext& ctx, const InversionOptions& opts, bool damped) {
    const Real tol = inversion_tolerance(ctx);
    InversionResult result;
    result.method = damped ? "newton" : "newton-polish";
    RealVector rho = std::move(start);
    RealVector f = residual(phi(PhiProblem{rho, k}, ctx), target);
    Real res = max_abs(f, ctx);
    result.trace.push_back({0, res, ctx.one()});

    const int cap = damped ? opts.max_iterations : opts.polish_iterations;
    int it = 0;
    for (; it < cap && res > tol; ++it) {
        const Matrix jac = phi_jacobian(PhiProblem{rho, k}, ctx, opts.exec);
        const RealVector step = solve_linear(jac, f, ctx);
        Real lambda = ctx.one();
        bool accepted = false;
        for (int h = 0; h <= opts.max_halvings; ++h) {
            RealVector cand;
            cand.reserve(rho.size());
            for (std::size_t i = 0; i < rho.size(); ++i) cand.push_back(rho[i] - lambda * step[i]);
            if (all_positive(cand)) {
                RealVector fc = residual(phi(PhiProblem{cand, k}, ctx), target);
                Real rc = max_abs(fc, ctx);
                if (!damped || rc < res) {
                    rho = std::move(cand);
                    f = std::move(fc);
                    res = std::move(rc);
                    accepted = true;
                    break;
                }
            } else if (!damped) {
                break;
            }
            lambda /= 2L;
        }
        result.trace.push_back({it + 1, res, lambda});
        if (!accepted) {
            throw NewtonStalled("Newton stalled at residual " + res.str(6) + " after " + std::to_string(it + 1) +
                                " iterations");
        }
    }
    if (res > tol) {
        throw NewtonStalled("Newton did not reach tolerance: residual " + res.str(6) + " after " +
                            std::to_string(it) + " iterations");
    }
    result.gaps = std::move(rho);
    result.residual = res;
    result.iterations = it;
    return result;
}

}  // namespace

InversionResult invert_phi(const RealVector& s, const std::vector<int>& multiplicities, const PrecisionContext& ctx,
                           const InversionOptions& opts) {
    if (s.size() + 1 != multiplicities.size()) throw std::invalid_argument("invert_phi: need r - 1 target values");
    if (s.empty()) return InversionResult{{}, ctx.zero(), 0, "trivial", {}};
    Real scale;
    const RealVector target = normalized_target(s, ctx, scale);
    InversionResult result = newton_normalized(target, multiplicities, chebyshev_init(multiplicities, ctx), ctx, opts,
                                               /*damped=*/true);
    const int degree = PhiProblem{result.gaps, multiplicities}.degree();
    result.gaps = rescale_gaps(result.gaps, scale, degree, ctx);
    result.residual *= scale;
    return result;
}

InversionResult continuation_invert(const RealVector& s, const std::vector<int>& multiplicities,
                                    const PrecisionContext& ctx, const InversionOptions& opts) {
    if (s.size() + 1 != multiplicities.size()) {
        throw std::invalid_argument("continuation_invert: need r - 1 target values");
    }
    if (s.empty()) return InversionResult{{}, ctx.zero(), 0, "trivial", {}};
    Real scale;
    const RealVector target = normalized_target(s, ctx, scale);
    const RealVector start = chebyshev_init(multiplicities, ctx);
    const RealVector direction = residual(target, phi(PhiProblem{start, multiplicities}, ctx));
    const std::size_t q = start.size();

    // dx/dt = phi'(x)^{-1} (target - phi(start))
    auto velocity = [&](const RealVector& x) {
        return solve_linear(phi_jacobian(PhiProblem{x, multiplicities}, ctx, opts.exec), direction, ctx);
    };
    auto shifted = [&](const RealVector& x, const RealVector& v, const Real& h) {
        RealVector out;
        out.reserve(q);
        for (std::size_t i = 0; i < q; ++i) out.push_back(x[i] + h * v[i]);
        return out;
    };

    RealVector x;
    int steps = opts.continuation_steps;
    bool done = false;
    for (int refinement = 0; refinement <= opts.max_refinements && !done; ++refinement, steps *= 2) {
        x = start;
        const Real h = ctx.one() / static_cast<long>(steps);
        const Real half = h / 2L;
        done = true;
        try {
            for (int step = 0; step < steps; ++step) {
                const RealVector k1 = velocity(x);
                const RealVector x2 = shifted(x, k1, half);
                if (!all_positive(x2)) throw ContinuationFailed("left orthant");
                const RealVector k2 = velocity(x2);
                const RealVector x3 = shifted(x, k2, half);
                if (!all_positive(x3)) throw ContinuationFailed("left orthant");
                const RealVector k3 = velocity(x3);
                const RealVector x4 = shifted(x, k3, h);
                if (!all_positive(x4)) throw ContinuationFailed("left orthant");
                const RealVector k4 = velocity(x4);
                RealVector next;
                next.reserve(q);
                for (std::size_t i = 0; i < q; ++i) {
                    next.push_back(x[i] + h / 6L * (k1[i] + 2L * k2[i] + 2L * k3[i] + k4[i]));
                }
                if (!all_positive(next)) throw ContinuationFailed("left orthant");
                x = std::move(next);
            }
        } catch (const ContinuationFailed&) {
            done = false;
        } catch (const SingularJacobian&) {
            done = false;
        }
    }
    if (!done) throw ContinuationFailed("path lifting left the positive orthant after all step refinements");

    InversionResult result = newton_normalized(target, multiplicities, std::move(x), ctx, opts, /*damped=*/false);
    result.method = "continuation";
    const int degree = PhiProblem{result.gaps, multiplicities}.degree();
    result.gaps = rescale_gaps(result.gaps, scale, degree, ctx);
    result.residual *= scale;
    return result;
}

InversionResult solve_gaps(const RealVector& s, const std::vector<int>& multiplicities, const PrecisionContext& ctx,
                           const InversionOptions& opts) {
    try {
        return invert_phi(s, multiplicities, ctx, opts);
    } catch (const NewtonStalled&) {
    } catch (const SingularJacobian&) {
    }
    return continuation_invert(s, multiplicities, ctx, opts);
}

RealizedMap realize_critical_values(const CriticalValueSpec& spec, const std::vector<int>& multiplicities,
                                    int last_lap_orientation, const PrecisionContext& ctx,
                                    const InversionOptions& opts) {
    const auto& v = spec.values;
    if (v.empty() || v.size() != multiplicities.size()) {
        throw std::invalid_argument("realize_critical_values: one value per critical point is required");
    }
    if (last_lap_orientation != 1 && last_lap_orientation != -1) {
        throw std::invalid_argument("realize_critical_values: orientation must be +1 or -1");
    }

    RealizedMap out;
    if (v.size() == 1) {
        out.critical_points = {ctx.zero()};
        out.inversion = InversionResult{{}, ctx.zero(), 0, "trivial", {}};
    } else {
        RealVector s;
        s.reserve(v.size() - 1);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            Real diff = ctx.adopt(v[i + 1]) - ctx.adopt(v[i]);
            if (diff.is_zero()) throw RealizationError("consecutive critical values coincide");
            s.push_back(abs(diff));
        }
        out.inversion = solve_gaps(s, multiplicities, ctx, opts);
        out.critical_points = centered_critical_points(PhiProblem{out.inversion.gaps, multiplicities}, ctx);
    }
    const Polynomial g = poly_from_roots(out.critical_points, multiplicities, last_lap_orientation, ctx);
    out.f = antiderivative(g, out.critical_points.front(), ctx.adopt(v.front()));

    const Real tol = inversion_tolerance(ctx) * 10L;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Real err = abs(out.f(out.critical_points[i]) - v[i]);
        if (err > tol * max(ctx.one(), abs(v[i]))) {
            throw RealizationError("critical value " + std::to_string(i) + " misses its target by " + err.str(6) +
                                   " (orientation inconsistent with the value pattern?)");
        }
    }
    return out;
}

}  // namespace thurston
