#include "thurston/polynomial.hpp"

#include <algorithm>
#include <tuple>

namespace thurston {

Polynomial::Polynomial(RealVector ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty()) coeffs_.emplace_back();
}

Real Polynomial::operator()(const Real& x) const {
    Real acc = coeffs_.back();
    for (auto i = coeffs_.size() - 1; i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

std::pair<Real, Real> Polynomial::eval_with_derivative(const Real& x) const {
    Real value = coeffs_.back();
    Real slope = x * 0L;
    for (auto i = coeffs_.size() - 1; i-- > 0;) {
        slope *= x;
        slope += value;
        value *= x;
        value += coeffs_[i];
    }
    return {std::move(value), std::move(slope)};
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial::constant(coeffs_[0] * 0L);
    RealVector out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
    return Polynomial(std::move(out));
}

Real Polynomial::coefficient_sum() const {
    Real acc = coeffs_[0];
    for (std::size_t i = 1; i < coeffs_.size(); ++i) acc += coeffs_[i];
    return acc;
}

Polynomial Polynomial::compose_affine(const Real& a, const Real& b) const {
    // Horner in polynomial arithmetic: acc = acc * (a + b t) + c_i
    const Polynomial inner = Polynomial::linear(a, b);
    Polynomial acc = Polynomial::constant(coeffs_.back());
    for (auto i = coeffs_.size() - 1; i-- > 0;) {
        acc *= inner;
        acc.coeffs_[0] += coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::trimmed(const Real& tol) const {
    RealVector out = coeffs_;
    while (out.size() > 1 && abs(out.back()) <= tol) out.pop_back();
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    const auto& a = coeffs_;
    const auto& b = rhs.coeffs_;
    RealVector out(a.size() + b.size() - 1, a[0] * 0L);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator*=(const Real& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
    const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
    RealVector out = big;
    for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    RealVector neg;
    neg.reserve(b.coeffs_.size());
    for (const auto& c : b.coeffs_) neg.push_back(-c);
    return a + Polynomial(std::move(neg));
}

std::vector<std::string> Polynomial::to_strings(int digits) const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str(digits));
    return out;
}

Polynomial poly_from_roots(std::span<const Real> roots, std::span<const int> multiplicities, int sign,
                           const PrecisionContext& ctx) {
    if (roots.size() != multiplicities.size()) {
        throw std::invalid_argument("poly_from_roots: roots and multiplicities differ in length");
    }
    if (sign != 1 && sign != -1) throw std::invalid_argument("poly_from_roots: sign must be +1 or -1");
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (!(roots[i - 1] < roots[i])) {
            throw std::invalid_argument("poly_from_roots: roots must be strictly increasing");
        }
    }
    Polynomial acc = Polynomial::constant(ctx.make(sign));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (multiplicities[i] < 1) throw std::invalid_argument("poly_from_roots: multiplicity must be positive");
        const Polynomial factor = Polynomial::linear(-ctx.adopt(roots[i]), ctx.one());
        for (int k = 0; k < multiplicities[i]; ++k) acc *= factor;
    }
    return acc;
}

Polynomial antiderivative(const Polynomial& p, const Real& base_point, const Real& base_value) {
    const auto& c = p.coefficients();
    RealVector out;
    out.reserve(c.size() + 1);
    out.push_back(c[0] * 0L);
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c[i] / static_cast<long>(i + 1));
    Polynomial P(std::move(out));
    RealVector shifted = P.coefficients();
    shifted[0] = base_value - P(base_point);
    return Polynomial(std::move(shifted));
}

Real definite_integral(const Polynomial& p, const Real& a, const Real& b) {
    const Polynomial P = antiderivative(p, a, a * 0L);
    return P(b);
}

namespace {

// h(x) = orientation * (p(x) - target), increasing on the lap.
struct Oriented {
    const Polynomial& p;
    const Real& target;
    int orientation;

    Real value(const Real& x) const {
        Real v = p(x) - target;
        return orientation > 0 ? v : -v;
    }
    std::pair<Real, Real> value_slope(const Real& x) const {
        auto [v, d] = p.eval_with_derivative(x);
        v -= target;
        if (orientation < 0) return {-v, -d};
        return {std::move(v), std::move(d)};
    }
};

}  // namespace

Real solve_monotone(const Polynomial& p, const Real& target, const LapBound& lo, const LapBound& hi,
                    int orientation, const PrecisionContext& ctx, const SolveOptions& opts) {
    if (orientation != 1 && orientation != -1) throw std::invalid_argument("solve_monotone: orientation must be +1 or -1");
    if (lo && hi && *hi < *lo) throw std::invalid_argument("solve_monotone: empty lap");

    const Oriented h{p, target, orientation};
    const Real slack = ctx.tolerance() * max(ctx.one(), abs(target)) * 10L;

    Real a = ctx.zero();
    Real b = ctx.zero();
    Real ha = ctx.zero();
    Real hb = ctx.zero();

    if (lo) {
        a = ctx.adopt(*lo);
        ha = h.value(a);
        if (ha > 0L) {
            if (ha <= slack) return a;
            throw RootSolveError("target " + target.str(12) + " below lap range");
        }
    } else {
        const Real anchor = hi ? ctx.adopt(*hi) : ctx.zero();
        Real step = ctx.one();
        int k = 0;
        for (;; ++k) {
            if (k > opts.max_doublings) throw RootSolveError("bracket expansion towards -inf exceeded cap");
            a = anchor - step;
            ha = h.value(a);
            if (ha <= 0L) break;
            step *= 2L;
        }
    }
    if (hi) {
        b = ctx.adopt(*hi);
        hb = h.value(b);
        if (hb < 0L) {
            if (-hb <= slack) return b;
            throw RootSolveError("target " + target.str(12) + " above lap range");
        }
    } else {
        const Real anchor = lo ? ctx.adopt(*lo) : ctx.zero();
        Real step = ctx.one();
        int k = 0;
        for (;; ++k) {
            if (k > opts.max_doublings) throw RootSolveError("bracket expansion towards +inf exceeded cap");
            b = anchor + step;
            hb = h.value(b);
            if (hb >= 0L) break;
            step *= 2L;
        }
    }
    if (ha == 0L) return a;
    if (hb == 0L) return b;

    // Safeguarded Newton (bisection whenever Newton leaves the bracket or stalls).
    const Real eps = ldexp(ctx.one(), -(ctx.bits() - 4));
    Real x = (a + b) / 2L;
    Real dx_old = b - a;
    Real dx = dx_old;
    auto [fx, dfx] = h.value_slope(x);
    for (int it = 0; it < opts.max_iterations; ++it) {
        if (fx == 0L) return x;
        const bool outside = ((x - b) * dfx - fx) * ((x - a) * dfx - fx) > 0L;
        const bool slow = abs(fx * 2L) > abs(dx_old * dfx);
        if (outside || slow || dfx.is_zero()) {
            dx_old = dx;
            dx = (b - a) / 2L;
            x = a + dx;
        } else {
            dx_old = dx;
            dx = fx / dfx;
            x -= dx;
        }
        if (abs(dx) <= eps * max(ctx.one(), abs(x)) || b - a <= eps * max(ctx.one(), max(abs(a), abs(b)))) {
            return x;
        }
        std::tie(fx, dfx) = h.value_slope(x);
        if (fx < 0L) {
            a = x;
        } else {
            b = x;
        }
    }
    throw RootSolveError("solve_monotone: iteration cap reached");
}

}  // namespace thurston
