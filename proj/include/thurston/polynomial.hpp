#pragma once

#include "thurston/mp.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace thurston {

using mp::PrecisionContext;
using mp::Real;
using mp::RealVector;

/// Dense real polynomial a_0 + a_1 x + ... + a_d x^d with multiprecision
/// coefficients. The zero polynomial is stored as a single zero coefficient.
class Polynomial {
public:
    Polynomial() : coeffs_{Real()} {}
    explicit Polynomial(RealVector ascending);

    static Polynomial constant(const Real& c) { return Polynomial(RealVector{c}); }
    /// a + b x
    static Polynomial linear(const Real& a, const Real& b) { return Polynomial(RealVector{a, b}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RealVector& coefficients() const { return coeffs_; }
    const Real& operator[](std::size_t i) const { return coeffs_[i]; }
    const Real& leading() const { return coeffs_.back(); }

    Real operator()(const Real& x) const;
    /// Value and first derivative in one Horner pass.
    std::pair<Real, Real> eval_with_derivative(const Real& x) const;

    Polynomial derivative() const;
    /// Sum of coefficients, i.e. the value at 1.
    Real coefficient_sum() const;

    /// p(a + b t) as a polynomial in t.
    Polynomial compose_affine(const Real& a, const Real& b) const;

    /// Drops leading coefficients with |a_i| <= tol.
    Polynomial trimmed(const Real& tol) const;

    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Real& s);
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Real& s) { return a *= s; }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

    std::vector<std::string> to_strings(int digits) const;

private:
    RealVector coeffs_;
};

/// sign * prod (x - roots[i])^mult[i], expanded in the monomial basis.
/// Roots must be strictly increasing.
Polynomial poly_from_roots(std::span<const Real> roots, std::span<const int> multiplicities, int sign,
                           const PrecisionContext& ctx);

/// P with P' = p and P(base_point) = base_value.
Polynomial antiderivative(const Polynomial& p, const Real& base_point, const Real& base_value);

/// integral of p over [a, b].
Real definite_integral(const Polynomial& p, const Real& a, const Real& b);

/// Lap endpoint; nullopt stands for -inf (as lower bound) or +inf (as upper bound).
using LapBound = std::optional<Real>;

class RootSolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    int max_doublings = 200;
    int max_iterations = 2000;
};

/// Finds x in [lo, hi] with p(x) = target, where p is monotone on the lap in
/// the given orientation (+1 increasing, -1 decreasing). Unbounded ends are
/// bracketed by doubling outward. Uses bisection with Newton polishing;
/// Newton steps that leave the bracket fall back to bisection.
Real solve_monotone(const Polynomial& p, const Real& target, const LapBound& lo, const LapBound& hi,
                    int orientation, const PrecisionContext& ctx, const SolveOptions& opts = {});

}  // namespace thurston
