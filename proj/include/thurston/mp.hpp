#pragma once

// Multiprecision scalars on top of MPFR.
//
// A Real carries its own binary precision. Arithmetic results take the larger
// precision of their operands, so a computation seeded from values created in
// a PrecisionContext stays at that context's precision without any global
// state. This makes independent runs safe to execute on different threads.

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace thurston::mp {

class Real {
public:
    Real();
    Real(double value, mpfr_prec_t bits);
    Real(long value, mpfr_prec_t bits);
    Real(int value, mpfr_prec_t bits) : Real(static_cast<long>(value), bits) {}
    Real(std::string_view decimal, mpfr_prec_t bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    /// Same value rounded to `bits`.
    Real rounded(mpfr_prec_t bits) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal string with `digits` significant digits ("%.*Rg" style).
    std::string str(int digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real& operator+=(long rhs);
    Real& operator-=(long rhs);
    Real& operator*=(long rhs);
    Real& operator/=(long rhs);

    friend Real operator-(const Real& a);
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator-(long a, const Real& b);
    friend Real operator*(const Real& a, long b);
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b);
    friend Real operator/(long a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend std::partial_ordering operator<=>(const Real& a, long b);
    friend bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
    friend std::partial_ordering operator<=>(const Real& a, int b) { return a <=> static_cast<long>(b); }
    friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) == 0 && !mpfr_nan_p(a.v_); }
    friend std::partial_ordering operator<=>(const Real& a, double b);

    friend Real abs(const Real& a);
    friend Real sqrt(const Real& a);
    friend Real cos(const Real& a);
    friend Real pow(const Real& base, const Real& exponent);
    friend Real pow(const Real& base, long exponent);
    friend Real ldexp(const Real& a, long exp2);
    friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
    friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

private:
    explicit Real(mpfr_prec_t bits);  // NaN with given precision
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real const_pi(mpfr_prec_t bits);

using RealVector = std::vector<Real>;

/// Working precision for a computation. Values are created through the
/// context; derived values inherit its precision automatically.
class PrecisionContext {
public:
    static constexpr int kMinDigits = 15;
    static constexpr int kGuardDigits = 3;

    explicit PrecisionContext(int digits = 40);

    int digits() const { return digits_; }
    mpfr_prec_t bits() const { return bits_; }

    /// tau = 10^(-digits + guard)
    const Real& tolerance() const { return tau_; }

    Real make(double value) const { return Real(value, bits_); }
    Real make(long value) const { return Real(value, bits_); }
    Real make(int value) const { return Real(static_cast<long>(value), bits_); }
    Real parse(std::string_view decimal) const { return Real(decimal, bits_); }
    Real zero() const { return Real(0L, bits_); }
    Real one() const { return Real(1L, bits_); }
    /// p/q exactly rounded.
    Real ratio(long p, long q) const;
    /// 10^e
    Real pow10(int e) const;
    Real pi() const { return const_pi(bits_); }

    /// Re-round a value into this context.
    Real adopt(const Real& x) const { return x.rounded(bits_); }
    RealVector adopt(const RealVector& xs) const;

    /// Tolerance-based equality |a - b| <= tau * max(1, |a|, |b|).
    bool equal(const Real& a, const Real& b) const;
    bool less(const Real& a, const Real& b) const { return a < b && !equal(a, b); }

    std::string format(const Real& x) const { return x.str(digits_); }
    std::string format(const Real& x, int digits) const { return x.str(digits); }

private:
    int digits_;
    mpfr_prec_t bits_;
    Real tau_;
};

/// Context with a different digit count; existing values are re-rounded with adopt().
PrecisionContext set_precision(const PrecisionContext& ctx, int digits);

/// Bits needed to represent `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits);

}  // namespace thurston::mp
