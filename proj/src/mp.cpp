#include "thurston/mp.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace thurston::mp {

namespace {

mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real() {
    mpfr_init2(v_, 53);
    mpfr_set_zero(v_, 1);
}

Real::Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); }

Real::Real(double value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(std::string_view decimal, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    std::string text(decimal);
    if (mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(mpfr_prec_t bits) const {
    Real r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Real& Real::operator+=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(v_, rhs.precision(), MPFR_RNDN);
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator+=(long rhs) {
    mpfr_add_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(long rhs) {
    mpfr_sub_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(long rhs) {
    mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(long rhs) {
    mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
    return *this;
}

Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, long b) {
    Real r(a.precision());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, long b) {
    Real r(a.precision());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
    if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, double b) {
    if (mpfr_nan_p(a.v_) || b != b) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_d(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real cos(const Real& a) {
    Real r(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& exponent) {
    Real r(join(base, exponent));
    mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
    return r;
}

Real pow(const Real& base, long exponent) {
    Real r(base.precision());
    mpfr_pow_si(r.v_, base.v_, exponent, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& a, long exp2) {
    Real r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, exp2, MPFR_RNDN);
    return r;
}

Real const_pi(mpfr_prec_t bits) {
    Real r(0L, bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
    const auto digits = static_cast<int>(std::ceil(static_cast<double>(x.precision()) * std::log10(2.0)));
    return os << x.str(digits);
}

mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * std::log2(10.0))) + 8;
}

PrecisionContext::PrecisionContext(int digits)
    : digits_(digits), bits_(digits_to_bits(digits)), tau_() {
    if (digits < kMinDigits) {
        throw std::invalid_argument("precision must be at least " + std::to_string(kMinDigits) +
                                    " digits, got " + std::to_string(digits));
    }
    tau_ = pow10(-digits + kGuardDigits);
}

Real PrecisionContext::ratio(long p, long q) const {
    Real r = make(p);
    r /= q;
    return r;
}

Real PrecisionContext::pow10(int e) const {
    Real r = make(10L);
    return pow(r, static_cast<long>(e));
}

RealVector PrecisionContext::adopt(const RealVector& xs) const {
    RealVector out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(adopt(x));
    return out;
}

bool PrecisionContext::equal(const Real& a, const Real& b) const {
    Real scale = max(one(), max(abs(a), abs(b)));
    return abs(a - b) <= tau_ * scale;
}

PrecisionContext set_precision(const PrecisionContext& /*ctx*/, int digits) {
    return PrecisionContext(digits);
}

}  // namespace thurston::mp
