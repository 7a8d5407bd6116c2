#pragma once

#include "thurston/mp.hpp"
#include "thurston/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace support {

using thurston::Polynomial;
using thurston::mp::PrecisionContext;
using thurston::mp::Real;
using thurston::mp::RealVector;

inline double diff(const Real& a, const Real& b) { return abs(a - b).to_double(); }

inline double diff(const Real& a, const std::string& b) { return abs(a - Real(b, a.precision())).to_double(); }

/// max_i |p_i - q_i| against decimal strings; infinite on a length mismatch.
inline double max_diff(const RealVector& p, const std::vector<std::string>& q) {
    if (p.size() != q.size()) return 1e300;
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, diff(p[i], q[i]));
    return m;
}

inline double max_dist(const RealVector& p, const RealVector& q) {
    if (p.size() != q.size()) return 1e300;
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, diff(p[i], q[i]));
    return m;
}

inline Polynomial poly(const PrecisionContext& ctx, const std::vector<std::string>& ascending) {
    RealVector a;
    for (const auto& s : ascending) a.push_back(ctx.parse(s));
    return Polynomial(std::move(a));
}

/// Uniform decimals in [lo, hi] with a fixed seed, exact at any precision.
inline RealVector random_gaps(std::mt19937_64& rng, std::size_t count, const PrecisionContext& ctx, double lo = 0.1,
                              double hi = 1.0) {
    std::uniform_int_distribution<long> pick(static_cast<long>(lo * 1e6), static_cast<long>(hi * 1e6));
    RealVector out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(ctx.ratio(pick(rng), 1000000));
    return out;
}

}  // namespace support
