#include "doctest.h"
#include "oracle_values.hpp"
#include "support.hpp"
#include "thurston/pullback.hpp"

using namespace thurston;
using support::diff;
using support::max_diff;

namespace {

const oracle::FixedPoint& fixed_point(const std::string& text) {
    for (const auto& fp : oracle::kFixedPoints) {
        if (fp.combinatorics == text) return fp;
    }
    throw std::logic_error("no oracle entry for " + text);
}

MarkedConfiguration configuration(const PrecisionContext& ctx, const std::vector<std::string>& xs) {
    MarkedConfiguration cfg;
    for (const auto& s : xs) cfg.x.push_back(ctx.parse(s));
    return cfg;
}

RealizedMap raw_map(Polynomial f, RealVector critical_points) { return RealizedMap{std::move(f), std::move(critical_points), {}}; }

/// f(1) must equal the framing target (0 or 1).
double framing_gap(const Combinatorics& c, const Polynomial& f) {
    return std::abs(f.coefficient_sum().to_double() - (c.image(c.n()) == c.n() ? 1.0 : 0.0));
}

}  // namespace

TEST_SUITE("pullback") {

TEST_CASE("initial configurations are equally spaced") {
    const PrecisionContext ctx(30);
    CHECK(max_diff(init_configuration(parse("0,3,2,1,4"), ctx).x, {"0", "0.25", "0.5", "0.75", "1"}) == 0.0);
    CHECK(max_diff(init_configuration(parse("0,4,3,1,2,5"), ctx).x, {"0", "0.2", "0.4", "0.6", "0.8", "1"}) < 1e-29);
    CHECK(max_diff(init_configuration(parse("0,1,0"), ctx).x, {"0", "0.5", "1"}) == 0.0);
}

TEST_CASE("critical value vectors") {
    const PrecisionContext ctx(30);
    const CriticalData cubic = critical_value_vector(parse("0,3,2,1,4"), init_configuration(parse("0,3,2,1,4"), ctx));
    CHECK(cubic.indices == std::vector<int>{1, 3});
    CHECK(cubic.multiplicities == std::vector<int>{1, 1});
    CHECK(max_diff(cubic.values.values, {"0.75", "0.25"}) == 0.0);

    const CriticalData tent = critical_value_vector(parse("0,1,0"), init_configuration(parse("0,1,0"), ctx));
    CHECK(max_diff(tent.values.values, {"0.5"}) == 0.0);

    const auto& fp = fixed_point("0,2,6^2,4,3^3,1^2,4,7");
    const CriticalData q = critical_value_vector(parse(fp.combinatorics), configuration(ctx, fp.marked_points));
    CHECK(q.multiplicities == std::vector<int>{1, 2, 1});
    CHECK(max_diff(q.values.values, {fp.marked_points[6], fp.marked_points[3], fp.marked_points[1]}) == 0.0);
}

TEST_CASE("mapmake prescribes critical values in spatial order") {
    const PrecisionContext ctx(40);
    const Combinatorics c = parse("0,3,2,1,4");
    const CriticalData data = critical_value_vector(c, init_configuration(c, ctx));
    const RealizedMap m = mapmake(c, data, ctx);
    const Polynomial df = m.f.derivative();
    REQUIRE(m.critical_points.size() == 2);
    CHECK(m.critical_points[0] < m.critical_points[1]);
    CHECK(abs(df(m.critical_points[0])) < 1e-30);
    CHECK(diff(m.f(m.critical_points[0]), "0.75") <= 1e-12);
    CHECK(diff(m.f(m.critical_points[1]), "0.25") <= 1e-12);

    const Combinatorics tent = parse("0,1,0");
    const RealizedMap q = mapmake(tent, critical_value_vector(tent, init_configuration(tent, ctx)), ctx);
    CHECK(q.f.degree() == 2);
    CHECK(q.f.leading() < 0);
    CHECK(diff(q.f(q.critical_points[0]), "0.5") <= 1e-12);
}

TEST_CASE("normalize leaves a framed map unchanged") {
    const PrecisionContext ctx(40);
    const Combinatorics c = parse("0,1^4,0");
    const Polynomial f = support::poly(ctx, oracle::kSymmetricQuartic);
    const NormalizedMap n = normalize(c, raw_map(f, {ctx.ratio(1, 2)}), ctx);
    CHECK(diff(n.frame_a, "0") < 1e-30);
    CHECK(diff(n.frame_b, "1") < 1e-30);
    CHECK(support::max_dist(n.f.coefficients(), f.coefficients()) < 1e-28);

    // f_raw(x) = f(x / 2): A = 0, B = 2 and nu(t) = 2t recovers f.
    const Polynomial stretched = f.compose_affine(ctx.zero(), ctx.ratio(1, 2));
    const NormalizedMap m = normalize(c, raw_map(stretched, {ctx.one()}), ctx);
    CHECK(diff(m.frame_a, "0") < 1e-30);
    CHECK(diff(m.frame_b, "2") < 1e-30);
    CHECK(support::max_dist(m.f.coefficients(), f.coefficients()) < 1e-27);
    CHECK(diff(m.critical_points[0], "0.5") < 1e-30);
}

TEST_CASE("normalize with a critical right framing point") {
    const PrecisionContext ctx(40);
    const Combinatorics c = parse("0,2,0^3");
    const CriticalData data = critical_value_vector(c, configuration(ctx, {"0", "0.25", "1"}));
    const RealizedMap raw = mapmake(c, data, ctx);
    const NormalizedMap n = normalize(c, raw, ctx);
    // B is the critical point itself and solves f_raw(B) = 0 to tolerance.
    CHECK(n.frame_b == raw.critical_points.back());
    CHECK(abs(raw.f(n.frame_b)) <= 1e-12);
    CHECK(max_diff(n.f.coefficients(), oracle::kFlatQuartic) < 1e-12);
}

TEST_CASE("framing invariant after normalize for all four framings") {
    const PrecisionContext ctx(40);
    for (const char* text : {"0,4,3,1,2,5", "6,2^4,3,4,5,1,0", "0,2,1,3,5,3^3,0", "2,0,2", "0,1^4,0"}) {
        CAPTURE(text);
        const Combinatorics c = parse(text);
        const MarkedConfiguration x = init_configuration(c, ctx);
        const NormalizedMap n = normalize(c, mapmake(c, critical_value_vector(c, x), ctx), ctx);
        const double t0 = c.image(0) == 0 ? 0.0 : 1.0;
        const double t1 = c.image(c.n()) == 0 ? 0.0 : 1.0;
        CHECK(std::abs(n.f(ctx.zero()).to_double() - t0) <= 1e-35);
        CHECK(std::abs(n.f(ctx.one()).to_double() - t1) <= 1e-35);
    }
}

TEST_CASE("pullback at an exact fixed point returns the same configuration") {
    const PrecisionContext ctx(40);
    const auto& fp = fixed_point("0,3,2,1,4");
    const Combinatorics c = parse(fp.combinatorics);
    NormalizedMap map;
    map.f = support::poly(ctx, fp.coefficients);
    map.critical_points = {ctx.parse(oracle::kExactCubicCritical[0]), ctx.parse(oracle::kExactCubicCritical[1])};
    map.frame_a = ctx.zero();
    map.frame_b = ctx.one();
    const MarkedConfiguration x = configuration(ctx, fp.marked_points);
    CHECK(support::max_dist(pullback_step(c, map, x, ctx).x, x.x) < 1e-35);
    CHECK(fit_error(c, map.f, x).to_double() < 1e-35);
}

TEST_CASE("pullback on the tent takes the critical point") {
    const PrecisionContext ctx(30);
    const Combinatorics c = parse("0,1,0");
    const MarkedConfiguration x = init_configuration(c, ctx);
    const StepOutcome s = thurston_step(c, x, ctx);
    CHECK(s.next.x[1] == s.map.critical_points[0]);
    CHECK(diff(s.next.x[1], "0.5") < 1e-28);
    CHECK(max_diff(s.map.f.coefficients(), {"0", "2", "-2"}) < 1e-27);
}

TEST_CASE("the first step moves every interior point of the framed-at-one quintic") {
    const PrecisionContext ctx(40);
    const Combinatorics c = parse("6,2^4,3,4,5,1,0");
    const MarkedConfiguration x0 = init_configuration(c, ctx);
    const StepOutcome s = thurston_step(c, x0, ctx);
    for (int j = 1; j < c.n(); ++j) CHECK(diff(s.next.x[static_cast<std::size_t>(j)], x0.x[static_cast<std::size_t>(j)]) > 1e-3);
    for (int j = 0; j < c.n(); ++j) CHECK(s.next.x[static_cast<std::size_t>(j)] < s.next.x[static_cast<std::size_t>(j + 1)]);
}

TEST_CASE("serial and parallel pullback steps are bit-identical") {
    const PrecisionContext ctx(40);
    for (const char* text : {"0,2,6^2,4,3^3,1^2,4,7", "0,2,1,3,5,3^3,0", "6,2^4,3,4,5,1,0"}) {
        const Combinatorics c = parse(text);
        const MarkedConfiguration x0 = init_configuration(c, ctx);
        const StepOutcome a = thurston_step(c, x0, ctx, Execution::serial);
        const StepOutcome b = thurston_step(c, x0, ctx, Execution::parallel);
        REQUIRE(a.next.x.size() == b.next.x.size());
        for (std::size_t j = 0; j < a.next.x.size(); ++j) CHECK(a.next.x[j] == b.next.x[j]);
    }
}

TEST_CASE("fit error with one marked image off by 0.03") {
    const PrecisionContext ctx(40);
    const Combinatorics c = parse("0,1,2,3");
    const MarkedConfiguration x = init_configuration(c, ctx);
    // x + 0.03 L(x) where L is the Lagrange basis polynomial of x_1 on (0, 1/3, 2/3, 1).
    const RealVector roots{ctx.zero(), ctx.ratio(2, 3), ctx.one()};
    const std::vector<int> simple{1, 1, 1};
    const Polynomial lagrange = poly_from_roots(roots, simple, 1, ctx) * ctx.ratio(27, 2);
    const Polynomial f = support::poly(ctx, {"0", "1"}) + lagrange * ctx.parse("0.03");
    CHECK(diff(f(x.x[1]), x.x[1] + ctx.parse("0.03")) < 1e-35);
    CHECK(diff(fit_error(c, f, x), "0.01") < 1e-35);
    CHECK(fit_error(c, support::poly(ctx, {"0", "1"}), x).is_zero());
}

TEST_CASE("fit error of the exact cubic is tiny") {
    const PrecisionContext ctx(40);
    const auto& fp = fixed_point("0,3,2,1,4");
    CHECK(fit_error(parse(fp.combinatorics), support::poly(ctx, fp.coefficients), configuration(ctx, fp.marked_points))
              .to_double() <= 1e-13);
}

TEST_CASE("the first quintic step has the reference fit error") {
    const PrecisionContext ctx(40);
    const Combinatorics c = parse("0,2,6^2,4,3^3,1^2,4,7");
    const StepOutcome s = thurston_step(c, init_configuration(c, ctx), ctx);
    CHECK(s.fit_error.to_double() == doctest::Approx(0.037).epsilon(0.05));
}

TEST_CASE("detect_collapse examples") {
    const PrecisionContext ctx(40);
    const Real threshold = ctx.pow10(-9);
    CHECK(detect_collapse(configuration(ctx, {"0", "0.3", "0.5", "0.50000000000001", "0.8", "1"}), threshold) ==
          std::vector<std::vector<int>>{{2, 3}});
    CHECK(detect_collapse(init_configuration(parse("0,4,3,1,2,5"), ctx), threshold).empty());
    CHECK(detect_collapse(configuration(ctx, {"0", "0.1", "0.2", "0.3", "0.4", "0.400000000001", "0.400000000002",
                                              "0.7", "1"}),
                          threshold) == std::vector<std::vector<int>>{{4, 5, 6}});
}

TEST_CASE("run converges to the oracle fixed points") {
    for (const auto& fp : oracle::kFixedPoints) {
        CAPTURE(fp.combinatorics);
        RunOptions o;
        o.tol = 1e-12;
        const RunResult r = run(parse(fp.combinatorics), o);
        REQUIRE(r.converged);
        CHECK_FALSE(r.collapse.has_value());
        CHECK(max_diff(r.f.coefficients(), fp.coefficients) < 1e-8);
        CHECK(max_diff(r.x, fp.marked_points) < 1e-10);
        CHECK(framing_gap(r.final_combinatorics, r.f) < 1e-8);
    }
}

TEST_CASE("closed-form maps converge on the first step") {
    const PrecisionContext ctx(40);
    const RunResult quartic = run(parse("0,1^4,0"));
    CHECK(quartic.converged);
    CHECK(quartic.iterations == 1);
    CHECK(max_diff(quartic.f.coefficients(), oracle::kSymmetricQuartic) < 1e-9);

    const RunResult flat = run(parse("0,2,0^3"));
    CHECK(flat.converged);
    CHECK(flat.iterations == 1);
    CHECK(max_diff(flat.f.coefficients(), oracle::kFlatQuartic) < 1e-9);
    REQUIRE(flat.error_history.size() == 1);
    CHECK(flat.error_history[0] <= 1e-10);
}

TEST_CASE("idempotence at the limit") {
    for (const char* text : {"0,4,3,1,2,5", "0,2,1,3,5,3^3,0"}) {
        const RunResult r = run(parse(text));
        REQUIRE(r.converged);
        const PrecisionContext ctx(r.digits);
        const StepOutcome again = thurston_step(r.final_combinatorics, {r.x, r.iterations}, ctx);
        const double eps = r.fit_error.to_double();
        CHECK(support::max_dist(again.next.x, r.x) < 10 * eps);
    }
}

TEST_CASE("run records the step trace and precision history") {
    RunOptions o;
    o.trace = true;
    o.max_iter = 3;
    o.tol = 1e-300;
    const RunResult r = run(parse("0,2,6^2,4,3^3,1^2,4,7"), o);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
    CHECK(r.trace.size() == 3);
    CHECK(r.precision_history == std::vector<int>{40, 40, 40});
    CHECK(r.error_history[0] == doctest::Approx(0.037).epsilon(0.05));
    CHECK(r.error_history[1] == doctest::Approx(0.0038).epsilon(0.05));
    CHECK_FALSE(r.message.empty());
}

TEST_CASE("run at low precision escalates") {
    RunOptions o;
    o.start_digits = 15;
    o.tol = 1e-12;
    const RunResult r = run(parse("0,3^4,2^3,1,4"), o);
    CHECK(r.converged);
    CHECK_FALSE(r.escalations.empty());
    CHECK(r.digits > 15);
    CHECK(r.fit_error.to_double() <= 1e-12);
}

TEST_CASE("run collapses non-expansive edges") {
    const RunResult quartic = run(parse("0,4,3,2,1,2,0"));
    REQUIRE(quartic.collapse.has_value());
    CHECK(quartic.collapse->groups == std::vector<std::vector<int>>{{2, 3}});
    CHECK(quartic.final_combinatorics == parse("0,3,2,1,2,0"));
    CHECK(quartic.converged);

    const RunResult sextic = run(parse("0,1,5,0,2,1,7,1,0"));
    REQUIRE(sextic.collapse.has_value());
    CHECK(sextic.collapse->groups == std::vector<std::vector<int>>{{0, 1}, {7, 8}});
    CHECK(sextic.final_combinatorics == parse("0,4,0,1,0,6,0"));
    CHECK(sextic.converged);
}

TEST_CASE("run rejects invalid combinatorics") {
    CHECK_THROWS_AS(run(parse("1,2,0")), CombinatoricsError);
}

}  // TEST_SUITE
