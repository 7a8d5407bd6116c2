"""Independent reference values for the test suite.

Fixed points are found by solving the polynomial system
    f(x_j) = x_{m_j}          for every marked index j,
    f^(k)(x_j) = 0, 1 <= k < d_j   for every critical index j,
directly with mpmath.findroot at 60 digits. This never touches the
critical-value parametrization or the pull-back iteration used by the
library. Rough 4-digit starting guesses are listed below.

Usage: python3 derive.py > ../oracle_values.hpp
"""

import re
import sys

import mpmath as mp
import sympy as sp

mp.mp.dps = 60
DIGITS = 40


def parse(text):
    images, degrees = [], []
    for item in text.replace(" ", "").split(","):
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", item)
        images.append(int(m.group(1)))
        degrees.append(int(m.group(2)) if m.group(2) else None)
    n = len(images) - 1
    for j in range(n + 1):
        if degrees[j] is None:
            turning = 0 < j < n and (images[j] - images[j - 1]) * (images[j + 1] - images[j]) < 0
            degrees[j] = 2 if turning else 1
    return images, degrees


def polyval(a, x):
    r = mp.mpf(0)
    for c in reversed(a):
        r = r * x + c
    return r


def derivative(a, k):
    for _ in range(k):
        a = [i * a[i] for i in range(1, len(a))]
    return a


def solve_fixed_point(text, coeff_guess, x_guess):
    m, d = parse(text)
    n = len(m) - 1
    deg = 1 + sum(dj - 1 for dj in d)
    assert len(coeff_guess) == deg + 1 and len(x_guess) == n + 1

    def unpack(v):
        a = list(v[: deg + 1])
        x = [mp.mpf(0)] + list(v[deg + 1 :]) + [mp.mpf(1)]
        return a, x

    def equations(*v):
        a, x = unpack(v)
        eqs = [polyval(a, x[j]) - x[m[j]] for j in range(n + 1)]
        for j in range(n + 1):
            for k in range(1, d[j]):
                eqs.append(polyval(derivative(a, k), x[j]))
        return eqs

    start = [mp.mpf(c) for c in coeff_guess] + [mp.mpf(x) for x in x_guess[1:-1]]
    sol = mp.findroot(equations, start, tol=mp.mpf(10) ** -55, maxsteps=200)
    sol = [sol[i] for i in range(len(start))] if len(start) > 1 else [sol]
    a, x = unpack(sol)
    residual = max(abs(e) for e in equations(*sol))
    assert residual < mp.mpf(10) ** -45, (text, residual)
    assert all(x[j] < x[j + 1] for j in range(n)), text
    return a, x


FIXED_POINTS = [
    ("0,3,2,1,4", [0, 6, -15, 10], [0, 0.2764, 0.5, 0.7236, 1]),
    ("0,4,3,1,2,5", [0, 7.1217, -17.646, 11.5243], [0, 0.2769, 0.4126, 0.7439, 0.8637, 1]),
    ("0,2,6^2,4,3^3,1^2,4,7", [0, 18.1631, -113.7217, 276.2222, -296.0915, 116.4279],
     [0, 0.0077, 0.1325, 0.3111, 0.5269, 0.8482, 0.9661, 1]),
    ("0,3^4,2^3,1,4", [0, 20.2056, -181.7479, 855.1405, -2244.5474, 3255.2161, -2427.2301, 723.9633],
     [0, 0.2168, 0.6533, 0.9167, 1]),
    ("6,2^4,3,4,5,1,0", [1, -5.7534, 31.2443, -81.991, 102.1693, -46.6693],
     [0, 0.3113, 0.5864, 0.682, 0.8176, 0.9746, 1]),
    ("0,2,1,3,5,3^3,0", [0, 7.4942, -97.018, 457.9212, -913.0123, 811.6279, -267.013],
     [0, 0.0609, 0.1881, 0.3154, 0.5315, 0.8762, 1]),
    ("0,3,2,1,2,0", [0, 7.4598, -32.0734, 47.0904, -22.4768], [0, 0.1785, 0.3554, 0.5546, 0.8382, 1]),
    ("0,4,0,1,0,6,0", [0, 20.1518, -208.9318, 827.5263, -1559.7475, 1400.6501, -479.6489],
     [0, 0.0776, 0.3205, 0.481, 0.6396, 0.9147, 1]),
]


def phi_direct(gaps, mult):
    """Absolute integrals of prod (x - c_i)^k_i between consecutive centered points, by quadrature."""
    c = [mp.mpf(0)]
    for g in gaps:
        c.append(c[-1] + mp.mpf(str(g)))
    K = sum(mult)
    shift = sum(k * ci for k, ci in zip(mult, c)) / K
    c = [ci - shift for ci in c]

    def g(x):
        r = mp.mpf(1)
        for ci, k in zip(c, mult):
            r *= (x - ci) ** k
        return r

    return [abs(mp.quad(g, [c[i], c[i + 1]])) for i in range(len(gaps))]


PHI_CASES = [
    ([1], [1, 1]),
    ([1, 1], [1, 1, 1]),
    ([0.5, 1.25, 0.75], [1, 1, 1, 1]),
    ([0.3, 0.9], [2, 1, 3]),
    ([1.1, 0.4, 0.8], [1, 3, 1, 2]),
]


def s(x, digits=DIGITS):
    return '"' + mp.nstr(x, digits, strip_zeros=False, min_fixed=-1, max_fixed=1) + '"'


def cxx_list(values):
    return "{" + ", ".join(values) + "}"


def main():
    out = sys.stdout
    out.write("#pragma once\n\n// Generated by tests/oracle/derive.py. Do not edit.\n\n")
    out.write("#include <string>\n#include <vector>\n\nnamespace oracle {\n\n")

    x = sp.symbols("x")
    i2 = sp.integrate(x * (x - 1), (x, 0, 1))
    i3 = sp.integrate(x * (x - 1) * (x - 2), (x, 0, 1))
    out.write(f"// Exact integrals over [0,1].\ninline const long kIntegralQuadraticNum = {sp.numer(i2)};\n")
    out.write(f"inline const long kIntegralQuadraticDen = {sp.denom(i2)};\n")
    out.write(f"inline const long kIntegralCubicNum = {sp.numer(i3)};\n")
    out.write(f"inline const long kIntegralCubicDen = {sp.denom(i3)};\n\n")

    quartic = sp.Poly(sp.expand((1 - (2 * x - 1) ** 4) / 2), x).all_coeffs()[::-1]
    k = sp.Rational(256, 27)
    flat = sp.Poly(sp.expand(k * x * (1 - x) ** 3), x).all_coeffs()[::-1]
    out.write("// Closed-form maps, ascending coefficients.\n")
    out.write("inline const std::vector<std::string> kSymmetricQuartic = "
              + cxx_list(s(mp.mpf(sp.Rational(c).p) / sp.Rational(c).q) for c in quartic) + ";\n")
    out.write("inline const std::vector<std::string> kFlatQuartic = "
              + cxx_list(s(mp.mpf(sp.Rational(c).p) / sp.Rational(c).q) for c in flat) + ";\n")
    cp = sp.solve(sp.diff(6 * x - 15 * x**2 + 10 * x**3, x), x)
    out.write("// Critical points of 6x - 15x^2 + 10x^3.\ninline const std::vector<std::string> kExactCubicCritical = "
              + cxx_list(s(mp.mpf(sp.N(c, 70))) for c in sorted(cp)) + ";\n\n")

    out.write("struct PhiCase {\n    std::vector<std::string> gaps;\n    std::vector<int> multiplicities;\n"
              "    std::vector<std::string> values;\n};\n\n")
    out.write("// Gap integrals by adaptive quadrature of the factored product.\n")
    out.write("inline const std::vector<PhiCase> kPhiCases = {\n")
    for gaps, mult in PHI_CASES:
        vals = phi_direct(gaps, mult)
        out.write("    {" + cxx_list(s(mp.mpf(str(g))) for g in gaps) + ", "
                  + cxx_list(str(k) for k in mult) + ", " + cxx_list(s(v) for v in vals) + "},\n")
    out.write("};\n\n")

    out.write("struct FixedPoint {\n    std::string combinatorics;\n    std::vector<std::string> coefficients;\n"
              "    std::vector<std::string> marked_points;\n};\n\n")
    out.write("// Solutions of the fixed-point polynomial system.\n")
    out.write("inline const std::vector<FixedPoint> kFixedPoints = {\n")
    for text, cg, xg in FIXED_POINTS:
        a, xs = solve_fixed_point(text, cg, xg)
        out.write(f'    {{"{text}",\n     ' + cxx_list(s(v) for v in a) + ",\n     "
                  + cxx_list(s(v) for v in xs) + "},\n")
    out.write("};\n\n}  // namespace oracle\n")


if __name__ == "__main__":
    main()
