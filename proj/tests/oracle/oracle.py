#!/usr/bin/env python3
"""Independent sympy computation of the golden values used by the C++ tests.

Run from the repository root:  python3 tests/oracle/oracle.py > tests/oracle/golden.hpp
The output is committed; the C++ suite never calls this script.
"""
import itertools
import math

import sympy as sp

x = sp.symbols("x1:5")
a, b, c, d = sp.symbols("a b c d")
I, r3 = sp.I, sp.sqrt(3)

# pi on W: pi(e1,e3) = pi(e2,e4) = 1, antisymmetric
pi = sp.zeros(4, 4)
pi[0, 2] = pi[1, 3] = 1
pi[2, 0] = pi[3, 1] = -1

quadratics = [
    -3 * I * x[0] * x[2] - I * x[1] * x[3],
    r3 * x[0] * x[3] + x[1] ** 2 - r3 * x[1] * x[2] + x[3] ** 2,
    I * r3 * x[0] * x[3] + I * x[1] ** 2 + I * r3 * x[1] * x[2] - I * x[3] ** 2,
]
quartic = sp.expand(sum(q ** 2 for q in quadratics))


def sym_matrix(q):
    return sp.Matrix(4, 4, lambda i, j: sp.Rational(1, 2) * sp.diff(q, x[i], x[j]))


ups = [sym_matrix(q) for q in quadratics]


def polarized(i, j, k, l):
    return sp.nsimplify(sp.diff(quartic, x[i], x[j], x[k], x[l]) / 24)


def pair(m, n):
    return sp.simplify(sum(m[s, t] * pi[s, g] * pi[t, h] * n[g, h]
                           for s, t, g, h in itertools.product(range(4), repeat=4)))


def contract_s(m):
    return sp.Matrix(4, 4, lambda al, be: sp.simplify(sum(
        m[s, t] * pi[s, g] * pi[t, h] * polarized(al, be, g, h)
        for s, t, g, h in itertools.product(range(4), repeat=4))))


def classical_dis(a_, b_, c_, d_):
    return 18 * a_ * b_ * c_ * d_ - 27 * a_**2 * d_**2 - 4 * a_ * c_**3 - 4 * b_**3 * d_ + b_**2 * c_**2


out = {}
tabulated = -18 * x[0] * x[1] * x[2] * x[3] + 4 * r3 * x[0] * x[3] ** 3 - 4 * r3 * x[1] ** 3 * x[2] \
    + 3 * x[1] ** 2 * x[3] ** 2 - 9 * x[0] ** 2 * x[2] ** 2
out["sum_of_squares_matches_expansion"] = sp.expand(quartic - tabulated) == 0

out["s_hat_1234"] = polarized(0, 1, 2, 3)
out["s_hat_1444"] = polarized(0, 3, 3, 3)
out["s_hat_1313"] = polarized(0, 2, 0, 2)

substituted = sp.Poly(sp.expand(3 * quartic.subs({x[0]: a, x[1]: b / r3, x[2]: d, x[3]: -c / r3}, simultaneous=True)),
                      a, b, c, d)
target = sp.Poly(classical_dis(a, b, c, d), a, b, c, d)
monomials = [m for m in itertools.product(range(5), repeat=4) if sum(m) == 4]
out["quartic_monomials"] = len(monomials)
out["substitution_mismatches"] = sum(1 for m in monomials if sp.simplify(substituted.coeff_monomial(m) - target.coeff_monomial(m)) != 0)
out["dis_repeated_root"] = classical_dis(1, 0, -3, 2)
out["dis_1_0_m1_0"] = classical_dis(1, 0, -1, 0)

gram = [[pair(ups[s], ups[t]) for t in range(3)] for s in range(3)]
out["upsilon_pairing_diagonal"] = gram[0][0]
out["upsilon_pairing_offdiag_zero"] = all(gram[s][t] == 0 for s in range(3) for t in range(3) if s != t)
out["upsilon_pairing_diag_equal"] = gram[0][0] == gram[1][1] == gram[2][2]

eig = [sp.simplify(contract_s(ups[s]) - sp.Rational(7, 2) * ups[s]) for s in range(3)]
out["upsilon_eigen_7_2"] = all(m == sp.zeros(4, 4) for m in eig)

# S acting on S^2 W (= sp(2)): X -> sum S(., ., g, h) pi^{sg} pi^{th} X_st
basis = []
for i in range(4):
    for j in range(i, 4):
        m = sp.zeros(4, 4)
        m[i, j] = m[j, i] = 1
        basis.append(m)
coords = {}
for k, (i, j) in enumerate((i, j) for i in range(4) for j in range(i, 4)):
    coords[(i, j)] = k
op = sp.zeros(10, 10)
for col, m in enumerate(basis):
    img = contract_s(m)
    for (i, j), row in coords.items():
        op[row, col] = img[i, j]
spectrum = {sp.nsimplify(k): v for k, v in op.eigenvals().items()}
out["spectrum_on_s2w"] = ", ".join(f"{k}:{v}" for k, v in sorted(spectrum.items(), key=lambda kv: float(kv[0])))

out["sp2_dimension"] = 10
out["dagger_two_eigenspace_dim"] = math.comb(4 + 4 - 1, 4)
out["jacobi_triples_14"] = math.comb(14, 3)
out["torsion_summands"] = ", ".join(str(2 * (k + 1)) for k in (9, 7, 5, 3))
out["torsion_carrier_dim"] = sum(2 * (k + 1) for k in (9, 7, 5, 3))


def field_coordinates(v):
    """Coordinates of v in the basis 1, i, sqrt3, i*sqrt3."""
    v = sp.nsimplify(v)
    rational, irrational = [], []
    for part in (sp.re(v), sp.im(v)):
        part = sp.expand(part)
        q = part.coeff(r3)
        rational.append(sp.Rational(part - q * r3))
        irrational.append(sp.Rational(q))
    return rational + irrational


def cxx(v):
    if isinstance(v, bool):
        return "bool", "true" if v else "false"
    if isinstance(v, int):
        return "int", str(v)
    if isinstance(v, str):
        return "const char*", '"' + v + '"'
    coords = ", ".join('"' + str(t) + '"' for t in field_coordinates(v))
    return "FieldCoordinates", "{" + coords + "}"


print("// Generated by tests/oracle/oracle.py; do not edit.")
print("#pragma once\n\n#include <array>\n\nnamespace golden {\n")
print("// rational coordinates on 1, i, sqrt3, i*sqrt3")
print("using FieldCoordinates = std::array<const char*, 4>;\n")
for k, v in out.items():
    kind, val = cxx(v)
    print(f"inline constexpr {kind} {k} = {val};")
print("\n}  // namespace golden")
