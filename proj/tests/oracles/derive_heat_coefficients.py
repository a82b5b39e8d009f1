"""Independent derivation of heat coefficients A_k (per unit chi(1) Vol).

Expands (4 pi t)^(d/2) h_t(1) directly: r*tanh(c pi r) = |r| (1 - 2/(e^{2 c pi |r|} + 1))
and r*coth(pi r / 2) = |r| (1 + 2/(e^{pi |r|} - 1)), so every t^k coefficient is a
finite combination of Gaussian moments and Fermi/Bose moment integrals
    int_0^inf r^(2m-1) / (e^(a r) +- 1) dr = (2m-1)! {eta, zeta}(2m) / a^(2m),
evaluated exactly with sympy. Used only to freeze expected values in the tests.

Usage: python3 derive_heat_coefficients.py so 5 4
"""
import sys
import sympy as sp

t = sp.Symbol("t", positive=True)
R = sp.Rational


def table(family, n):
    if family == "so":
        d, rho = n, R(n - 1, 2)
        cg = 1 / (2 ** (2 * n - 4) * sp.gamma(R(n, 2)) ** 2)
        if n % 2 == 0:
            factors = [(1, R((2 * j + 1) ** 2, 4)) for j in range(n // 2 - 1)]
            kind, alpha = "tanh", 2 * sp.pi
        else:
            factors = [(1, j * j) for j in range((n - 1) // 2)]
            kind, alpha = "poly", None
    elif family == "su":
        d, rho = 2 * n, R(n)
        cg = R(1, 2 ** (2 * n - 1) * sp.factorial(n - 1) ** 2)
        factors = [(R(1, 4), R((n - 2 * j) ** 2, 4)) for j in range(1, n)]
        kind, alpha = ("tanh", sp.pi) if n % 2 else ("coth", sp.pi)
    elif family == "sp":
        d, rho = 4 * n, R(2 * n + 1)
        cg = R(1, 2 ** (4 * n + 1) * sp.factorial(2 * n - 1) ** 2)
        factors = [(R(1, 4), R(1, 4))]
        for j in range(3, n + 2):
            factors += [(R(1, 4), R(2 * n - 2 * j + 3, 2) ** 2), (R(1, 4), R(2 * n - 2 * j + 5, 2) ** 2)]
        kind, alpha = "tanh", sp.pi
    else:
        d, rho = 16, R(11)
        cg = R(1, 2 ** 21 * sp.factorial(7) ** 2)
        factors = [(R(1, 4), R(1, 4)), (R(1, 4), R(9, 4))] + [(R(1, 4), R(2 * j + 1, 2) ** 2) for j in range(5)]
        kind, alpha = "tanh", sp.pi
    r = sp.Symbol("r")
    P = sp.expand(sp.prod([a * r ** 2 + b for a, b in factors]))
    a = [P.coeff(r, 2 * j) for j in range(sp.degree(P, r) // 2 + 1)]
    return d, rho, cg, a, kind, alpha


def moment(m, alpha, fermi):
    z = sp.zeta(2 * m) * ((1 - R(2) ** (1 - 2 * m)) if fermi else 1)
    return sp.factorial(2 * m - 1) * z / alpha ** (2 * m)


def coefficients(family, n, kmax):
    d, rho, cg, a, kind, alpha = table(family, n)
    order = kmax + d + 2
    if kind == "poly":
        integral = sum(aj * sp.gamma(j + R(1, 2)) * t ** (-j - R(1, 2)) for j, aj in enumerate(a))
    else:
        sign = -1 if kind == "tanh" else 1
        integral = 0
        for j, aj in enumerate(a):
            integral += aj * sp.factorial(j) / t ** (j + 1)
            integral += 4 * sign * aj * sum((-t) ** i / sp.factorial(i) * moment(i + j + 1, alpha, kind == "tanh")
                                            for i in range(order))
    damp = sum((-rho ** 2 * t) ** i / sp.factorial(i) for i in range(order))
    expr = sp.expand((4 * sp.pi) ** R(d, 2) * t ** R(d, 2) / (4 * sp.pi) * cg * sp.pi * damp * integral)
    return [sp.nsimplify(sp.simplify(expr.coeff(t, k))) for k in range(kmax + 1)]


if __name__ == "__main__":
    fam, n, kmax = sys.argv[1], int(sys.argv[2]), int(sys.argv[3])
    for k, c in enumerate(coefficients(fam, n, kmax)):
        print(k, c, sp.N(c, 30))
