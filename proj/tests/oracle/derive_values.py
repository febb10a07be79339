"""Independent oracle for the frozen values in the C++ unit tests.

Works in sympy with dense tensors built from Kronecker products, builds nu by
nesting rather than sign switching, and finds the transition matrix by solving
a linear system rather than using the closed pairing formula. Prints C++
initializers consumed by tests/frozen_values.hpp.

    python3 tests/oracle/derive_values.py > tests/frozen_values.inc
"""

import itertools

import sympy as sp

from sympy.polys.matrices import DomainMatrix

v = sp.symbols("v")
K = sp.QQ.frac_field(v)
V = K.convert(v)
ONE, ZERO = K.one, K.zero


def qint(k):
    return sum((V ** (k - 1 - 2 * t) for t in range(k)), ZERO) if k >= 0 else -qint(-k)


def dm(rows):
    return DomainMatrix([list(r) for r in rows], (len(rows), len(rows[0])), K)


def kron(*ms):
    out = dm([[ONE]])
    for m in ms:
        a, b = out.to_list(), m.to_list()
        rows = []
        for ra in a:
            for rb in b:
                rows.append([x * y for x in ra for y in rb])
        out = dm(rows)
    return out


def eye(n):
    return dm([[ONE if r == c else ZERO for c in range(n)] for r in range(n)])


def zeros(r, c):
    return dm([[ZERO] * c for _ in range(r)])


# Basis of V: y_1 = e0, y_-1 = e1. Basis of V^n ordered lexicographically with 1 < -1.
E1 = dm([[ZERO, ONE], [ZERO, ZERO]])
F1 = dm([[ZERO, ZERO], [ONE, ZERO]])
K1 = dm([[V, ZERO], [ZERO, 1 / V]])
Kinv1 = dm([[1 / V, ZERO], [ZERO, V]])
I2 = eye(2)
YP = dm([[ONE], [ZERO]])
YM = dm([[ZERO], [ONE]])


def op_E(n):
    out = zeros(2**n, 2**n)
    for j in range(n):
        out = out + kron(*([K1] * j + [E1] + [I2] * (n - j - 1)))
    return out


def op_F(n):
    out = zeros(2**n, 2**n)
    for j in range(n):
        out = out + kron(*([I2] * j + [F1] + [Kinv1] * (n - j - 1)))
    return out


def one_factors(n, weight):
    out = []
    for signs in itertools.product([1, -1], repeat=n):
        sums = list(itertools.accumulate(signs))
        if all(s >= 0 for s in sums) and sums[-1] == weight:
            out.append(signs)
    return out  # product order is lex with 1 < -1


def omega(alpha):
    b = dm([[ONE]])
    w = 0
    for k, e in enumerate(alpha):
        if e == 1:
            b = kron(b, YP)
            w += 1
        else:
            fb = op_F(k) * b if k > 0 else zeros(1, 1)
            b = kron(b, YM) * dm([[qint(w)]]) - kron(fb, YP) * dm([[V**w]])
            w -= 1
    return b


def nu_nested(alpha):
    n = len(alpha)
    stack, partner = [], [0] * n
    for i, e in enumerate(alpha):
        if e == 1:
            stack.append(i)
        else:
            j = stack.pop()
            partner[i], partner[j] = j + 1, i + 1

    def rec(lo, hi):
        r = dm([[ONE]])
        i = lo
        while i <= hi:
            p = partner[i]
            if p == 0:
                r = kron(r, YP)
                i += 1
            else:
                inner = rec(i + 1, p - 2)
                psi = kron(YP, inner, YM) - kron(YM, inner, YP) * dm([[V]])
                r = kron(r, psi)
                i = p
        return r

    return rec(0, n - 1)


def to_expr(x):
    return K.to_sympy(x)


def cpp_poly(p):
    p = sp.Poly(sp.expand(p * v**40), v)
    if p.is_zero:
        return "{}"
    terms = []
    for (e,), c in zip(p.monoms(), p.coeffs()):
        c = sp.Rational(c)
        terms.append("{%d, {%d, %d}}" % (e - 40, c.p, c.q))
    return "{" + ", ".join(terms) + "}"


def cpp_scalar(x):
    num, den = sp.fraction(sp.cancel(sp.together(to_expr(x))))
    return "S(%s, %s)" % (cpp_poly(num), cpp_poly(den))


def cpp_factor(a):
    return "{" + ", ".join(str(x) for x in a) + "}"


def emit_transition(l1, l2):
    n, w = l1 + l2, l1 - l2
    idx = one_factors(n, w)
    d = len(idx)
    M = DomainMatrix.hstack(*[omega(a) for a in idx])
    # Square subsystem on pivot rows of M.
    _, pivots = M.transpose().rref()
    rows_sel = list(pivots)
    Msq = dm([M.to_list()[r] for r in rows_sel])
    P_rows = []
    for a in idx:
        nu = nu_nested(a).to_list()
        rhs = dm([nu[r] for r in rows_sel])
        sol = Msq.lu_solve(rhs)
        assert M * sol == dm(nu), "nu not in the span of omega"
        P_rows.append([sol.to_list()[c][0] for c in range(d)])
    P = dm(P_rows)
    Pp = P.inv()
    print("// shape (%d,%d), index order:" % (l1, l2))
    print("inline const std::vector<OneFactor> kIndex_%d_%d{%s};" % (l1, l2, ", ".join(cpp_factor(a) for a in idx)))
    for name, Mx in (("P", P), ("Pprime", Pp)):
        L = Mx.to_list()
        print("inline const std::vector<std::vector<Scalar>> k%s_%d_%d{" % (name, l1, l2))
        for r in range(d):
            print("    {" + ", ".join(cpp_scalar(L[r][c]) for c in range(d)) + "},")
        print("};")


def emit_omega(alpha):
    n = len(alpha)
    vec = omega(alpha).to_list()
    terms = []
    for k, signs in enumerate(itertools.product([1, -1], repeat=n)):
        if vec[k][0] != ZERO:
            terms.append("{%s, %s}" % (cpp_factor(signs), cpp_scalar(vec[k][0])))
    name = "_".join("p" if x == 1 else "m" for x in alpha)
    print("inline const std::vector<std::pair<std::vector<int>, Scalar>> kOmega_%s{%s};" % (name, ", ".join(terms)))


def main():
    print("// Generated by tests/oracle/derive_values.py; do not edit by hand.")
    for l1, l2 in ((2, 1), (2, 2), (3, 1), (3, 2), (4, 2), (3, 3)):
        emit_transition(l1, l2)
    for a in ((1, -1), (1, 1, -1), (1, -1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, 1, 1, -1, -1)):
        emit_omega(a)
    # Kronecker-product generator matrices at n = 2, for the tensor tests.
    print("inline const std::vector<std::vector<Scalar>> kE_2{")
    M = op_E(2).to_list()
    for r in range(4):
        print("    {" + ", ".join(cpp_scalar(M[r][c]) for c in range(4)) + "},")
    print("};")
    print("inline const std::vector<std::vector<Scalar>> kF_2{")
    M = op_F(2).to_list()
    for r in range(4):
        print("    {" + ", ".join(cpp_scalar(M[r][c]) for c in range(4)) + "},")
    print("};")


if __name__ == "__main__":
    main()
