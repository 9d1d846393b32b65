#!/usr/bin/env python3
"""Independent exact oracle for moments of partially transposed random projectors.

Solves sum_pi d^{c(sigma pi)} alpha_pi = r^{c(sigma)} directly by exact Gaussian
elimination (no characters, no Weingarten function), then evaluates
sum_pi dA^{c(kappa pi)} dB^{c(kappa^-1 pi)} alpha_pi by explicit enumeration.
The system is consistent even when d < k; any solution yields the same operator.

Also evaluates the Haar pure-state formula for r = 1 and the Gram inverse for
Weingarten values. Prints C++ initializers consumed by tests/oracle_values.hpp.
"""
from fractions import Fraction
from itertools import permutations
import sys


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def cycles(p):
    seen = [False] * len(p)
    c = 0
    for i in range(len(p)):
        if not seen[i]:
            c += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return c


def solve_consistent(rows, rhs):
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    cols = len(rows[0])
    piv_cols = []
    row = 0
    for col in range(cols):
        piv = next((i for i in range(row, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(n):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        piv_cols.append(col)
        row += 1
        if row == n:
            break
    for i in range(row, n):
        assert m[i][-1] == 0, "inconsistent system"
    x = [Fraction(0)] * cols
    for i, col in enumerate(piv_cols):
        x[col] = m[i][-1]
    return x


def moment(da, db, r, k):
    d = da * db
    perms = list(permutations(range(k)))
    rows = [[Fraction(d) ** cycles(compose(s, p)) for p in perms] for s in perms]
    rhs = [Fraction(r) ** cycles(s) for s in perms]
    alpha = solve_consistent(rows, rhs)
    kappa = tuple((i + 1) % k for i in range(k))
    kinv = inverse(kappa)
    total = Fraction(0)
    for a, p in zip(alpha, perms):
        total += a * Fraction(da) ** cycles(compose(kappa, p)) * Fraction(db) ** cycles(compose(kinv, p))
    return total


def pure_state_moment(m, n, k):
    # E tr rho_A^k for a Haar-random pure state on C^m (x) C^n.
    perms = list(permutations(range(k)))
    kappa = tuple((i + 1) % k for i in range(k))
    num = sum(m ** cycles(s) * n ** cycles(compose(inverse(s), kappa)) for s in perms)
    den = 1
    for i in range(k):
        den *= m * n + i
    return Fraction(num, den)


def wg_by_gram_inverse(k, d):
    perms = list(permutations(range(k)))
    n = len(perms)
    a = [[Fraction(d) ** (cycles(compose(inverse(p), s)) - k) for s in perms] for p in perms]
    # invert A column by column; Wg(pi) = A^{-1}_{e,pi} / d^k
    e_idx = perms.index(tuple(range(k)))
    out = {}
    col_solution = solve_consistent(a, [Fraction(int(i == e_idx)) for i in range(n)])
    # A symmetric, so row e of A^{-1} equals the solution for unit vector e
    for p, v in zip(perms, col_solution):
        ct = cycle_type(p)
        val = v / Fraction(d) ** k
        if ct in out:
            assert out[ct] == val
        out[ct] = val
    return out


def cycle_type(p):
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            parts.append(length)
    return tuple(sorted(parts, reverse=True))


def frac(x):
    return '{"%d", "%d"}' % (x.numerator, x.denominator)


def main():
    print("// moment grid: {da, db, r, k, {num, den}}")
    grid = [(2, 2, 1), (2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 3, 2), (3, 3, 3), (3, 3, 4)]
    for da, db, r in grid:
        for k in (1, 2, 3, 4, 5):
            print("{%d, %d, %d, %d, %s}," % (da, db, r, k, frac(moment(da, db, r, k))))
    for da, db, r, k in [(2, 3, 5, 4), (3, 2, 2, 4), (1, 4, 2, 4), (2, 4, 3, 4), (4, 2, 3, 4)]:
        print("{%d, %d, %d, %d, %s}," % (da, db, r, k, frac(moment(da, db, r, k))))
    sys.stdout.flush()
    print("// pure-state r=1 moments: {m, n, k, value}")
    for m, n in [(2, 2), (2, 3), (3, 3)]:
        for k in (3, 4, 5, 6):
            print("{%d, %d, %d, %s}," % (m, n, k, frac(pure_state_moment(m, n, k))))
    print("// Weingarten by Gram inverse: {k, d, cycle type, value}")
    for k in (1, 2, 3, 4):
        for d in range(k, k + 3):
            for ct, v in sorted(wg_by_gram_inverse(k, d).items()):
                print("{%d, %d, {%s}, %s}," % (k, d, ", ".join(map(str, ct)), frac(v)))


if __name__ == "__main__":
    main()
