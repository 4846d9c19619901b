#!/usr/bin/env python3
"""Generate src/oeis_fixtures.cpp.

Terms are computed here with plain Python integers and fractions, using
defining forms that differ from the C++ builders where possible (Zagier form
for Fishburn numbers, direct Fishburn forms, brute force for the triangles,
the log-derivative recurrence for A207434). Published prefixes are
asserted before anything is written.

Usage: gen_oeis_fixtures.py OUTPUT.cpp
"""

import sys
from fractions import Fraction
from math import factorial

TERMS = 20


# ---------------------------------------------------------------- series helpers

def mul(a, b, n):
    c = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j in range(0, n + 1 - i):
                c[i + j] += x * b[j]
    return c


def inv(a, n):
    r = [0] * (n + 1)
    r[0] = Fraction(1) / a[0] if a[0] not in (1, -1) else a[0]
    for m in range(1, n + 1):
        s = sum(a[i] * r[m - i] for i in range(1, m + 1))
        r[m] = -s * r[0]
    return r


def power(a, k, n):
    if k < 0:
        return power(inv(a, n), -k, n)
    r = [1] + [0] * n
    for _ in range(k):
        r = mul(r, a, n)
    return r


def add(a, b):
    return [x + y for x, y in zip(a, b)]


def sub(a, b):
    return [x - y for x, y in zip(a, b)]


def const(c, n):
    return [c] + [0] * n


def poly(coeffs, n):
    return (list(coeffs) + [0] * (n + 1))[: n + 1]


def exp_lin(c, n):
    return [Fraction(c) ** i / factorial(i) for i in range(n + 1)]


def val(a):
    for i, x in enumerate(a):
        if x:
            return i
    return len(a)


def sum_prod(d, factor, n, kmax=None):
    """Σ_k d(k) Π_{j<=k} factor(j); runs until the product vanishes or kmax."""
    total = [0] * (n + 1)
    prod = const(1, n)
    k = 0
    while True:
        total = add(total, mul(d(k), prod, n) if d else prod)
        prod = mul(prod, factor(k + 1), n)
        k += 1
        if kmax is not None:
            if k > kmax:
                return total
        elif val(prod) > n:
            return total


def scaled(a):
    out = []
    for i, x in enumerate(a):
        y = Fraction(x) * factorial(i)
        assert y.denominator == 1
        out.append(int(y))
    return out


def integers(a):
    out = []
    for x in a:
        x = Fraction(x)
        assert x.denominator == 1
        out.append(int(x))
    return out


# ---------------------------------------------------------------- families

def geometric(n):
    return [1] * (n + 1)


def row(lam, n):
    return sum_prod(None, lambda j: sub(power(lam, j, n), const(1, n)), n)


def fishburn_direct(lam, n):
    li = inv(lam, n)
    return sum_prod(None, lambda j: sub(const(1, n), power(li, j, n)), n)


def zagier(n):
    one_minus = poly([1, -1], n)
    return sum_prod(None, lambda j: sub(const(1, n), power(one_minus, j, n)), n)


def egf(d, factor, n):
    return scaled(sum_prod(d, factor, n))


def a158690(n):
    return egf(None, lambda j: sub(exp_lin(j, n), const(1, n)), n)


def odd_egf(d, n):
    return egf(d, lambda j: sub(exp_lin(2 * j - 1, n), const(1, n)), n)


def recursive(kind, n):
    f = const(1, n)
    for _ in range(n + 2):
        if kind == "A186737":
            g = add(const(1, n), [0] + f[:n])
            f = row(g, n)
        else:
            s = row(f, n)
            f = add(sub(s, f), poly([1, 1], n))
    return f


def a207434(n):
    a = row(poly([1, 1], n), n)
    b = [0] * (n + 1)
    for m in range(1, n + 1):
        b[m] = m * a[m] - sum(b[j] * a[m - j] for j in range(1, m))
    return b


def a035378(n):
    zm1 = poly([-1, 1], n)
    s = sum_prod(None, lambda j: sub(const(1, n), power(zm1, j, n)), n, kmax=2 * n + 2)
    return sub(s, const(1, n))


def a207557(n):
    op = poly([1, 1], n)
    return sum_prod(lambda k: power(op, -k * (k - 1), n),
                    lambda j: sub(power(op, 2 * j - 1, n), const(1, n)), n)


def a207652(n, sign):
    base = poly([1, sign], n)

    def factor(j):
        num = sub(power(base, j, n), const(1, n)) if sign > 0 else sub(const(1, n), power(base, j, n))
        return mul(num, inv(sub(const(1, n), [0] * j + [1] + [0] * n), n), n)

    return sum_prod(None, factor, n)


def a207653(n):
    base = poly([1, -1], n)

    def factor(j):
        m = 2 * j - 1
        num = sub(const(1, n), power(base, m, n))
        return mul(num, inv(sub(const(1, n), ([0] * m + [1] + [0] * n)[: n + 1]), n), n)

    return sum_prod(None, factor, n)


def fractional(p, s, n):
    op = poly([1, 1], n)
    return sum_prod(None, lambda j: sub(power(op, p * j - s, n), const(1, n)), n)


def bernoulli_series(n):
    # z/(e^z - 1) = 1 / ((e^z - 1)/z)
    q = [Fraction(1, factorial(i + 1)) for i in range(n + 1)]
    return inv(q, n)


def a196194(n):
    d = bernoulli_series(n)
    return egf(lambda k: power(d, k, n), lambda j: sub(exp_lin(j, n), const(1, n)), n)


def a207214(n):
    return egf(lambda k: exp_lin(k, n), lambda j: sub(exp_lin(j, n), const(1, n)), n)


def ratio_row(den_pow, n):
    e = mul(poly([1, 1], n), inv(poly([1] + [0] * (den_pow - 1) + [1], n), n), n)
    return row(e, n)


def a207556(n):
    op = poly([1, 1], n)
    return sum_prod(lambda k: power(op, k, n), lambda j: sub(power(op, j, n), const(1, n)), n)


def glaisher(count):
    top = 2 * count + 1
    sin2 = [Fraction(0)] * (top + 1)
    cos3 = [Fraction(0)] * (top + 1)
    for i in range(top + 1):
        if i % 2:
            sin2[i] = Fraction((-1) ** (i // 2) * 2 ** i, factorial(i))
        else:
            cos3[i] = Fraction((-1) ** (i // 2) * 3 ** i, factorial(i))
    r = mul(sin2, inv(cos3, top), top)
    return [int(r[2 * m + 1] * factorial(2 * m + 1) / 2) for m in range(count)]


def ramanujan_r(n):
    # 1 + Σ_{k>=0} (-1)^k q^{k+1} Π (1 - q^j)
    total = const(1, n)
    prod = const(1, n)
    for k in range(n + 1):
        term = ([0] * (k + 1) + prod)[: n + 1]
        total = add(total, term if k % 2 == 0 else [-x for x in term])
        prod = mul(prod, sub(const(1, n), ([0] * (k + 1) + [1] + [0] * n)[: n + 1]), n)
    return total


# ---------------------------------------------------------------- brute force triangles

def matrices(n, zero_one):
    """Upper-triangular matrices with entry sum n and no zero row."""
    def fill(count, budget):
        if count == 0:
            if budget == 0:
                yield ()
            return
        top = min(budget, 1) if zero_one else budget
        for v in range(top + 1):
            for rest in fill(count - 1, budget - v):
                yield (v,) + rest

    for dim in range(1, n + 1):
        cells = [(i, j) for i in range(dim) for j in range(i, dim)]
        for choice in fill(len(cells), n):
            m = dict(zip(cells, choice))
            if any(all(m[(i, j)] == 0 for j in range(i, dim)) for i in range(dim)):
                continue
            yield dim, m


def fishburn_first_row_triangle(rows):
    out = []
    for n in range(1, rows + 1):
        hist = [0] * (n + 1)
        for dim, m in matrices(n, False):
            if any(all(m[(i, j)] == 0 for i in range(j + 1)) for j in range(dim)):
                continue
            hist[sum(m[(0, j)] for j in range(dim))] += 1
        out.extend(hist[1:])
    return out


def primitive_row_diagonal_triangle(rows):
    out = []
    for n in range(1, rows + 1):
        hist = [0] * (n + 1)
        for dim, m in matrices(n, True):
            hist[sum(m[(i, i)] for i in range(dim))] += 1
        out.extend(hist[1:])
    return out


# ---------------------------------------------------------------- table

def build():
    n = TERMS - 1
    all_ = geometric(n)
    seqs = {}
    seqs["A022493"] = (0, zagier(n), "sum prod (1-(1-z)^j)")
    seqs["A158690"] = (0, a158690(n), "n! [z^n] sum prod (e^{jz}-1)")
    seqs["A179525"] = (0, row(poly([1, 1], n), n), "row-Fishburn, Lambda 1+z")
    seqs["A158691"] = (0, row(all_, n), "row-Fishburn, Lambda 1/(1-z)")
    seqs["A207433"] = (0, row(poly([1, 1, 1], n), n), "row-Fishburn, Lambda 1+z+z^2")
    even_plus = mul(poly([1, 1], n), all_, n)
    odd = mul(poly([1, 1, -1], n), inv(poly([1, 0, -1], n), n), n)
    seqs["A289313"] = (0, row(even_plus, n), "row-Fishburn, Lambda (1+z)/(1-z)")
    seqs["A289316"] = (0, row(odd, n), "row-Fishburn, Lambda (1+z-z^2)/(1-z^2)")
    seqs["A289317"] = (0, fishburn_direct(odd, n), "Fishburn direct form, Lambda (1+z-z^2)/(1-z^2)")
    seqs["A289312"] = (0, fishburn_direct(even_plus, n), "Fishburn direct form, Lambda (1+z)/(1-z)")
    seqs["A138265"] = (0, fishburn_direct(poly([1, 1], n), n), "Fishburn direct form, Lambda 1+z")
    seqs["A079144"] = (0, egf(None, lambda j: sub(const(1, n), exp_lin(-j, n)), n),
                       "n! [z^n] sum prod (1-e^{-jz})")
    seqs["A175579"] = (1, fishburn_first_row_triangle(6)[:21], "brute force, Fishburn first-row triangle")
    seqs["A182319"] = (1, primitive_row_diagonal_triangle(6)[:21],
                       "brute force, primitive row-Fishburn diagonal triangle")
    seqs["A186737"] = (0, recursive("A186737", n), "fixed point f = sum prod ((1+zf)^j-1)")
    seqs["A224885"] = (0, recursive("A224885", n), "fixed point f = 1+z+sum prod (f^j-1) - f")
    seqs["A207652"] = (0, a207652(n, 1), "sum prod ((1+z)^j-1)/(1-z^j)")
    seqs["A207653"] = (0, a207653(n), "sum prod (1-(1-z)^{2j-1})/(1-z^{2j-1})")
    seqs["A207651"] = (0, a207652(n, -1), "sum prod (1-(1-z)^j)/(1-z^j)")
    seqs["A207434"] = (1, a207434(n + 1)[1:], "recurrence b_n = n a_n - sum b_j a_{n-j}")
    seqs["A035378"] = (0, a035378(n), "sum_{k>=1} prod (1-(z-1)^j)")
    seqs["A207557"] = (0, a207557(n), "sum (1+z)^{-k(k-1)} prod ((1+z)^{2j-1}-1)")
    seqs["A215066"] = (0, odd_egf(None, n), "n! [z^n] sum prod (e^{(2j-1)z}-1)")
    seqs["A209832"] = (0, odd_egf(lambda k: exp_lin(k + 1, n), n),
                       "n! [z^n] sum e^{(k+1)z} prod (e^{(2j-1)z}-1)")
    seqs["A214687"] = (0, odd_egf(lambda k: exp_lin(2 * k, n), n),
                       "n! [z^n] sum e^{2kz} prod (e^{(2j-1)z}-1)")
    seqs["A207569"] = (0, fractional(2, 1, n), "sum prod ((1+z)^{2j-1}-1)")
    seqs["A207570"] = (0, fractional(3, 2, n), "sum prod ((1+z)^{3j-2}-1)")
    seqs["A207571"] = (0, fractional(3, 1, n), "sum prod ((1+z)^{3j-1}-1)")
    seqs["A196194"] = (0, a196194(n), "n! [z^n] sum (z/(e^z-1))^k prod (e^{jz}-1)")
    seqs["A207214"] = (0, a207214(n), "n! [z^n] sum e^{kz} prod (e^{jz}-1)")
    seqs["A207386"] = (0, ratio_row(3, n), "sum prod (((1+z)/(1+z^3))^j-1)")
    seqs["A207397"] = (0, ratio_row(2, n), "sum prod (((1+z)/(1+z^2))^j-1)")
    seqs["A207556"] = (0, a207556(n), "sum (1+z)^k prod ((1+z)^j-1)")
    seqs["A002439"] = (0, glaisher(TERMS), "sin(2z)/(2cos 3z), odd coefficients")
    seqs["A003406"] = (0, ramanujan_r(n), "1 + sum (-1)^k q^{k+1} prod (1-q^j)")
    return {k: (off, integers(v), src) for k, (off, v, src) in seqs.items()}


PRINTED = {
    "A022493": [1, 1, 2, 5, 15, 53, 217],
    "A158691": [1, 1, 3, 12, 61, 380, 2815],
    "A179525": [1, 1, 2, 7, 33, 197, 1419],
    "A186737": [1, 1, 3, 14, 82, 563],
    "A224885": [1, 1, 2, 15, 143, 1552],
    # first-row triangle, rows 1..6
    "A175579": [1, 1, 1, 2, 2, 1, 5, 6, 3, 1, 15, 21, 12, 4, 1, 53, 84, 54, 20, 5, 1],
}


def main():
    out = sys.argv[1]
    seqs = build()
    for k, prefix in PRINTED.items():
        got = seqs[k][1][: len(prefix)]
        assert got == prefix, (k, got, prefix)
    for k, (_, terms, _) in seqs.items():
        assert len(terms) >= 15, k
    lines = [
        "// Generated by tools/gen_oeis_fixtures.py; do not edit.",
        "#include \"fishburn/oeis.hpp\"",
        "",
        "namespace fishburn::oeis {",
        "",
        "const std::vector<Fixture>& fixtures() {",
        "  static const std::vector<Fixture> table = {",
    ]
    for k, (off, terms, src) in seqs.items():
        lines.append(f"      // {src}")
        body = ", ".join(f'"{t}"' for t in terms)
        lines.append(f'      {{"{k}", {off}, {{{body}}}}},')
    lines += ["  };", "  return table;", "}", "", "}  // namespace fishburn::oeis", ""]
    with open(out, "w") as f:
        f.write("\n".join(lines))


if __name__ == "__main__":
    main()
