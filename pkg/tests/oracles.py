"""Independent reference computations built on sympy.

Nothing here imports the package's linear algebra, boundary or product
code.  Algebras enter only through their structure constants, as plain
nested lists, and every rank is computed by sympy.
"""

from __future__ import annotations

from itertools import product

import sympy as sp


def structure(g):
    """(dim, br, al) with br[i][j] a dense list and al[i] = alpha(e_i) dense."""
    d = g.dim
    br = [[[sp.Rational(0)] * d for _ in range(d)] for _ in range(d)]
    for (i, j), v in g.products.items():
        for k, c in v.items():
            br[i][j][k] = sp.Rational(c.numerator, c.denominator)
    al = [[sp.Rational(0)] * d for _ in range(d)]
    for i in range(d):
        for k in range(d):
            c = g.alpha.entries[k][i]
            al[i][k] = sp.Rational(c.numerator, c.denominator)
    return d, br, al


def bracket(br, x, y):
    d = len(x)
    out = [sp.Rational(0)] * d
    for i in range(d):
        if x[i] == 0:
            continue
        for j in range(d):
            if y[j] == 0:
                continue
            c = x[i] * y[j]
            for k in range(d):
                out[k] += c * br[i][j][k]
    return out


def apply_alpha(al, x):
    d = len(x)
    out = [sp.Rational(0)] * d
    for i in range(d):
        if x[i]:
            for k in range(d):
                out[k] += x[i] * al[i][k]
    return out


def unit(d, i):
    v = [sp.Rational(0)] * d
    v[i] = sp.Rational(1)
    return v


def rank(rows, ncols):
    if not rows:
        return 0
    return sp.Matrix(rows).rank()


def boundary_rank(g, n):
    """Rank of d_n on g^(x)n, straight from the defining sum."""
    d, br, al = structure(g)
    if n == 1:
        return 0
    cols = []
    for t in product(range(d), repeat=n):
        col = {}
        for i in range(n):
            for j in range(i + 1, n):
                b = br[t[i]][t[j]]
                if not any(b):
                    continue
                sign = (-1) ** (j + 2)  # 1-based position j+1
                factors = []
                for k in range(n):
                    if k == i:
                        factors.append(b)
                    elif k != j:
                        factors.append(al[t[k]])
                for idx in product(range(d), repeat=n - 1):
                    c = sign
                    for f, r in zip(factors, idx):
                        c *= f[r]
                        if c == 0:
                            break
                    if c:
                        col[idx] = col.get(idx, 0) + c
        cols.append(col)
    keys = list(product(range(d), repeat=n - 1))
    rows = [[c.get(k, 0) for k in keys] for c in cols]
    return rank(rows, len(keys))


def hl_dims(g, top):
    d = g.dim
    ranks = {n: boundary_rank(g, n) for n in range(1, top + 2)}
    return [d ** n - ranks[n] - ranks[n + 1] for n in range(1, top + 1)]


def _self_relations(d, br, al):
    """Relation vectors of the self tensor square, indexed by ('MN'|'NM', x, y)."""
    gens = [("MN", a, b) for a in range(d) for b in range(d)] + [("NM", a, b) for a in range(d) for b in range(d)]
    pos = {g: k for k, g in enumerate(gens)}

    def gen(tag, x, y):
        v = [sp.Rational(0)] * len(gens)
        for a in range(d):
            if x[a] == 0:
                continue
            for b in range(d):
                if y[b]:
                    v[pos[(tag, a, b)]] += x[a] * y[b]
        return v

    def comb(*terms):
        out = [sp.Rational(0)] * len(gens)
        for s, v in terms:
            for k, c in enumerate(v):
                out[k] += s * c
        return out

    E = [unit(d, i) for i in range(d)]
    A = [apply_alpha(al, e) for e in E]
    B = lambda x, y: bracket(br, x, y)
    rels = []
    # every action in the self pair is the bracket of g
    for m, m2, n in product(range(d), repeat=3):
        x, x2, y = E[m], E[m2], E[n]
        # a(m) * ^m' n = - a(m) * n^m'
        rels.append(comb((1, gen("MN", A[m], B(x2, y))), (1, gen("MN", A[m], B(y, x2)))))
        # with the roles of the copies exchanged
        rels.append(comb((1, gen("NM", A[m], B(x2, y))), (1, gen("NM", A[m], B(y, x2)))))
        # a(m) * [n, n'] = m^n * a(n') - m^n' * a(n)   (m = x, n = x2, n' = y)
        rels.append(comb((1, gen("MN", A[m], B(x2, y))), (-1, gen("MN", B(x, x2), A[n])), (1, gen("MN", B(x, y), A[m2]))))
        rels.append(comb((1, gen("NM", A[m], B(x2, y))), (-1, gen("NM", B(x, x2), A[n])), (1, gen("NM", B(x, y), A[m2]))))
        # [m, m'] * a(n) = ^m n * a(m') - a(m) * n^m'
        rels.append(comb((1, gen("MN", B(x, x2), A[n])), (-1, gen("NM", B(x, y), A[m2])), (1, gen("MN", A[m], B(y, x2)))))
        rels.append(comb((1, gen("NM", B(x, x2), A[n])), (-1, gen("MN", B(x, y), A[m2])), (1, gen("NM", A[m], B(y, x2)))))
    for a, b, c, e in product(range(d), repeat=4):
        x, y, x2, y2 = E[a], E[b], E[c], E[e]
        # both sides of each bracket identification agree
        rels.append(comb((1, gen("MN", B(x, y), B(x2, y2))), (-1, gen("NM", B(x, y), B(x2, y2)))))
        rels.append(comb((1, gen("MN", B(y, x), B(y2, x2))), (-1, gen("NM", B(y, x), B(y2, x2)))))
        rels.append(comb((1, gen("MN", B(x, y), B(y2, x2))), (-1, gen("NM", B(x, y), B(y2, x2)))))
        rels.append(comb((1, gen("MN", B(y, x), B(x2, y2))), (-1, gen("NM", B(y, x), B(x2, y2)))))
    return gens, [r for r in rels if any(r)]


def self_square_dims(g):
    """(dim g*g, dim g^g, dim ker lambda on g^g) for the self pair."""
    d, br, al = structure(g)
    gens, rels = _self_relations(d, br, al)
    F = len(gens)
    r_t = rank(rels, F)
    pos = {x: k for k, x in enumerate(gens)}
    squares = []
    for a in range(d):
        for b in range(d):
            v = [sp.Rational(0)] * F
            v[pos[("MN", a, b)]] += 1
            v[pos[("NM", a, b)]] -= 1
            squares.append(v)
    r_w = rank(rels + squares, F)
    # lambda(x * y) = [x, y] on both copies
    lam = [br[a][b] for (_, a, b) in gens]
    for r in rels + squares:
        img = [sum(r[k] * lam[k][i] for k in range(F)) for i in range(d)]
        assert not any(img), "lambda must vanish on the relations"
    r_lam = rank([list(col) for col in lam], d)
    wedge = F - r_w
    return F - r_t, wedge, wedge - r_lam
