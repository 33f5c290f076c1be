"""Named algebras, constructions and combinators.

Every builder returns a validated :class:`HomLeibnizAlgebra`.  Entries
are addressed by a name plus keyword parameters, e.g.
``heisenberg(n=2)`` or ``abelian(n=2, alpha="zero")``; see
:func:`parse_ref` for the textual form.
"""

from __future__ import annotations

import ast
import inspect
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .algebra import (
    HomAction,
    HomLeibnizAlgebra,
    alpha_center,
    center,
    derived_ideal,
    direct_sum,
    quotient_algebra,
    semidirect_product,
    validate_algebra,
)
from .errors import CapExceeded, ValidationError
from .exactla import ONE, Echelon, Mat, QuotientMap, as_scalar, sparse_axpy, to_sparse

F = Fraction


def _checked(g: HomLeibnizAlgebra) -> HomLeibnizAlgebra:
    rep = validate_algebra(g)
    if rep:
        raise ValidationError(f"catalog builder produced an invalid algebra {g.name}", rep)
    return g


def _alpha_matrix(spec, n: int) -> Mat:
    """``"id"``, ``"zero"``, ``"scalar:c"``, ``"diag:a,b,..."``, ``"shift"`` or a Mat / nested list."""
    if isinstance(spec, Mat):
        return spec
    if isinstance(spec, (list, tuple)):
        return Mat.from_rows(spec, n)
    if spec in (None, "id"):
        return Mat.identity(n)
    if spec == "zero":
        return Mat.zeros(n, n)
    if spec == "shift":  # e_i -> e_{i+1}, last -> 0 (nilpotent)
        return Mat.from_sparse_columns([{i + 1: ONE} if i + 1 < n else {} for i in range(n)], n)
    if isinstance(spec, str) and spec.startswith("scalar:"):
        return Mat.identity(n).scale(as_scalar(spec.split(":", 1)[1]))
    if isinstance(spec, str) and spec.startswith("diag:"):
        vals = [as_scalar(x) for x in spec.split(":", 1)[1].split(",")]
        if len(vals) != n:
            raise ValueError("diag alpha needs one entry per basis vector")
        return Mat.from_sparse_columns([{i: v} if v else {} for i, v in enumerate(vals)], n)
    raise ValueError(f"unknown alpha specification {spec!r}")


# ----------------------------------------------------------------------
# named algebras


def abelian(n: int = 1, alpha="id") -> HomLeibnizAlgebra:
    if n < 0:
        raise ValueError("dimension must be non-negative")
    tag = alpha if isinstance(alpha, str) else "custom"
    return _checked(HomLeibnizAlgebra(n, {}, _alpha_matrix(alpha, n), f"abelian({n},{tag})"))


def heisenberg(n: int = 1, alpha="id") -> HomLeibnizAlgebra:
    """Basis x1..xn, y1..yn, z with [xi, yi] = z = -[yi, xi]."""
    if n < 1:
        raise ValueError("heisenberg needs n >= 1")
    d = 2 * n + 1
    prods = {}
    for i in range(n):
        prods[(i, n + i)] = {2 * n: ONE}
        prods[(n + i, i)] = {2 * n: -ONE}
    labels = [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)] + ["z"]
    tag = alpha if isinstance(alpha, str) else "custom"
    return _checked(HomLeibnizAlgebra(d, prods, _alpha_matrix(alpha, d), f"heisenberg({n},{tag})", labels))


_SL2 = {  # basis e, f, h
    (0, 1): {2: ONE}, (1, 0): {2: -ONE},
    (2, 0): {0: F(2)}, (0, 2): {0: F(-2)},
    (2, 1): {1: F(-2)}, (1, 2): {1: F(2)},
}


def sl2(alpha="id") -> HomLeibnizAlgebra:
    """sl2 with basis e, f, h.

    ``alpha="diag"`` twists the bracket by the automorphism e->2e, f->f/2,
    h->h (new bracket = alpha o old bracket), which is how a Lie algebra
    automorphism yields a Hom-Lie structure.
    """
    tag = alpha if isinstance(alpha, str) else "custom"
    if alpha == "diag":
        base = HomLeibnizAlgebra(3, _SL2, Mat.identity(3), "sl2", ["e", "f", "h"])
        return _checked(yau_twist(base, _alpha_matrix("diag:2,1/2,1", 3)).relabel(name=f"sl2({tag})"))
    a = _alpha_matrix(alpha, 3)
    return _checked(HomLeibnizAlgebra(3, _SL2, a, f"sl2({tag})", ["e", "f", "h"]))


def yau_twist(g: HomLeibnizAlgebra, a: Mat) -> HomLeibnizAlgebra:
    """Bracket ``a o [.,.]`` with endomorphism ``a``; ``a`` must be an endomorphism of g."""
    prods = {}
    for k, v in g.products.items():
        w = {}
        for i, c in v.items():
            sparse_axpy(w, c, to_sparse(a.column(i)))
        if w:
            prods[k] = w
    return HomLeibnizAlgebra(g.dim, prods, a, f"twist({g.name})", g.basis_labels)


def sl2_hemi(alpha="id") -> HomLeibnizAlgebra:
    """sl2 plus its 2-dim module V acted on from one side only: [v, x] = -x.v, [x, v] = 0.

    A perfect Leibniz algebra that is not Lie; its center is 0.
    """
    prods = {k: dict(v) for k, v in _SL2.items()}
    # V = span{v1, v2} (indices 3, 4): e.v2 = v1, f.v1 = v2, h.v1 = v1, h.v2 = -v2
    prods[(4, 0)] = {3: -ONE}
    prods[(3, 1)] = {4: -ONE}
    prods[(3, 2)] = {3: -ONE}
    prods[(4, 2)] = {4: ONE}
    a = Mat.identity(5) if alpha in (None, "id") else _alpha_matrix(alpha, 5)
    tag = alpha if isinstance(alpha, str) else "custom"
    return _checked(HomLeibnizAlgebra(5, prods, a, f"sl2_hemi({tag})", ["e", "f", "h", "v1", "v2"]))


def jacobi(alpha="id") -> HomLeibnizAlgebra:
    """sl2 acting on the Heisenberg algebra H(1): perfect, with center span{z}."""
    prods = {k: dict(v) for k, v in _SL2.items()}
    # basis e f h p q z (indices 0..5); V = span{p, q} with e.q = p, f.p = q, h.p = p, h.q = -q
    act = {(0, 4): {3: ONE}, (1, 3): {4: ONE}, (2, 3): {3: ONE}, (2, 4): {4: -ONE}}
    for (x, v), w in act.items():
        prods[(x, v)] = dict(w)
        prods[(v, x)] = {k: -c for k, c in w.items()}
    prods[(3, 4)] = {5: ONE}
    prods[(4, 3)] = {5: -ONE}
    a = Mat.identity(6) if alpha in (None, "id") else _alpha_matrix(alpha, 6)
    tag = alpha if isinstance(alpha, str) else "custom"
    return _checked(HomLeibnizAlgebra(6, prods, a, f"jacobi({tag})", ["e", "f", "h", "p", "q", "z"]))


def example_5_2_iii() -> HomLeibnizAlgebra:
    a = Mat.from_sparse_columns([{2: ONE}, {1: ONE}, {}], 3)
    return _checked(HomLeibnizAlgebra(3, {(0, 1): {2: ONE}}, a, "example_5_2_iii", ["e1", "e2", "e3"]))


def example_5_2_iii_cover() -> HomLeibnizAlgebra:
    """Four-dimensional K with K / Z_alpha(K) isomorphic to example_5_2_iii."""
    a = Mat.from_sparse_columns([{2: ONE}, {1: ONE}, {}, {}], 4)
    prods = {(0, 1): {2: ONE}, (2, 0): {3: ONE}}
    return _checked(HomLeibnizAlgebra(4, prods, a, "example_5_2_iii_cover", ["f1", "f2", "f3", "f4"]))


def example_5_2_i(base_dim: int = 1, alpha="zero") -> HomLeibnizAlgebra:
    """Cover of an abelian algebra: basis e_i, e_jk with [e_j, e_k] = e_jk.

    ``alpha`` is the endomorphism of the abelian base; on e_jk it acts by
    ``[alpha e_j, alpha e_k]``.
    """
    if base_dim < 1:
        raise ValueError("base_dim must be at least 1")
    n = base_dim
    a = _alpha_matrix(alpha, n)
    d = n + n * n
    idx = lambda j, k: n + j * n + k
    prods = {(j, k): {idx(j, k): ONE} for j in range(n) for k in range(n)}
    cols = []
    for i in range(n):
        cols.append(to_sparse(a.column(i)))
    acol = [dict(c) for c in cols]
    for j in range(n):
        for k in range(n):
            v = {}
            for p, x in acol[j].items():
                for q, y in acol[k].items():
                    v[idx(p, q)] = v.get(idx(p, q), 0) + x * y
            cols.append({key: c for key, c in v.items() if c})
    labels = [f"e{i + 1}" for i in range(n)] + [f"e{j + 1}{k + 1}" for j in range(n) for k in range(n)]
    tag = alpha if isinstance(alpha, str) else "custom"
    return _checked(HomLeibnizAlgebra(d, prods, Mat.from_sparse_columns(cols, d), f"example_5_2_i({n},{tag})", labels))


_EX_5_2_II_BASES = ("heisenberg", "example_5_2_iii", "example_5_2_iii_cover", "heisenberg2", "sl2")


def example_5_2_ii_base(seed: int = 0) -> HomLeibnizAlgebra:
    """A seed-chosen base algebra with zero endomorphism."""
    choice = random.Random(seed).choice(_EX_5_2_II_BASES)
    g = {
        "heisenberg": lambda: heisenberg(1),
        "heisenberg2": lambda: heisenberg(2),
        "example_5_2_iii": example_5_2_iii,
        "example_5_2_iii_cover": example_5_2_iii_cover,
        "sl2": sl2,
    }[choice]()
    return _checked(HomLeibnizAlgebra(g.dim, g.products, Mat.zeros(g.dim, g.dim), f"{g.name}|alpha=0", g.basis_labels))


def example_5_2_ii(g: HomLeibnizAlgebra | None = None, seed: int = 0) -> HomLeibnizAlgebra:
    """Cover K of a base g with zero endomorphism.

    K has basis {e_i} (an RREF basis of Z_alpha(g)), {t_i}, {f_j} (the
    remaining standard basis vectors of g) with [e_i, f_j0] = t_i for the
    lowest non-central index j0, the brackets of the f's as in g, and
    alpha = 0.  When Z_alpha(g) = 0 or g is abelian, g itself is returned.
    """
    if g is None:
        g = example_5_2_ii_base(seed)
    if not g.alpha.is_zero():
        raise ValidationError("example_5_2_ii needs a base with zero endomorphism")
    z = alpha_center(g)
    if z.dim == 0 or z.dim == g.dim:
        return g.relabel(name=f"example_5_2_ii({g.name})")
    zi = z.sparse_vectors()
    free = [j for j in range(g.dim) if j not in set(z.pivots)]
    # new basis of g: Z rows then units at free columns
    basis_cols = zi + [{j: ONE} for j in free]
    P = Mat.from_sparse_columns(basis_cols, g.dim)
    gb = g.change_basis(P)
    nz, nf = len(zi), len(free)
    d = 2 * nz + nf
    # K indices: e_i -> i, t_i -> nz + i, f_j -> 2 nz + j ; gb indices: e_i -> i, f_j -> nz + j
    remap = lambda k: k if k < nz else k + nz
    prods = {}
    for i in range(nz):
        prods[(i, 2 * nz)] = {nz + i: ONE}
    for j in range(nf):
        for k in range(nf):
            v = gb.basis_bracket(nz + j, nz + k)
            if v:
                prods[(2 * nz + j, 2 * nz + k)] = {remap(key): c for key, c in v.items()}
    labels = [f"e{i + 1}" for i in range(nz)] + [f"t{i + 1}" for i in range(nz)] + [f"f{j + 1}" for j in range(nf)]
    return _checked(HomLeibnizAlgebra(d, prods, Mat.zeros(d, d), f"example_5_2_ii({g.name})", labels))


# ----------------------------------------------------------------------
# truncated free algebra


def free_nilpotent(v_dim: int = 2, A="id", d: int = 2, cap: int = 20000) -> HomLeibnizAlgebra:
    """Degree <= d part of T(V) modulo the Hom-Leibniz relation ideal.

    Products are concatenation; products of total degree above d vanish.
    """
    if v_dim < 1 or d < 1:
        raise ValueError("v_dim and d must be positive")
    if v_dim ** d > cap:
        raise CapExceeded(f"free construction needs V^(x){d} of dimension {v_dim ** d} > cap {cap}")
    a = _alpha_matrix(A, v_dim)
    acol = [to_sparse(a.column(i)) for i in range(v_dim)]
    v = v_dim

    def alpha_deg(n):  # A^(x)n on V^(x)n as sparse columns
        cols = []
        for t in product(range(v), repeat=n):
            out = {0: ONE}
            for i in t:
                nxt = {}
                for k, x in out.items():
                    for j, y in acol[i].items():
                        nxt[k * v + j] = x * y
                out = nxt
            cols.append(out)
        return cols

    alphas = {n: alpha_deg(n) for n in range(1, d + 1)}

    def concat(x, nx, y, ny):
        out = {}
        for i, a_ in x.items():
            for j, b in y.items():
                out[i * v ** ny + j] = out.get(i * v ** ny + j, 0) + a_ * b
        return {k: c for k, c in out.items() if c}

    def apply(cols, x):
        out = {}
        for k, c in x.items():
            sparse_axpy(out, c, cols[k])
        return out

    # ideal components, degree by degree
    ideal = {}
    for n in range(1, d + 1):
        ech = Echelon(v ** n)
        # generator instances of degree m = i + j + k with unit tensors x, y, z
        for m in range(3, n + 1):
            for i in range(1, m - 1):
                for j in range(1, m - i):
                    k = m - i - j
                    for xt in range(v ** i):
                        ax = alphas[i][xt]
                        for yt in range(v ** j):
                            for zt in range(v ** k):
                                x, y, z = {xt: ONE}, {yt: ONE}, {zt: ONE}
                                g1 = concat(concat(ax, i, y, j), i + j, z, k)
                                g2 = concat(concat(x, i, y, j), i + j, alphas[k][zt], k)
                                g3 = concat(concat(x, i, z, k), i + k, alphas[j][yt], j)
                                gen = {}
                                sparse_axpy(gen, 1, g1)
                                sparse_axpy(gen, -1, g2)
                                sparse_axpy(gen, 1, g3)
                                if not gen:
                                    continue
                                # pad with unit tensors on both sides
                                for lu in range(n - m + 1):
                                    ru = n - m - lu
                                    for ut in range(v ** lu):
                                        for wt in range(v ** ru):
                                            vec = gen
                                            if lu:
                                                vec = concat({ut: ONE}, lu, vec, m)
                                            if ru:
                                                vec = concat(vec, m + lu, {wt: ONE}, ru)
                                            ech.add(vec)
        ideal[n] = ech.subspace()
    quots = {n: QuotientMap(v ** n, ideal[n]) for n in range(1, d + 1)}
    offsets, off = {}, 0
    for n in range(1, d + 1):
        offsets[n] = off
        off += quots[n].quotient_dim
    dim = off
    basis = []  # (degree, tensor index)
    for n in range(1, d + 1):
        for t in quots[n].free:
            basis.append((n, t))
    prods = {}
    for bi, (ni, ti) in enumerate(basis):
        for bj, (nj, tj) in enumerate(basis):
            if ni + nj > d:
                continue
            w = concat({ti: ONE}, ni, {tj: ONE}, nj)
            c = quots[ni + nj].project_sparse(w)
            if c:
                prods[(bi, bj)] = {offsets[ni + nj] + k: x for k, x in c.items()}
    acols = []
    for n, t in basis:
        c = quots[n].project_sparse(alphas[n][t])
        acols.append({offsets[n] + k: x for k, x in c.items()})

    def label(n, t):
        digits = []
        for _ in range(n):
            t, r = divmod(t, v)
            digits.append(str(r + 1))
        return "v" + "".join(reversed(digits))

    labels = [label(n, t) for n, t in basis]
    tag = A if isinstance(A, str) else "custom"
    return _checked(HomLeibnizAlgebra(dim, prods, Mat.from_sparse_columns(acols, dim), f"free_nilpotent({v_dim},{tag},{d})", labels))


# ----------------------------------------------------------------------
# combinators


def sum_of(*parts: HomLeibnizAlgebra) -> HomLeibnizAlgebra:
    g = parts[0]
    for h in parts[1:]:
        g = direct_sum(g, h)
    return _checked(g.relabel(name="sum(" + ",".join(p.name for p in parts) + ")"))


def quotient_of(g: HomLeibnizAlgebra, vectors) -> HomLeibnizAlgebra:
    q, _ = quotient_algebra(g, vectors, name=f"quotient({g.name})")
    return _checked(q)


def random_central_quotient(g: HomLeibnizAlgebra, seed: int = 0) -> HomLeibnizAlgebra:
    """Quotient by a seed-chosen line inside Z_alpha(g) (g itself if Z_alpha = 0)."""
    z = alpha_center(g)
    if z.dim == 0:
        return g
    rng = random.Random(seed)
    coeffs = [F(rng.randint(-3, 3)) for _ in range(z.dim)]
    if not any(coeffs):
        coeffs[0] = ONE
    vec = [sum((c * r[k] for c, r in zip(coeffs, z.basis.entries)), F(0)) for k in range(g.dim)]
    return quotient_of(g, [vec])


def semidirect_of(action: HomAction) -> HomLeibnizAlgebra:
    k, *_ = semidirect_product(action)
    return _checked(k)


def scaling_action(alpha_scale=1) -> HomAction:
    """span{x} acting on span{m} by x.m = m, m.x = -m, both with identity endomorphism."""
    G = abelian(1).relabel(name="span{x}", basis_labels=["x"])
    M = abelian(1).relabel(name="span{m}", basis_labels=["m"])
    return HomAction(G, M, {(0, 0): {0: ONE}}, {(0, 0): {0: -ONE}})


# ----------------------------------------------------------------------
# mutations (negative entries)


def mutate(g: HomLeibnizAlgebra, bracket=None, alpha=None, name: str | None = None) -> HomLeibnizAlgebra:
    """Copy of g with some structure constants or alpha columns overwritten (not validated)."""
    prods = {k: dict(v) for k, v in g.products.items()}
    for (i, j), vec in (bracket or {}).items():
        prods[(i, j)] = {k: as_scalar(c) for k, c in vec.items()}
    cols = [dict(g.alpha_column(i)) for i in range(g.dim)]
    for i, vec in (alpha or {}).items():
        cols[i] = {k: as_scalar(c) for k, c in vec.items()}
    return HomLeibnizAlgebra(g.dim, prods, Mat.from_sparse_columns(cols, g.dim), name or f"mutant({g.name})", g.basis_labels)


def mutants() -> list[tuple[str, HomLeibnizAlgebra, str, tuple]]:
    """Deliberately broken algebras: (id, algebra, violated axiom, first violating indices)."""
    return [
        ("ex523_alpha_e3", mutate(example_5_2_iii(), alpha={2: {2: 1}}, name="mutant:ex523 alpha(e3)=e3"),
         "multiplicative", (0, 1)),
        ("sl2_bracket_he", mutate(sl2(), bracket={(2, 0): {0: 3}}, name="mutant:sl2 [h,e]=3e"),
         "hom-leibniz", (0, 0, 1)),
        ("heisenberg_alpha_scaled", mutate(heisenberg(1), alpha={0: {0: 2}}, name="mutant:H(1) alpha(x1)=2x1"),
         "multiplicative", (0, 1)),
        ("hemi_right_action", mutate(sl2_hemi(), bracket={(2, 3): {3: 1}}, name="mutant:sl2_hemi [h,v1]=v1"),
         "hom-leibniz", (0, 1, 3)),
    ]


# ----------------------------------------------------------------------
# registry


@dataclass
class CatalogEntry:
    id: str
    params: dict
    builder: Callable[..., HomLeibnizAlgebra]
    expected: dict = field(default_factory=dict)

    @property
    def ref(self) -> str:
        return format_ref(self.id, self.params)

    def build(self) -> HomLeibnizAlgebra:
        g = self.builder(**self.params).relabel(name=self.ref)
        for key, (value, _tag) in self.expected.items():
            got = CHEAP_INVARIANTS[key](g)
            if got != value:
                raise ValidationError(f"catalog entry {self.ref}: {key} = {got}, expected {value}")
        return g


CHEAP_INVARIANTS: dict[str, Callable[[HomLeibnizAlgebra], object]] = {
    "dim": lambda g: g.dim,
    "derived_dim": lambda g: derived_ideal(g).dim,
    "center_dim": lambda g: center(g).dim,
    "left_center_dim": lambda g: center(g, "left").dim,
    "alpha_center_dim": lambda g: alpha_center(g).dim,
}

BUILDERS: dict[str, Callable[..., HomLeibnizAlgebra]] = {
    "abelian": abelian,
    "heisenberg": heisenberg,
    "sl2": sl2,
    "sl2_hemi": sl2_hemi,
    "jacobi": jacobi,
    "example_5_2_i": example_5_2_i,
    "example_5_2_ii": lambda seed=0: example_5_2_ii(seed=seed),
    "example_5_2_ii_base": example_5_2_ii_base,
    "example_5_2_iii": example_5_2_iii,
    "example_5_2_iii_cover": example_5_2_iii_cover,
    "free_nilpotent": free_nilpotent,
    "ex523_plus_line": lambda alpha="id": sum_of(example_5_2_iii(), abelian(1, alpha)),
    "heisenberg_pair": lambda: sum_of(heisenberg(1), heisenberg(1)),
    "heisenberg2_pair": lambda: sum_of(heisenberg(2), heisenberg(2)),
    "sl2_pair": lambda: sum_of(sl2(), sl2()),
    "heisenberg2_plus_null": lambda: sum_of(heisenberg(2), abelian(1, "zero")),
    "scaling_semidirect": lambda: semidirect_of(scaling_action()),
    "cover_central_quotient": lambda seed=0: random_central_quotient(example_5_2_iii_cover(), seed),
}


def _e(id_, expected=None, **params) -> CatalogEntry:
    return CatalogEntry(id_, params, BUILDERS[id_], expected or {})


D, P = "derived", "reference"

ENTRIES: list[CatalogEntry] = [
    _e("example_5_2_i", {"dim": (2, D), "alpha_center_dim": (1, P)}, base_dim=1),
    _e("example_5_2_i", {"dim": (6, D), "alpha_center_dim": (4, P)}, base_dim=2),
    _e("example_5_2_i", {"dim": (2, D), "alpha_center_dim": (1, P)}, base_dim=1, alpha="id"),
    _e("example_5_2_ii", {"alpha_center_dim": (1, P)}, seed=0),
    _e("example_5_2_ii", {"alpha_center_dim": (1, P)}, seed=3),
    _e("example_5_2_iii", {"dim": (3, P), "center_dim": (1, D), "left_center_dim": (2, D), "alpha_center_dim": (1, P)}),
    _e("example_5_2_iii_cover", {"dim": (4, P), "alpha_center_dim": (1, P)}),
    _e("heisenberg", {"dim": (3, D), "center_dim": (1, D)}, n=1),
    _e("heisenberg", {"dim": (5, D), "center_dim": (1, D)}, n=2),
    _e("heisenberg", {"dim": (3, D), "alpha_center_dim": (1, D)}, n=1, alpha="diag:1,2,2"),
    _e("abelian", {"dim": (1, D)}, n=1),
    _e("abelian", {"dim": (1, D)}, n=1, alpha="zero"),
    _e("abelian", {"dim": (1, D)}, n=1, alpha="scalar:2"),
    _e("abelian", {"dim": (2, D)}, n=2),
    _e("abelian", {"dim": (2, D)}, n=2, alpha="zero"),
    _e("abelian", {"dim": (2, D)}, n=2, alpha="shift"),
    _e("abelian", {"dim": (2, D)}, n=2, alpha="diag:1,-1"),
    _e("abelian", {"dim": (3, D)}, n=3),
    _e("abelian", {"dim": (3, D)}, n=3, alpha="zero"),
    _e("abelian", {"dim": (3, D)}, n=3, alpha="shift"),
    _e("sl2", {"dim": (3, D), "derived_dim": (3, D), "center_dim": (0, D)}),
    _e("sl2", {"derived_dim": (3, D)}, alpha="diag"),
    _e("sl2", {"derived_dim": (3, D), "alpha_center_dim": (0, D)}, alpha="zero"),
    _e("sl2_hemi", {"dim": (5, D), "derived_dim": (5, D), "center_dim": (0, D)}),
    _e("jacobi", {"dim": (6, D), "derived_dim": (6, D), "center_dim": (1, D)}),
    _e("free_nilpotent", {"dim": (6, D)}, v_dim=2, A="id", d=2),
    _e("free_nilpotent", {"dim": (6, D)}, v_dim=2, A="id", d=3),
    _e("free_nilpotent", {"dim": (2, D)}, v_dim=1, A="id", d=2),
    _e("ex523_plus_line", {"dim": (4, D), "center_dim": (2, D)}),
    _e("heisenberg_pair", {"dim": (6, D), "derived_dim": (2, D)}),
    _e("sl2_pair", {"dim": (6, D), "derived_dim": (6, D)}),
    _e("heisenberg2_plus_null", {"dim": (6, D)}),
    _e("scaling_semidirect", {"dim": (2, D)}),
    _e("cover_central_quotient", {"dim": (3, D)}),
]


def format_ref(id_: str, params: dict) -> str:
    if not params:
        return id_
    inner = ",".join(f"{k}={v!r}" for k, v in params.items())
    return f"{id_}({inner})"


def parse_ref(text: str) -> tuple[str, dict]:
    """Parse ``NAME`` or ``NAME(k=v, ...)`` (positional values are allowed too)."""
    text = text.strip()
    try:
        node = ast.parse(text, mode="eval").body
    except SyntaxError as exc:
        raise ValueError(f"cannot parse catalog reference {text!r}: {exc.msg}") from None
    if isinstance(node, ast.Name):
        return node.id, {}
    if not (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)):
        raise ValueError(f"malformed catalog reference {text!r}")
    name = node.func.id
    if name not in BUILDERS:
        raise ValueError(f"unknown catalog entry {name!r}")
    try:
        pos = [ast.literal_eval(a) for a in node.args]
        kw = {k.arg: ast.literal_eval(k.value) for k in node.keywords}
    except ValueError:
        raise ValueError(f"catalog parameters must be literals in {text!r}") from None
    sig = inspect.signature(BUILDERS[name])
    try:
        bound = sig.bind(*pos, **kw)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {exc}") from None
    return name, dict(bound.arguments)


def build(id_: str, params: dict | None = None) -> HomLeibnizAlgebra:
    if id_ not in BUILDERS:
        raise ValueError(f"unknown catalog entry {id_!r}")
    params = dict(params or {})
    for e in ENTRIES:
        if e.id == id_ and e.params == params:
            return e.build()
    try:
        g = BUILDERS[id_](**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {id_}: {exc}") from None
    return g.relabel(name=format_ref(id_, params))


def build_ref(text: str) -> HomLeibnizAlgebra:
    return build(*parse_ref(text))


def entries() -> list[CatalogEntry]:
    return list(ENTRIES)


def build_all() -> list[HomLeibnizAlgebra]:
    return [e.build() for e in ENTRIES]
