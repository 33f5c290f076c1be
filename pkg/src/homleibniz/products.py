"""Non-abelian tensor and exterior products of crossed-module pairs.

For a pair ``M -> G <- N`` the product is built on the generator space
``F = (M (x) N) (+) (N (x) M)``.  Generator ``m_a * n_b`` has index
``a * dim N + b``; generator ``n_b * m_a`` has index
``dim M * dim N + b * dim M + a``.  The relation space R is spanned by
every basis instance of the linear relations and of the bracket
identifications, then closed under alpha and the bracket lift so that
``F / R`` is a genuine Hom-Leibniz algebra.  The exterior product also
quotients by the square subspace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .algebra import (
    CrossedModulePair,
    HomAction,
    HomLeibnizAlgebra,
    Morphism,
    SubIdeal,
    Violation,
    _as_space,
    abelianization,
    derived_ideal,
    direct_sum,
    ideal_crossed_module,
    is_perfect,
    quotient_algebra,
    semidirect_product,
    center,
    higgins_commutator,
    make_ideal,
    validate_algebra,
    validate_crossed_module,
    whole,
)
from .homology import hl2_dim
from .errors import CapExceeded, IntegrityError, ValidationError
from .exactla import (
    ONE,
    Echelon,
    Mat,
    QuotientMap,
    RelativeBasis,
    Sparse,
    Subspace,
    kernel_basis,
    hstack,
    sparse_axpy,
    sparse_kron,
    to_dense,
    to_sparse,
)

DEFAULT_COMPONENT_CAP = 6


def _u(i: int) -> Sparse:
    return {i: ONE}


def _add(*vs: Sparse) -> Sparse:
    out: Sparse = {}
    for v in vs:
        sparse_axpy(out, 1, v)
    return out


def _neg(v: Sparse) -> Sparse:
    return {k: -x for k, x in v.items()}


# ----------------------------------------------------------------------
# pairs


def pair_from_ideals(g: HomLeibnizAlgebra, m=None, n=None) -> CrossedModulePair:
    """Two ideals of g (default: g itself) acting on each other by bracket."""
    m = whole(g) if m is None else m
    n = whole(g) if n is None else n
    c1 = ideal_crossed_module(g, _as_space(g, m))
    c2 = ideal_crossed_module(g, _as_space(g, n))
    p = CrossedModulePair(g, c1.mu, c2.mu, c1.action, c2.action)
    rep = validate_crossed_module(p)
    if rep:
        raise ValidationError("ideals do not form a crossed-module pair", rep)
    return p


def self_pair(g: HomLeibnizAlgebra) -> CrossedModulePair:
    return pair_from_ideals(g)


def disjoint_pair(g1: HomLeibnizAlgebra, g2: HomLeibnizAlgebra) -> CrossedModulePair:
    """g1 and g2 as commuting ideals of their direct sum."""
    total = direct_sum(g1, g2)
    d1 = g1.dim
    s1 = Subspace.span_of_units(total.dim, range(d1))
    s2 = Subspace.span_of_units(total.dim, range(d1, total.dim))
    return pair_from_ideals(total, s1, s2)


class _Tables:
    """Basis-level action values of a pair, computed once."""

    def __init__(self, p: CrossedModulePair):
        M, N = p.M, p.N
        self.dm, self.dn = M.dim, N.dim
        self.M, self.N = M, N
        self.mn_r, self.mn_l, self.nm_l, self.nm_r = {}, {}, {}, {}
        for a in range(M.dim):
            for b in range(N.dim):
                v = p.m_on_n_right(_u(a), _u(b))  # m^n in M
                if v:
                    self.mn_r[(a, b)] = v
                v = p.m_on_n_left(_u(a), _u(b))  # ^m n in N
                if v:
                    self.mn_l[(a, b)] = v
                v = p.n_on_m_left(_u(b), _u(a))  # ^n m in M
                if v:
                    self.nm_l[(b, a)] = v
                v = p.n_on_m_right(_u(b), _u(a))  # n^m in N
                if v:
                    self.nm_r[(b, a)] = v

    @property
    def F(self) -> int:
        return 2 * self.dm * self.dn

    def mn(self, m: Sparse, n: Sparse) -> Sparse:
        return sparse_kron(m, n, self.dn)

    def nm(self, n: Sparse, m: Sparse) -> Sparse:
        return sparse_kron(n, m, self.dm, self.dm * self.dn)

    def gen(self, k: int):
        """Decode a generator index into ('MN', a, b) or ('NM', b, a)."""
        split = self.dm * self.dn
        if k < split:
            return ("MN",) + divmod(k, self.dn)
        return ("NM",) + divmod(k - split, self.dm)


def _relation_instances(p: CrossedModulePair, t: _Tables) -> list[Sparse]:
    M, N = t.M, t.N
    dm, dn = t.dm, t.dn
    aM = [M.alpha_column(i) for i in range(dm)]
    aN = [N.alpha_column(i) for i in range(dn)]
    mn, nm = t.mn, t.nm
    get = lambda tab, k: tab.get(k, {})
    out: list[Sparse] = []

    def emit(v: Sparse) -> None:
        if v:
            out.append(v)

    # action compatibility and left-bracket rules, over m, m', n
    for a in range(dm):
        for a2 in range(dm):
            mm = M.basis_bracket(a, a2)
            for b in range(dn):
                emit(mn(aM[a], _add(get(t.mn_l, (a2, b)), get(t.nm_r, (b, a2)))))
                emit(_add(mn(mm, aN[b]), _neg(nm(get(t.mn_l, (a, b)), aM[a2])), mn(aM[a], get(t.nm_r, (b, a2)))))
    # the same with the roles of M and N exchanged
    for b in range(dn):
        for b2 in range(dn):
            nn = N.basis_bracket(b, b2)
            for a in range(dm):
                emit(nm(aN[b], _add(get(t.nm_l, (b2, a)), get(t.mn_r, (a, b2)))))
                emit(_add(nm(nn, aM[a]), _neg(mn(get(t.nm_l, (b, a)), aN[b2])), nm(aN[b], get(t.mn_r, (a, b2)))))
    # m * [n, n'] expanded, over m, n, n'
    for a in range(dm):
        for b in range(dn):
            for b2 in range(dn):
                emit(_add(mn(aM[a], N.basis_bracket(b, b2)), _neg(mn(get(t.mn_r, (a, b)), aN[b2])), mn(get(t.mn_r, (a, b2)), aN[b])))
    # n * [m, m'] expanded, over n, m, m'
    for b in range(dn):
        for a in range(dm):
            for a2 in range(dm):
                emit(_add(nm(aN[b], M.basis_bracket(a, a2)), _neg(nm(get(t.nm_r, (b, a)), aM[a2])), nm(get(t.nm_r, (b, a2)), aM[a])))
    # products of two generators agree across the MN and NM copies
    mn_keys = sorted(set(t.mn_r) | set(t.mn_l))
    nm_keys = sorted(set(t.nm_r) | set(t.nm_l))
    for k1 in mn_keys:
        for k2 in mn_keys:
            emit(_add(mn(get(t.mn_r, k1), get(t.mn_l, k2)), _neg(nm(get(t.mn_l, k1), get(t.mn_r, k2)))))
    for k1 in nm_keys:
        for k2 in nm_keys:
            emit(_add(mn(get(t.nm_l, k1), get(t.nm_r, k2)), _neg(nm(get(t.nm_r, k1), get(t.nm_l, k2)))))
    for k1 in mn_keys:
        for k2 in nm_keys:
            emit(_add(mn(get(t.mn_r, k1), get(t.nm_r, k2)), _neg(nm(get(t.mn_l, k1), get(t.nm_l, k2)))))
    for k1 in nm_keys:
        for k2 in mn_keys:
            emit(_add(mn(get(t.nm_l, k1), get(t.mn_l, k2)), _neg(nm(get(t.nm_r, k1), get(t.mn_r, k2)))))
    return out


def relation_span(p: CrossedModulePair) -> Subspace:
    """Span of all basis instances of the defining relations, inside F."""
    t = _Tables(p)
    return Subspace.from_sparse(t.F, _relation_instances(p, t))


class _Lift:
    """Bracket lift B and alpha on the generator space F."""

    def __init__(self, t: _Tables):
        self.t = t
        F = t.F
        dm, dn = t.dm, t.dn
        aM = [t.M.alpha_column(i) for i in range(dm)]
        aN = [t.N.alpha_column(i) for i in range(dn)]
        # first/second factor value of each generator under the relevant action
        self.alpha_cols: list[Sparse] = []
        left_val, right_val = [], []  # value used when the generator is on the left / right of B
        for k in range(F):
            kind, x, y = t.gen(k)
            if kind == "MN":
                a, b = x, y
                self.alpha_cols.append(t.mn(aM[a], aN[b]))
                left_val.append(("M", t.mn_r.get((a, b), {})))  # m^n
                right_val.append(("N", t.mn_l.get((a, b), {})))  # ^m n
            else:
                b, a = x, y
                self.alpha_cols.append(t.nm(aN[b], aM[a]))
                left_val.append(("M", t.nm_l.get((b, a), {})))  # ^n m
                right_val.append(("N", t.nm_r.get((b, a), {})))  # n^m
        # B(e_p, e_q) = left_val(p) (x) right_val(q) in the MN block
        self.by_left: list[dict[int, Sparse]] = [dict() for _ in range(F)]
        self.by_right: list[dict[int, Sparse]] = [dict() for _ in range(F)]
        lefts = [(p, v) for p, (_, v) in enumerate(left_val) if v]
        rights = [(q, v) for q, (_, v) in enumerate(right_val) if v]
        for p, u in lefts:
            for q, w in rights:
                v = t.mn(u, w)
                if v:
                    self.by_left[p][q] = v
                    self.by_right[q][p] = v

    def alpha(self, v: Sparse) -> Sparse:
        out: Sparse = {}
        for k, x in v.items():
            sparse_axpy(out, x, self.alpha_cols[k])
        return out

    def bracket(self, u: Sparse, w: Sparse) -> Sparse:
        out: Sparse = {}
        for p, x in u.items():
            row = self.by_left[p]
            if not row:
                continue
            for q, y in w.items():
                v = row.get(q)
                if v:
                    sparse_axpy(out, x * y, v)
        return out

    def consequences(self, v: Sparse) -> Iterable[Sparse]:
        """alpha(v), B(v, e_q) and B(e_q, v) for every generator q."""
        yield self.alpha(v)
        right: dict[int, Sparse] = {}
        left: dict[int, Sparse] = {}
        for p, x in v.items():
            for q, w in self.by_left[p].items():
                sparse_axpy(right.setdefault(q, {}), x, w)
            for q, w in self.by_right[p].items():
                sparse_axpy(left.setdefault(q, {}), x, w)
        for q in sorted(right):
            yield right[q]
        for q in sorted(left):
            yield left[q]


def _close(lift: _Lift, seeds: list[Sparse], F: int) -> tuple[Echelon, int]:
    """Smallest subspace containing ``seeds`` that is stable under alpha and B."""
    ech = Echelon(F)
    queue = [v for v in seeds if ech.add(v)]
    base_rank = ech.rank
    i = 0
    while i < len(queue):
        for c in lift.consequences(queue[i]):
            if c and ech.add(c):
                queue.append(c)
        i += 1
    return ech, ech.rank - base_rank


# ----------------------------------------------------------------------
# presentations


@dataclass
class ProductPresentation:
    pair: CrossedModulePair
    kind: str
    total: HomLeibnizAlgebra
    embed_MN: Mat
    embed_NM: Mat
    relation_space: Subspace
    square_space: Subspace
    lambda_: Morphism
    lambda_M: Morphism
    lambda_N: Morphism
    quotient: QuotientMap
    generator_labels: tuple
    closure_added: int = 0
    raw_relation_dim: int = 0
    _lift: _Lift = field(default=None, repr=False)
    _tables: _Tables = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.total.dim

    @property
    def F_dim(self) -> int:
        return self.quotient.ambient_dim

    def generator_class(self, k: int) -> Sparse:
        return self.quotient.project_sparse({k: ONE})

    def project(self, v: Sparse) -> Sparse:
        return self.quotient.project_sparse(v)

    def class_mn(self, m: Sparse, n: Sparse) -> Sparse:
        return self.project(self._tables.mn(m, n))

    def class_nm(self, n: Sparse, m: Sparse) -> Sparse:
        return self.project(self._tables.nm(n, m))

    def lift(self, c: Sparse) -> Sparse:
        return self.quotient.lift_sparse(c)

    def lambda_kernel(self) -> Subspace:
        return kernel_basis(self.lambda_.matrix)


def _generator_labels(t: _Tables, kind: str) -> tuple:
    op = "*" if kind == "tensor" else "∧"
    labels = []
    for k in range(t.F):
        tag, x, y = t.gen(k)
        if tag == "MN":
            labels.append(f"m[{x}]{op}n[{y}]")
        else:
            labels.append(f"n[{x}]{op}m[{y}]")
    return tuple(labels)


def _check_cap(p: CrossedModulePair, cap: int | None) -> None:
    cap = DEFAULT_COMPONENT_CAP if cap is None else cap
    big = max(p.M.dim, p.N.dim)
    if big > cap:
        raise CapExceeded(f"product component of dimension {big} exceeds cap {cap}")


def square_generators(p: CrossedModulePair, t: _Tables | None = None) -> list[Sparse]:
    """Vectors ``m (x) n' - n (x) m'`` for basis pairs of ``{(m, n) : mu1 m = mu2 n}``."""
    t = t or _Tables(p)
    stacked = hstack(p.mu1.matrix, p.mu2.matrix.scale(-1))
    P = kernel_basis(stacked)
    dm = p.M.dim
    parts = []
    for row in P.basis.entries:
        parts.append((to_sparse(row[:dm]), to_sparse(row[dm:])))
    out = []
    for m, n in parts:
        for m2, n2 in parts:
            v = _add(t.mn(m, n2), _neg(t.nm(n, m2)))
            if v:
                out.append(v)
    return out


def _build(p: CrossedModulePair, kind: str, cap: int | None, strict: bool) -> ProductPresentation:
    if kind not in ("tensor", "exterior"):
        raise ValueError(f"unknown product kind {kind!r}")
    _check_cap(p, cap)
    t = _Tables(p)
    F = t.F
    lift = _Lift(t)
    seeds = _relation_instances(p, t)
    raw = Subspace.from_sparse(F, seeds)
    square = Subspace.zero(F)
    if kind == "exterior":
        sq = square_generators(p, t)
        square = Subspace.from_sparse(F, sq)
        seeds = seeds + sq
    ech, added = _close(lift, seeds, F)
    # strict mode treats any missing relation as a bug; otherwise residuals are
    # folded into the relation space until the quotient is a valid algebra
    while True:
        R = ech.subspace()
        q = QuotientMap(F, R)
        total = _quotient_algebra(lift, q, t, kind)
        viol = validate_algebra(total)
        if not viol:
            break
        if strict:
            raise IntegrityError(f"{kind} product quotient violates the algebra axioms", viol)
        extra = [q.lift_sparse(to_sparse(v.residual)) for v in viol]
        before = ech.rank
        ech2, _ = _close(lift, ech.rows() + extra, F)
        added += ech2.rank - before
        ech = ech2
    if strict and added:
        raise IntegrityError(f"relation span is not closed: closure added {added} dimensions")
    G = p.base
    lam_cols, lm_cols, ln_cols = [], [], []
    mu1, mu2 = p.mu1, p.mu2
    for k in range(F):
        tag, x, y = t.gen(k)
        if tag == "MN":
            a, b = x, y
            lam_cols.append(G.bracket_sparse(mu1.column(a), mu2.column(b)))
            lm_cols.append(t.mn_r.get((a, b), {}))
            ln_cols.append(t.mn_l.get((a, b), {}))
        else:
            b, a = x, y
            lam_cols.append(G.bracket_sparse(mu2.column(b), mu1.column(a)))
            lm_cols.append(t.nm_l.get((b, a), {}))
            ln_cols.append(t.nm_r.get((b, a), {}))
    for name, cols, dim in (("lambda", lam_cols, G.dim), ("lambda_M", lm_cols, p.M.dim), ("lambda_N", ln_cols, p.N.dim)):
        for r in R.sparse_vectors():
            acc: Sparse = {}
            for k, x in r.items():
                sparse_axpy(acc, x, cols[k])
            if acc:
                raise IntegrityError(f"{name} does not vanish on the relation space")
    free = q.free
    lam = Morphism(total, G, Mat.from_sparse_columns([lam_cols[k] for k in free], G.dim))
    lam_m = Morphism(total, p.M, Mat.from_sparse_columns([lm_cols[k] for k in free], p.M.dim))
    lam_n = Morphism(total, p.N, Mat.from_sparse_columns([ln_cols[k] for k in free], p.N.dim))
    split = t.dm * t.dn
    emb_mn = Mat.from_sparse_columns([q.project_sparse({k: ONE}) for k in range(split)], total.dim)
    emb_nm = Mat.from_sparse_columns([q.project_sparse({k: ONE}) for k in range(split, F)], total.dim)
    return ProductPresentation(
        pair=p, kind=kind, total=total, embed_MN=emb_mn, embed_NM=emb_nm,
        relation_space=R, square_space=square, lambda_=lam, lambda_M=lam_m, lambda_N=lam_n,
        quotient=q, generator_labels=_generator_labels(t, kind), closure_added=added,
        raw_relation_dim=raw.dim, _lift=lift, _tables=t,
    )


def _quotient_algebra(lift: _Lift, q: QuotientMap, t: _Tables, kind: str) -> HomLeibnizAlgebra:
    free = q.free
    d = len(free)
    prods = {}
    for i, p_ in enumerate(free):
        row = lift.by_left[p_]
        if not row:
            continue
        for j, q_ in enumerate(free):
            v = row.get(q_)
            if v:
                c = q.project_sparse(v)
                if c:
                    prods[(i, j)] = c
    alpha = Mat.from_sparse_columns([q.project_sparse(lift.alpha_cols[k]) for k in free], d)
    labels = [_generator_labels(t, kind)[k] for k in free]
    return HomLeibnizAlgebra(d, prods, alpha, f"{t.M.name}{'*' if kind == 'tensor' else '^'}{t.N.name}", labels)


def tensor_product(p: CrossedModulePair, cap: int | None = None, strict: bool = True) -> ProductPresentation:
    return _build(p, "tensor", cap, strict)


def exterior_product(p: CrossedModulePair, cap: int | None = None, strict: bool = True) -> ProductPresentation:
    return _build(p, "exterior", cap, strict)


def square_subspace(p: CrossedModulePair, q: ProductPresentation) -> Subspace:
    """Classes of the square generators inside the tensor product ``q``."""
    if q.kind != "tensor":
        raise ValueError("square_subspace expects a tensor presentation")
    return Subspace.from_sparse(q.dim, [q.project(v) for v in square_generators(p, q._tables)])


def schur_multiplier(g: HomLeibnizAlgebra, cap: int | None = None) -> Subspace:
    """``ker(lambda)`` on ``g ^ g``."""
    return exterior_product(self_pair(g), cap).lambda_kernel()


def jl2_dim(g: HomLeibnizAlgebra, cap: int | None = None) -> int:
    return tensor_product(self_pair(g), cap).lambda_kernel().dim


# ----------------------------------------------------------------------
# the action of the base on a product


def guest_action(q: ProductPresentation) -> HomAction:
    """Action of the base G on the product, computed on generators and projected."""
    p, t = q.pair, q._tables
    G, M, N = p.base, p.M, p.N
    aM = [M.alpha_column(i) for i in range(t.dm)]
    aN = [N.alpha_column(i) for i in range(t.dn)]
    AM, AN = p.action_on_M, p.action_on_N

    def on_gen(x: Sparse, k: int) -> tuple[Sparse, Sparse]:
        tag, i, j = t.gen(k)
        if tag == "MN":
            m, n = _u(i), _u(j)
            am, an = aM[i], aN[j]
            left = _add(t.mn(AM.act_left(x, m), an), _neg(t.nm(AN.act_left(x, n), am)))
            right = _add(t.mn(AM.act_right(m, x), an), t.mn(am, AN.act_right(n, x)))
        else:
            n, m = _u(i), _u(j)
            an, am = aN[i], aM[j]
            left = _add(t.nm(AN.act_left(x, n), am), _neg(t.mn(AM.act_left(x, m), an)))
            right = _add(t.nm(AN.act_right(n, x), am), t.nm(an, AM.act_right(m, x)))
        return left, right

    # the action must respect the relation space
    for r in q.relation_space.sparse_vectors():
        for xi in range(G.dim):
            lacc: Sparse = {}
            racc: Sparse = {}
            for k, c in r.items():
                lft, rgt = on_gen(_u(xi), k)
                sparse_axpy(lacc, c, lft)
                sparse_axpy(racc, c, rgt)
            if q.project(lacc) or q.project(racc):
                raise IntegrityError("guest action does not preserve the relation space")
    left, right = {}, {}
    for xi in range(G.dim):
        for bi, k in enumerate(q.quotient.free):
            lft, rgt = on_gen(_u(xi), k)
            left[(xi, bi)] = q.project(lft)
            right[(bi, xi)] = q.project(rgt)
    return HomAction(G, q.total, left, right)


def guest_identity_check(q: ProductPresentation, act: HomAction | None = None) -> list[Violation]:
    """The four compatibilities between lambda and the guest action, on basis elements."""
    act = act or guest_action(q)
    G, T = q.pair.base, q.total
    lam = q.lambda_
    out = []
    for x in range(G.dim):
        ex, ax = _u(x), G.alpha_column(x)
        for y in range(T.dim):
            ey, ly = _u(y), lam.column(y)
            r = _add(lam.apply_sparse(act.act_left(ex, ey)), _neg(G.bracket_sparse(ax, ly)))
            if r:
                out.append(Violation("lambda-left", (x, y), to_dense(r, G.dim)))
            r = _add(lam.apply_sparse(act.act_right(ey, ex)), _neg(G.bracket_sparse(ly, ax)))
            if r:
                out.append(Violation("lambda-right", (y, x), to_dense(r, G.dim)))
    for y in range(T.dim):
        for y2 in range(T.dim):
            ey = _u(y)
            ay2 = T.alpha_column(y2)
            l2 = lam.column(y2)
            r = _add(act.act_left(l2, ey), _neg(T.bracket_sparse(ay2, ey)))
            if r:
                out.append(Violation("peiffer-left", (y2, y), to_dense(r, T.dim)))
            r = _add(act.act_right(ey, l2), _neg(T.bracket_sparse(ey, ay2)))
            if r:
                out.append(Violation("peiffer-right", (y, y2), to_dense(r, T.dim)))
    return out


# ----------------------------------------------------------------------
# induced maps


def product_map(src: ProductPresentation, tgt: ProductPresentation, f_first: Morphism, f_second: Morphism) -> Mat:
    """Matrix of ``m * n -> f(m) * g(n)`` from ``src.total`` to ``tgt.total``."""
    ts, tt = src._tables, tgt._tables
    if f_first.matrix.cols != ts.dm or f_first.matrix.rows != tt.dm:
        raise ValueError("first factor map has the wrong shape")
    if f_second.matrix.cols != ts.dn or f_second.matrix.rows != tt.dn:
        raise ValueError("second factor map has the wrong shape")

    def gen_image(k: int) -> Sparse:
        tag, i, j = ts.gen(k)
        if tag == "MN":
            return tt.mn(f_first.column(i), f_second.column(j))
        return tt.nm(f_second.column(i), f_first.column(j))

    def image(v: Sparse) -> Sparse:
        out: Sparse = {}
        for k, x in v.items():
            sparse_axpy(out, x, gen_image(k))
        return out

    for r in src.relation_space.sparse_vectors():
        if tgt.project(image(r)):
            raise IntegrityError("induced map does not send relations to relations")
    cols = [tgt.project(gen_image(k)) for k in src.quotient.free]
    return Mat.from_sparse_columns(cols, tgt.dim)


def induced_product_map(f: Morphism, kind: str = "exterior", cap: int | None = None,
                        src: ProductPresentation | None = None, tgt: ProductPresentation | None = None) -> Mat:
    """``K ^ K -> K' ^ K'`` (or ``*``) induced by ``f : K -> K'``."""
    build = exterior_product if kind == "exterior" else tensor_product
    src = src or build(self_pair(f.source), cap)
    tgt = tgt or build(self_pair(f.target), cap)
    return product_map(src, tgt, f, f)


# ----------------------------------------------------------------------
# extensions


@dataclass
class Extension:
    """``M >-> K ->> G`` with G = K / M; optional splitting ``section : G -> K``."""

    K: HomLeibnizAlgebra
    M_space: Subspace
    G: HomLeibnizAlgebra
    pi: Morphism
    section: Morphism | None = None
    name: str = ""

    @property
    def M_ideal(self) -> SubIdeal:
        return SubIdeal(self.K, self.M_space, "ideal")


def extension(K: HomLeibnizAlgebra, m_space, section_matrix: Mat | None = None, name: str = "") -> Extension:
    ms = _as_space(K, m_space)
    make_ideal(K, ms)
    G, pi = quotient_algebra(K, ms)
    sec = None
    if section_matrix is not None:
        sec = Morphism(G, K, section_matrix)
        rep = sec.validate()
        if rep:
            raise ValidationError("splitting is not a homomorphism", rep)
        if pi.matrix @ section_matrix != Mat.identity(G.dim):
            raise ValidationError("splitting is not a section of the projection")
    return Extension(K, ms, G, pi, sec, name or f"{ms.dim}>->{K.name}")


def split_extension_from_action(a: HomAction, name: str = "") -> Extension:
    """``M >-> M x| G ->> G`` for an action of G on M."""

    K, i_m, i_g, proj = semidirect_product(a)
    ms = Subspace.from_sparse(K.dim, [i_m.column(i) for i in range(a.actee.dim)])
    G, pi = quotient_algebra(K, ms)
    # the quotient basis is the G block, so i_g is already a section of pi
    if pi.matrix @ i_g.matrix != Mat.identity(G.dim):
        raise IntegrityError("semidirect injection is not a section of the projection")
    sec = Morphism(G, K, i_g.matrix)
    return Extension(K, ms, G, pi, sec, name or f"{a.actee.name}x|{a.actor.name}")


def _inclusion_map(pr: ProductPresentation, target_pair: CrossedModulePair, which: str) -> Morphism:
    src = pr.pair.M if which == "M" else pr.pair.N
    tgt = target_pair.M if which == "M" else target_pair.N
    mu = pr.pair.mu1 if which == "M" else pr.pair.mu2
    return Morphism(src, tgt, mu.matrix)


def _rank(m: Mat) -> int:
    return m.rank()


def sequence2_check(e: Extension, cap: int | None = None) -> dict:
    """Exactness of ``M ^ K -> K ^ K ->> G ^ G``."""
    K, G = e.K, e.G
    mk = exterior_product(pair_from_ideals(K, e.M_space, None), cap)
    kk = exterior_product(self_pair(K), cap)
    gg = exterior_product(self_pair(G), cap)
    phi = product_map(mk, kk, _inclusion_map(mk, kk.pair, "M"), Morphism.identity(K))
    theta = product_map(kk, gg, e.pi, e.pi)
    r_phi, r_theta = _rank(phi), _rank(theta)
    composite_zero = (theta @ phi).is_zero() if phi.cols and theta.rows else True
    exact = composite_zero and r_phi == kk.dim - r_theta
    surjective = r_theta == gg.dim
    return {
        "dims": {"M^K": mk.dim, "K^K": kk.dim, "G^G": gg.dim},
        "ranks": {"M^K->K^K": r_phi, "K^K->G^G": r_theta},
        "composite_zero": composite_zero,
        "exact_middle": exact,
        "surjective_right": surjective,
        "ok": exact and surjective,
    }


def split_injectivity_check(a: HomAction, cap: int | None = None) -> dict:
    e = split_extension_from_action(a)
    rep = sequence2_check(e, cap)
    r_phi = rep["ranks"]["M^K->K^K"]
    d = rep["dims"]
    injective = r_phi == d["M^K"]
    dims_ok = d["K^K"] == d["M^K"] + d["G^G"]
    rep.update({
        "injective": injective,
        "dim_identity": dims_ok,
        "image_dim": r_phi,
        "ok": injective and dims_ok and rep["ok"],
    })
    return rep


def perfect_checks(g: HomLeibnizAlgebra, cap: int | None = None) -> dict:
    if not is_perfect(g):
        raise ValidationError("perfect_checks needs a perfect algebra")
    p = self_pair(g)
    wedge = exterior_product(p, cap)
    star = tensor_product(p, cap)
    ker = wedge.lambda_kernel()
    z = center(wedge.total)
    res = {
        "wedge_perfect": is_perfect(wedge.total),
        "kernel_central": ker.issubset(z),
        "tensor_equals_exterior": star.dim == wedge.dim,
        "kernel_equals_hl2": ker.dim == hl2_dim(g),
        "dims": {"g*g": star.dim, "g^g": wedge.dim, "ker": ker.dim},
    }
    res["ok"] = all(v for k, v in res.items() if k != "dims")
    return res


# ----------------------------------------------------------------------
# the six-term segment


def _restrict_map(mat: Mat, src: Subspace, tgt: Subspace) -> Mat:
    """Matrix of ``mat`` from the RREF basis of ``src`` to that of ``tgt``."""
    cols = []
    piv = tgt.pivots
    for v in src.sparse_vectors():
        w = to_dense(mat.apply_sparse(v), mat.rows)
        if not tgt.contains(w):
            raise IntegrityError("map does not land in the target subspace")
        cols.append({i: w[p] for i, p in enumerate(piv) if w[p]})
    return Mat.from_sparse_columns(cols, tgt.dim)


def _exact_at(incoming: Mat, outgoing: Mat, dim_mid: int) -> dict:
    zero = True
    if incoming.cols and outgoing.rows:
        zero = (outgoing @ incoming).is_zero()
    r_in, r_out = incoming.rank(), outgoing.rank()
    return {"rank_in": r_in, "rank_out": r_out, "dim": dim_mid, "composite_zero": zero,
            "exact": zero and r_in == dim_mid - r_out}


def eight_term_check(e: Extension, cap: int | None = None) -> dict:
    """Exactness of ker(lambda_{M^K}) -> HL2(K) -> HL2(G) -> M/[M,K] -> HL1(K) ->> HL1(G).

    HL2 is realised as ker(lambda) on the exterior square and HL1 as the
    abelianization.
    """
    K, G = e.K, e.G
    mk = exterior_product(pair_from_ideals(K, e.M_space, None), cap)
    kk = exterior_product(self_pair(K), cap)
    gg = exterior_product(self_pair(G), cap)
    phi = product_map(mk, kk, _inclusion_map(mk, kk.pair, "M"), Morphism.identity(K))
    theta = product_map(kk, gg, e.pi, e.pi)
    A, B, C = mk.lambda_kernel(), kk.lambda_kernel(), gg.lambda_kernel()
    f_ab = _restrict_map(phi, A, B)
    f_bc = _restrict_map(theta, B, C)

    # connecting map: lift through a generator-level section of K ^ K ->> G ^ G
    sec = QuotientMap(K.dim, e.M_space).section
    sec_m = Morphism(G, K, sec)
    lift = product_map_linear(gg, kk, sec_m, sec_m)
    if not (theta @ lift == Mat.identity(gg.dim)):
        raise IntegrityError("generator lift is not a section of the induced product map")
    MK = higgins_commutator(K, e.M_space, whole(K)).space
    D_rel = RelativeBasis(e.M_space, MK)
    delta_cols = []
    for c in C.sparse_vectors():
        lifted = lift.apply_sparse(c)
        k = kk.lambda_.apply_sparse(lifted)
        delta_cols.append(D_rel.coordinates_sparse(k))
    f_cd = Mat.from_sparse_columns(delta_cols, D_rel.dim)

    KK = derived_ideal(K)
    GG = derived_ideal(G)
    qk = QuotientMap(K.dim, KK)
    qg = QuotientMap(G.dim, GG)
    f_de = Mat.from_sparse_columns([qk.project_sparse(r) for r in D_rel.sparse_representatives()], qk.quotient_dim)
    f_ef = Mat.from_sparse_columns([qg.project_sparse(e.pi.apply_sparse({k: ONE})) for k in qk.free], qg.quotient_dim)

    nodes = {
        "HL2(K)": _exact_at(f_ab, f_bc, B.dim),
        "HL2(G)": _exact_at(f_bc, f_cd, C.dim),
        "M/[M,K]": _exact_at(f_cd, f_de, D_rel.dim),
        "HL1(K)": _exact_at(f_de, f_ef, qk.quotient_dim),
    }
    surj = f_ef.rank() == qg.quotient_dim
    hl2_k, hl2_g = hl2_dim(K), hl2_dim(G)
    report = {
        "dims": {"ker(M^K)": A.dim, "HL2(K)": B.dim, "HL2(G)": C.dim, "M/[M,K]": D_rel.dim,
                 "HL1(K)": qk.quotient_dim, "HL1(G)": qg.quotient_dim},
        "nodes": nodes,
        "surjective_end": surj,
        "hl2_routes_agree": hl2_k == B.dim and hl2_g == C.dim,
        "split": e.section is not None,
    }
    ok = all(n["exact"] for n in nodes.values()) and surj and report["hl2_routes_agree"]
    if e.section is not None:
        inj = f_ab.rank() == A.dim
        sur = f_bc.rank() == C.dim
        report["split_sequence"] = {"injective": inj, "surjective": sur,
                                    "dim_identity": B.dim == A.dim + C.dim}
        ok = ok and inj and sur and B.dim == A.dim + C.dim
    report["ok"] = ok
    return report


def product_map_linear(src: ProductPresentation, tgt: ProductPresentation, f_first: Morphism, f_second: Morphism) -> Mat:
    """Like :func:`product_map` for linear (not necessarily multiplicative) maps.

    Used for generator-level lifts; relations need not be preserved, so
    the result depends on the chosen generator representatives.
    """
    ts, tt = src._tables, tgt._tables
    cols = []
    for k in src.quotient.free:
        tag, i, j = ts.gen(k)
        if tag == "MN":
            v = tt.mn(f_first.column(i), f_second.column(j))
        else:
            v = tt.nm(f_second.column(i), f_first.column(j))
        cols.append(tgt.project(v))
    return Mat.from_sparse_columns(cols, tgt.dim)


# ----------------------------------------------------------------------
# direct sums


def direct_sum_formulas_check(g1: HomLeibnizAlgebra, g2: HomLeibnizAlgebra, cap: int | None = None) -> dict:
    """Compare JL2 and HL2 of ``g1 + g2`` against the direct-sum formulas."""
    s = direct_sum(g1, g2)
    a1, _ = abelianization(g1)
    a2, _ = abelianization(g2)
    cross12 = tensor_product(disjoint_pair(a1, a2), cap).dim
    cross21 = tensor_product(disjoint_pair(a2, a1), cap).dim
    jl = {k: jl2_dim(x, cap) for k, x in (("g1", g1), ("g2", g2), ("sum", s))}
    hl = {k: hl2_dim(x) for k, x in (("g1", g1), ("g2", g2), ("sum", s))}
    jl_rhs = jl["g1"] + jl["g2"] + cross12 + cross21
    hl_rhs = hl["g1"] + hl["g2"] + cross12
    honest = tensor_product(disjoint_pair(g1, g2), cap).dim
    rep = {
        "JL2": {"lhs": jl["sum"], "rhs": jl_rhs, "parts": jl, "holds": jl["sum"] == jl_rhs},
        "HL2": {"lhs": hl["sum"], "rhs": hl_rhs, "parts": hl, "holds": hl["sum"] == hl_rhs},
        "cross": {"g1ab*g2ab": cross12, "g2ab*g1ab": cross21, "g1*g2_in_sum": honest},
    }
    surj = g1.is_regular() and g2.is_regular()
    if surj:
        tens = 2 * a1.dim * a2.dim
        rhs = hl["g1"] + hl["g2"] + tens
        rep["HL2_surjective"] = {"lhs": hl["sum"], "rhs": rhs, "holds": hl["sum"] == rhs}
    else:
        rep["HL2_surjective"] = None
    rep["ok"] = rep["JL2"]["holds"] and rep["HL2"]["holds"] and (not surj or rep["HL2_surjective"]["holds"])
    return rep
