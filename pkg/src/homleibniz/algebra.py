"""Hom-Leibniz algebras, morphisms, actions and crossed modules.

An algebra is stored as sparse structure constants: ``products[(i, j)]``
is the nonzero part of ``[e_i, e_j]`` as a ``{k: coefficient}`` dict.
``alpha`` is a square :class:`~homleibniz.exactla.Mat` acting on column
vectors, so column ``i`` holds ``alpha(e_i)``.

Validation never raises: violated axiom instances come back as a list of
:class:`Violation` records.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import AmbientMismatch, ValidationError
from .exactla import (
    ONE,
    Echelon,
    Mat,
    QuotientMap,
    Sparse,
    Subspace,
    as_scalar,
    block_diag,
    format_scalar,
    hstack,
    image_basis,
    kernel_basis,
    solve,
    sparse_axpy,
    to_dense,
    to_sparse,
    vstack,
)


# ----------------------------------------------------------------------
# violation records


@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: tuple
    residual: tuple

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "indices": list(self.indices),
            "residual": [format_scalar(x) for x in self.residual],
        }

    def __str__(self) -> str:
        res = ", ".join(format_scalar(x) for x in self.residual)
        return f"{self.axiom} at {self.indices}: residual ({res})"


def _sub(a: Sparse, b: Sparse) -> Sparse:
    out = dict(a)
    sparse_axpy(out, -1, b)
    return out


def _add(*vs: Sparse) -> Sparse:
    out: Sparse = {}
    for v in vs:
        sparse_axpy(out, 1, v)
    return out


def _bilinear(table: Mapping, x: Sparse, y: Sparse) -> Sparse:
    out: Sparse = {}
    for i, a in x.items():
        for j, b in y.items():
            v = table.get((i, j))
            if v:
                sparse_axpy(out, a * b, v)
    return out


def _linear(columns: Sequence[Sparse], x: Sparse) -> Sparse:
    out: Sparse = {}
    for i, a in x.items():
        sparse_axpy(out, a, columns[i])
    return out


def _unit(i: int) -> Sparse:
    return {i: ONE}


# ----------------------------------------------------------------------
# algebras


class HomLeibnizAlgebra:
    """A finite-dimensional algebra ``(g, alpha)`` over Q.

    Build with :meth:`from_products` or :meth:`from_sc`.  Instances are
    treated as immutable.
    """

    __slots__ = ("dim", "products", "alpha", "name", "basis_labels", "_alpha_cols", "_sc")

    def __init__(self, dim: int, products: Mapping, alpha: Mat, name: str = "", basis_labels: Sequence[str] | None = None):
        if alpha.rows != dim or alpha.cols != dim:
            raise AmbientMismatch(f"alpha must be {dim}x{dim}")
        clean = {}
        for (i, j), v in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"product index {(i, j)} out of range for dimension {dim}")
            v = {k: as_scalar(c) for k, c in v.items() if c}
            if any(not 0 <= k < dim for k in v):
                raise IndexError(f"product [{i},{j}] has an out-of-range component")
            if v:
                clean[(i, j)] = v
        self.dim = dim
        self.products = dict(sorted(clean.items()))
        self.alpha = alpha
        self.name = name
        labels = list(basis_labels) if basis_labels is not None else [f"e{i + 1}" for i in range(dim)]
        if len(labels) != dim:
            raise ValueError("wrong number of basis labels")
        self.basis_labels = tuple(labels)
        self._alpha_cols = tuple(to_sparse(alpha.column(i)) for i in range(dim))
        self._sc = None

    @classmethod
    def from_products(cls, dim, products, alpha=None, name="", basis_labels=None):
        """``products`` maps ``(i, j)`` to a sparse dict or a dense vector."""
        prods = {}
        for key, v in products.items():
            prods[key] = dict(v) if isinstance(v, Mapping) else to_sparse([as_scalar(x) for x in v])
        if alpha is None:
            alpha = Mat.identity(dim)
        return cls(dim, prods, alpha, name, basis_labels)

    @classmethod
    def from_sc(cls, sc, alpha, name="", basis_labels=None):
        dim = len(sc)
        prods = {}
        for i in range(dim):
            for j in range(dim):
                v = to_sparse([as_scalar(x) for x in sc[i][j]])
                if v:
                    prods[(i, j)] = v
        return cls(dim, prods, alpha, name, basis_labels)

    @classmethod
    def abelian(cls, dim: int, alpha: Mat | None = None, name: str = ""):
        return cls(dim, {}, alpha if alpha is not None else Mat.identity(dim), name or f"abelian({dim})")

    # -- structure access

    @property
    def sc(self) -> tuple:
        """Dense structure constants: ``sc[i][j][k]`` is the e_k-coefficient of [e_i, e_j]."""
        if self._sc is None:
            n = self.dim
            self._sc = tuple(
                tuple(to_dense(self.products.get((i, j), {}), n) for j in range(n)) for i in range(n)
            )
        return self._sc

    def basis_bracket(self, i: int, j: int) -> Sparse:
        return self.products.get((i, j), {})

    def bracket_sparse(self, x: Sparse, y: Sparse) -> Sparse:
        return _bilinear(self.products, x, y)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        if len(x) != self.dim or len(y) != self.dim:
            raise AmbientMismatch(f"vectors must have length {self.dim}")
        return to_dense(self.bracket_sparse(to_sparse(x), to_sparse(y)), self.dim)

    def alpha_sparse(self, x: Sparse) -> Sparse:
        return _linear(self._alpha_cols, x)

    def alpha_column(self, i: int) -> Sparse:
        return self._alpha_cols[i]

    def apply_alpha(self, x: Sequence) -> tuple:
        return self.alpha.apply(x)

    def bracket_matrix_right(self, j: int) -> Mat:
        """Matrix of ``x -> [x, e_j]``."""
        return Mat.from_sparse_columns([self.basis_bracket(i, j) for i in range(self.dim)], self.dim)

    def bracket_matrix_left(self, i: int) -> Mat:
        """Matrix of ``y -> [e_i, y]``."""
        return Mat.from_sparse_columns([self.basis_bracket(i, j) for j in range(self.dim)], self.dim)

    # -- flags

    def is_abelian(self) -> bool:
        return not self.products

    def is_regular(self) -> bool:
        return self.alpha.rank() == self.dim

    is_alpha_surjective = is_regular

    def is_antisymmetric(self) -> bool:
        return all(
            _add(self.basis_bracket(i, j), self.basis_bracket(j, i)) == {}
            for i in range(self.dim)
            for j in range(i, self.dim)
        )

    def relabel(self, name: str | None = None, basis_labels: Sequence[str] | None = None) -> "HomLeibnizAlgebra":
        return HomLeibnizAlgebra(
            self.dim, self.products, self.alpha, self.name if name is None else name,
            self.basis_labels if basis_labels is None else basis_labels,
        )

    def same_structure(self, other: "HomLeibnizAlgebra") -> bool:
        return self.dim == other.dim and self.products == other.products and self.alpha == other.alpha

    def change_basis(self, p: Mat, name: str | None = None) -> "HomLeibnizAlgebra":
        """The same algebra in the basis given by the columns of invertible ``p``."""

        n = self.dim
        cols = p.sparse_columns()

        def coords(v: Sparse) -> Sparse:
            sol = solve(p, to_dense(v, n))
            if sol is None:
                raise ValueError("change of basis matrix is singular")
            return to_sparse(sol)

        prods = {}
        for i in range(n):
            for j in range(n):
                v = self.bracket_sparse(cols[i], cols[j])
                if v:
                    prods[(i, j)] = coords(v)
        alpha = Mat.from_sparse_columns([coords(self.alpha_sparse(c)) for c in cols], n)
        return HomLeibnizAlgebra(n, prods, alpha, self.name if name is None else name)

    def __repr__(self) -> str:
        return f"HomLeibnizAlgebra({self.name or '?'}, dim={self.dim})"


# ----------------------------------------------------------------------
# validation


def validate_algebra(g: HomLeibnizAlgebra) -> list[Violation]:
    """All basis instances where the Hom-Leibniz identity or multiplicativity fails."""
    out = []
    n = g.dim
    br = g.bracket_sparse
    al = g.alpha_sparse
    # [a x, [y, z]] = [[x, y], a z] - [[x, z], a y]
    for x in range(n):
        ax = g.alpha_column(x)
        for y in range(n):
            ay = g.alpha_column(y)
            for z in range(n):
                az = g.alpha_column(z)
                yz = g.basis_bracket(y, z)
                xy = g.basis_bracket(x, y)
                xz = g.basis_bracket(x, z)
                if not (yz or xy or xz):
                    continue
                res = _sub(br(ax, yz), _sub(br(xy, az), br(xz, ay)))
                if res:
                    out.append(Violation("hom-leibniz", (x, y, z), to_dense(res, n)))
    for x in range(n):
        for y in range(n):
            res = _sub(al(g.basis_bracket(x, y)), br(g.alpha_column(x), g.alpha_column(y)))
            if res:
                out.append(Violation("multiplicative", (x, y), to_dense(res, n)))
    return out


def is_valid_algebra(g: HomLeibnizAlgebra) -> bool:
    return not validate_algebra(g)


# ----------------------------------------------------------------------
# morphisms


class Morphism:
    """Linear map between algebras; ``matrix`` is ``target.dim x source.dim``."""

    __slots__ = ("source", "target", "matrix", "_cols")

    def __init__(self, source: HomLeibnizAlgebra, target: HomLeibnizAlgebra, matrix: Mat):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise AmbientMismatch(
                f"morphism matrix must be {target.dim}x{source.dim}, got {matrix.rows}x{matrix.cols}"
            )
        self.source = source
        self.target = target
        self.matrix = matrix
        self._cols = tuple(matrix.sparse_columns())

    @classmethod
    def identity(cls, g: HomLeibnizAlgebra) -> "Morphism":
        return cls(g, g, Mat.identity(g.dim))

    @classmethod
    def zero(cls, source: HomLeibnizAlgebra, target: HomLeibnizAlgebra) -> "Morphism":
        return cls(source, target, Mat.zeros(target.dim, source.dim))

    def apply_sparse(self, x: Sparse) -> Sparse:
        return _linear(self._cols, x)

    def apply(self, x: Sequence) -> tuple:
        return self.matrix.apply(x)

    def column(self, i: int) -> Sparse:
        return self._cols[i]

    def compose(self, first: "Morphism") -> "Morphism":
        """``self o first``."""
        if first.target.dim != self.source.dim:
            raise AmbientMismatch("morphisms are not composable")
        return Morphism(first.source, self.target, self.matrix @ first.matrix)

    __matmul__ = compose

    def kernel(self) -> Subspace:
        return kernel_basis(self.matrix)

    def image(self) -> Subspace:

        return image_basis(self.matrix)

    def validate(self) -> list[Violation]:
        out = []
        s, t = self.source, self.target
        for i in range(s.dim):
            for j in range(s.dim):
                lhs = self.apply_sparse(s.basis_bracket(i, j))
                rhs = t.bracket_sparse(self._cols[i], self._cols[j])
                res = _sub(lhs, rhs)
                if res:
                    out.append(Violation("bracket", (i, j), to_dense(res, t.dim)))
        for i in range(s.dim):
            res = _sub(self.apply_sparse(s.alpha_column(i)), t.alpha_sparse(self._cols[i]))
            if res:
                out.append(Violation("alpha", (i,), to_dense(res, t.dim)))
        return out

    def is_valid(self) -> bool:
        return not self.validate()

    def __repr__(self) -> str:
        return f"Morphism({self.source.name or '?'} -> {self.target.name or '?'})"


def validate_morphism(f: Morphism) -> list[Violation]:
    return f.validate()


# ----------------------------------------------------------------------
# actions


class HomAction:
    """An action of ``actor`` (M) on ``actee`` (N).

    ``left[(a, b)]`` is ``^{m_a} n_b`` and ``right[(b, a)]`` is ``n_b^{m_a}``,
    both sparse vectors of N.
    """

    __slots__ = ("actor", "actee", "left", "right")

    def __init__(self, actor: HomLeibnizAlgebra, actee: HomLeibnizAlgebra, left: Mapping, right: Mapping):
        self.actor = actor
        self.actee = actee
        self.left = {k: dict(v) for k, v in sorted(left.items()) if v}
        self.right = {k: dict(v) for k, v in sorted(right.items()) if v}

    @classmethod
    def trivial(cls, actor, actee) -> "HomAction":
        return cls(actor, actee, {}, {})

    @classmethod
    def by_bracket(cls, g: HomLeibnizAlgebra) -> "HomAction":
        """The action of g on itself through its own bracket."""
        return cls(g, g, g.products, g.products)

    def act_left(self, m: Sparse, n: Sparse) -> Sparse:
        return _bilinear(self.left, m, n)

    def act_right(self, n: Sparse, m: Sparse) -> Sparse:
        return _bilinear(self.right, n, m)

    def is_trivial(self) -> bool:
        return not self.left and not self.right

    def __repr__(self) -> str:
        return f"HomAction({self.actor.name or '?'} on {self.actee.name or '?'})"


def validate_action(a: HomAction, a1: str = "corrected") -> list[Violation]:
    """Check the eight action axioms on all basis instances.

    ``a1="literal"`` checks the first axiom with a plus sign in front of the
    last term, which fails already for the bracket action of sl2; the
    default uses the sign that the Hom-Leibniz identity forces.
    """
    M, N = a.actor, a.actee
    L, R = a.act_left, a.act_right
    aM, aN = M.alpha_sparse, N.alpha_sparse
    bM, bN = M.bracket_sparse, N.bracket_sparse
    sign = 1 if a1 == "literal" else -1
    out = []
    dn = N.dim
    m_ = [_unit(i) for i in range(M.dim)]
    n_ = [_unit(i) for i in range(N.dim)]

    def rec(name, idx, res):
        if res:
            out.append(Violation(name, idx, to_dense(res, dn)))

    for i, m in enumerate(m_):
        for j, mp in enumerate(m_):
            mmp = bM(m, mp)
            for k, n in enumerate(n_):
                # A1
                lhs = L(mmp, aN(n))
                rhs = _add(R(L(m, n), aM(mp)), {q: sign * c for q, c in L(aM(m), R(n, mp)).items()})
                rec("A1", (i, j, k), _sub(lhs, rhs))
                # A3
                lhs = R(aN(n), mmp)
                rhs = _sub(R(R(n, m), aM(mp)), R(R(n, mp), aM(m)))
                rec("A3", (k, i, j), _sub(lhs, rhs))
                # A5
                rec("A5", (i, j, k), _add(L(aM(m), L(mp, n)), L(aM(m), R(n, mp))))
    for i, m in enumerate(m_):
        for k, n in enumerate(n_):
            for l, np_ in enumerate(n_):
                # A2
                lhs = L(aM(m), bN(n, np_))
                rhs = _sub(bN(L(m, n), aN(np_)), bN(L(m, np_), aN(n)))
                rec("A2", (i, k, l), _sub(lhs, rhs))
                # A4
                lhs = R(bN(n, np_), aM(m))
                rhs = _add(bN(R(n, m), aN(np_)), bN(aN(n), R(np_, m)))
                rec("A4", (k, l, i), _sub(lhs, rhs))
                # A6
                rec("A6", (k, i, l), _add(bN(aN(n), L(m, np_)), bN(aN(n), R(np_, m))))
    for i, m in enumerate(m_):
        for k, n in enumerate(n_):
            rec("A7", (i, k), _sub(aN(L(m, n)), L(aM(m), aN(n))))
            rec("A8", (k, i), _sub(aN(R(n, m)), R(aN(n), aM(m))))
    order = {f"A{i}": i for i in range(1, 9)}
    out.sort(key=lambda v: (order[v.axiom], v.indices))
    return out


# ----------------------------------------------------------------------
# subalgebras and ideals


@dataclass(frozen=True)
class SubIdeal:
    parent: HomLeibnizAlgebra
    space: Subspace
    kind: str  # "subalgebra" or "ideal"

    @property
    def dim(self) -> int:
        return self.space.dim


def _bracket_image_ok(g: HomLeibnizAlgebra, space: Subspace, other: Iterable[Sparse], side: str) -> bool:
    vecs = space.sparse_vectors()
    for v in vecs:
        for w in other:
            r = g.bracket_sparse(v, w) if side == "left" else g.bracket_sparse(w, v)
            if r and not space.contains(to_dense(r, g.dim)):
                return False
    return True


def is_alpha_invariant(g: HomLeibnizAlgebra, space: Subspace) -> bool:
    return all(space.contains(to_dense(g.alpha_sparse(v), g.dim)) for v in space.sparse_vectors())


def is_subalgebra(g: HomLeibnizAlgebra, space: Subspace) -> bool:
    return is_alpha_invariant(g, space) and _bracket_image_ok(g, space, space.sparse_vectors(), "left")


def is_ideal(g: HomLeibnizAlgebra, space: Subspace) -> bool:
    units = [_unit(i) for i in range(g.dim)]
    return (
        is_alpha_invariant(g, space)
        and _bracket_image_ok(g, space, units, "left")
        and _bracket_image_ok(g, space, units, "right")
    )


def _as_space(g: HomLeibnizAlgebra, space) -> Subspace:
    if isinstance(space, SubIdeal):
        return space.space
    if isinstance(space, Subspace):
        if space.ambient_dim != g.dim:
            raise AmbientMismatch("subspace lives in a different ambient space")
        return space
    return Subspace.from_vectors(g.dim, [tuple(as_scalar(x) for x in v) for v in space])


def make_subalgebra(g: HomLeibnizAlgebra, space) -> SubIdeal:
    s = _as_space(g, space)
    if not is_subalgebra(g, s):
        raise ValidationError("subspace is not an alpha-invariant subalgebra")
    return SubIdeal(g, s, "subalgebra")


def make_ideal(g: HomLeibnizAlgebra, space) -> SubIdeal:
    s = _as_space(g, space)
    if not is_ideal(g, s):
        raise ValidationError("subspace is not an alpha-invariant ideal")
    return SubIdeal(g, s, "ideal")


def whole(g: HomLeibnizAlgebra) -> SubIdeal:
    return SubIdeal(g, Subspace.full(g.dim), "ideal")


def restrict(g: HomLeibnizAlgebra, space, name: str | None = None) -> tuple[HomLeibnizAlgebra, Morphism]:
    """The subalgebra on ``space`` in its RREF basis, with its inclusion into g."""
    s = _as_space(g, space)
    if not is_subalgebra(g, s):
        raise ValidationError("subspace is not an alpha-invariant subalgebra")
    vecs = s.sparse_vectors()
    piv = s.pivots

    def coords(v: Sparse) -> Sparse:
        # RREF basis: the coordinate along row r is the pivot entry
        return {r: v[p] for r, p in enumerate(piv) if v.get(p)}

    prods = {}
    for a, u in enumerate(vecs):
        for b, w in enumerate(vecs):
            r = g.bracket_sparse(u, w)
            if r:
                prods[(a, b)] = coords(r)
    alpha = Mat.from_sparse_columns([coords(g.alpha_sparse(u)) for u in vecs], len(vecs))
    labels = None
    if all(len(u) == 1 and next(iter(u.values())) == 1 for u in vecs):
        labels = [g.basis_labels[next(iter(u))] for u in vecs]
    sub = HomLeibnizAlgebra(len(vecs), prods, alpha, name if name is not None else f"{g.name}|sub", labels)
    inc = Morphism(sub, g, Mat.from_sparse_columns(vecs, g.dim))
    return sub, inc


# ----------------------------------------------------------------------
# centers and commutators


def center(g: HomLeibnizAlgebra, mode: str = "two_sided") -> Subspace:
    """``{x : [x, y] = 0 for all y}`` (left) or also ``[y, x] = 0`` (two_sided)."""
    if mode not in ("two_sided", "left"):
        raise ValueError(f"unknown center mode {mode!r}")
    n = g.dim
    if n == 0:
        return Subspace.zero(0)
    blocks = [g.bracket_matrix_right(j) for j in range(n)]
    if mode == "two_sided":
        blocks += [g.bracket_matrix_left(j) for j in range(n)]
    return kernel_basis(vstack(*blocks))


def alpha_center(g: HomLeibnizAlgebra, mode: str = "two_sided") -> Subspace:
    """Elements all of whose alpha-iterates lie in the center."""
    z = center(g, mode)
    w = z
    for _ in range(g.dim + 1):
        nxt = z & w.preimage(g.alpha)
        if nxt == w:
            return w
        w = nxt
    return w


def higgins_commutator(g: HomLeibnizAlgebra, h, k) -> SubIdeal:
    """Smallest alpha-invariant subalgebra containing ``[h, k]`` and ``[k, h]``."""
    hs, ks = _as_space(g, h), _as_space(g, k)
    for s in (hs, ks):
        if not is_ideal(g, s):
            raise ValidationError("higgins commutator needs ideals")
    gens = []
    for u in hs.sparse_vectors():
        for w in ks.sparse_vectors():
            gens.append(g.bracket_sparse(u, w))
            gens.append(g.bracket_sparse(w, u))
    return SubIdeal(g, generated_subalgebra(g, gens), "subalgebra")


def generated_subalgebra(g: HomLeibnizAlgebra, gens: Iterable[Sparse]) -> Subspace:
    """Span closure of ``gens`` under bracket and alpha."""

    ech = Echelon(g.dim)
    frontier = [v for v in gens if v and ech.add(v)]
    basis = list(frontier)
    while frontier:
        new = []
        for v in frontier:
            cands = [g.alpha_sparse(v)]
            for w in basis:
                cands.append(g.bracket_sparse(v, w))
                cands.append(g.bracket_sparse(w, v))
            for c in cands:
                if c and ech.add(c):
                    new.append(c)
        basis.extend(new)
        frontier = new
    return ech.subspace()


def derived_ideal(g: HomLeibnizAlgebra) -> Subspace:
    return higgins_commutator(g, whole(g), whole(g)).space


def is_perfect(g: HomLeibnizAlgebra) -> bool:
    return derived_ideal(g).is_full()


# ----------------------------------------------------------------------
# quotients, sums


def quotient_algebra(g: HomLeibnizAlgebra, n, name: str | None = None) -> tuple[HomLeibnizAlgebra, Morphism]:
    s = _as_space(g, n)
    if not is_ideal(g, s):
        raise ValidationError("can only quotient by an alpha-invariant ideal")
    q = QuotientMap(g.dim, s)
    d = q.quotient_dim
    prods = {}
    for a, i in enumerate(q.free):
        for b, j in enumerate(q.free):
            v = q.project_sparse(g.basis_bracket(i, j))
            if v:
                prods[(a, b)] = v
    alpha = Mat.from_sparse_columns([q.project_sparse(g.alpha_column(i)) for i in q.free], d)
    labels = [g.basis_labels[i] + "~" for i in q.free] if s.dim else list(g.basis_labels)
    quo = HomLeibnizAlgebra(d, prods, alpha, name if name is not None else f"{g.name}/{s.dim}", labels)
    return quo, Morphism(g, quo, q.projection)


def abelianization(g: HomLeibnizAlgebra) -> tuple[HomLeibnizAlgebra, Morphism]:
    return quotient_algebra(g, derived_ideal(g), name=f"{g.name}^ab")


def _disjoint_labels(a: Sequence[str], b: Sequence[str]) -> list[str]:
    if set(a).isdisjoint(b):
        return list(a) + list(b)
    return [f"{x}_1" for x in a] + [f"{x}_2" for x in b]


def direct_sum(g1: HomLeibnizAlgebra, g2: HomLeibnizAlgebra, name: str | None = None) -> HomLeibnizAlgebra:
    d1 = g1.dim
    prods = dict(g1.products)
    for (i, j), v in g2.products.items():
        prods[(i + d1, j + d1)] = {k + d1: c for k, c in v.items()}

    return HomLeibnizAlgebra(
        d1 + g2.dim, prods, block_diag(g1.alpha, g2.alpha),
        name if name is not None else f"{g1.name}+{g2.name}",
        _disjoint_labels(g1.basis_labels, g2.basis_labels),
    )


def direct_sum_maps(g1, g2, total) -> dict:
    """Canonical injections and projections of a direct sum."""
    d1, d2 = g1.dim, g2.dim

    i1 = vstack(Mat.identity(d1), Mat.zeros(d2, d1))
    i2 = vstack(Mat.zeros(d1, d2), Mat.identity(d2))
    p1 = hstack(Mat.identity(d1), Mat.zeros(d1, d2))
    p2 = hstack(Mat.zeros(d2, d1), Mat.identity(d2))
    return {
        "i1": Morphism(g1, total, i1), "i2": Morphism(g2, total, i2),
        "p1": Morphism(total, g1, p1), "p2": Morphism(total, g2, p2),
    }


def semidirect_product(a: HomAction, twisted: bool = True, name: str | None = None, check: bool = True):
    """``M x| G`` for an action of G on M.

    Basis: M first, then G.  With ``twisted`` the cross terms are
    ``^{alpha(x1)} m2 + m1^{alpha(x2)}``; otherwise ``^{x1} m2 + m1^{x2}``.
    Returns ``(algebra, i_M, i_G, projection)``.
    """
    G, M = a.actor, a.actee
    if check:
        rep = validate_action(a)
        if rep:
            raise ValidationError("invalid action", rep)
    dm, dg = M.dim, G.dim
    prods: dict = {}

    def put(i, j, v):
        if v:
            acc = prods.setdefault((i, j), {})
            sparse_axpy(acc, 1, v)

    for (i, j), v in M.products.items():
        put(i, j, v)
    for (i, j), v in G.products.items():
        put(i + dm, j + dm, {k + dm: c for k, c in v.items()})
    for x in range(dg):
        gx = G.alpha_column(x) if twisted else _unit(x)
        for m in range(dm):
            put(x + dm, m, a.act_left(gx, _unit(m)))
            put(m, x + dm, a.act_right(_unit(m), gx))

    alg = HomLeibnizAlgebra(
        dm + dg, {k: v for k, v in prods.items() if v}, block_diag(M.alpha, G.alpha),
        name if name is not None else f"{M.name}x|{G.name}",
        _disjoint_labels(M.basis_labels, G.basis_labels),
    )
    i_m = Morphism(M, alg, vstack(Mat.identity(dm), Mat.zeros(dg, dm)))
    i_g = Morphism(G, alg, vstack(Mat.zeros(dm, dg), Mat.identity(dg)))
    proj = Morphism(alg, G, hstack(Mat.zeros(dg, dm), Mat.identity(dg)))
    return alg, i_m, i_g, proj


def induced_action(k: HomLeibnizAlgebra, m_space, section: Morphism) -> HomAction:
    """Action of G on an ideal M of K through a splitting ``section: G -> K``."""
    m_alg, inc = restrict(k, m_space)
    ms = _as_space(k, m_space)
    piv = ms.pivots

    def coords(v: Sparse) -> Sparse:
        return {r: v[p] for r, p in enumerate(piv) if v.get(p)}

    G = section.source
    left, right = {}, {}
    for x in range(G.dim):
        sx = section.column(x)
        for b in range(m_alg.dim):
            mb = inc.column(b)
            left[(x, b)] = coords(k.bracket_sparse(sx, mb))
            right[(b, x)] = coords(k.bracket_sparse(mb, sx))
    return HomAction(G, m_alg, left, right)


# ----------------------------------------------------------------------
# crossed modules


@dataclass(frozen=True)
class CrossedModule:
    """``mu: M -> G`` together with an action of G on M."""

    mu: Morphism
    action: HomAction

    @property
    def source(self) -> HomLeibnizAlgebra:
        return self.mu.source

    @property
    def base(self) -> HomLeibnizAlgebra:
        return self.mu.target


@dataclass(frozen=True)
class CrossedModulePair:
    base: HomLeibnizAlgebra
    mu1: Morphism
    mu2: Morphism
    action_on_M: HomAction
    action_on_N: HomAction

    @property
    def M(self) -> HomLeibnizAlgebra:
        return self.mu1.source

    @property
    def N(self) -> HomLeibnizAlgebra:
        return self.mu2.source

    def first(self) -> CrossedModule:
        return CrossedModule(self.mu1, self.action_on_M)

    def second(self) -> CrossedModule:
        return CrossedModule(self.mu2, self.action_on_N)

    # actions of M and N on each other, through the base
    def m_on_n_left(self, m: Sparse, n: Sparse) -> Sparse:
        return self.action_on_N.act_left(self.mu1.apply_sparse(m), n)

    def n_on_m_right(self, n: Sparse, m: Sparse) -> Sparse:  # n^m
        return self.action_on_N.act_right(n, self.mu1.apply_sparse(m))

    def n_on_m_left(self, n: Sparse, m: Sparse) -> Sparse:  # ^n m
        return self.action_on_M.act_left(self.mu2.apply_sparse(n), m)

    def m_on_n_right(self, m: Sparse, n: Sparse) -> Sparse:  # m^n
        return self.action_on_M.act_right(m, self.mu2.apply_sparse(n))

    def mutual_actions(self) -> tuple[HomAction, HomAction]:
        """(action of M on N, action of N on M) as explicit arrays."""
        M, N = self.M, self.N
        l1, r1, l2, r2 = {}, {}, {}, {}
        for a in range(M.dim):
            for b in range(N.dim):
                l1[(a, b)] = self.m_on_n_left(_unit(a), _unit(b))
                r1[(b, a)] = self.n_on_m_right(_unit(b), _unit(a))
                l2[(b, a)] = self.n_on_m_left(_unit(b), _unit(a))
                r2[(a, b)] = self.m_on_n_right(_unit(a), _unit(b))
        return HomAction(M, N, l1, r1), HomAction(N, M, l2, r2)


def validate_crossed_module(c, label: str = "") -> list[Violation]:
    """Equivariance, Peiffer identities and action axioms.

    Accepts a :class:`CrossedModule` or a :class:`CrossedModulePair`; for a
    pair both halves and the induced mutual actions are checked.
    """
    if isinstance(c, CrossedModulePair):
        out = []
        if c.mu1.target is not c.base and not c.mu1.target.same_structure(c.base):
            out.append(Violation("base-mismatch", (1,), ()))
        if c.mu2.target is not c.base and not c.mu2.target.same_structure(c.base):
            out.append(Violation("base-mismatch", (2,), ()))
        out += validate_crossed_module(c.first(), "M:")
        out += validate_crossed_module(c.second(), "N:")
        if out:
            return out
        on_n, on_m = c.mutual_actions()
        out += [Violation("M-on-N:" + v.axiom, v.indices, v.residual) for v in validate_action(on_n)]
        out += [Violation("N-on-M:" + v.axiom, v.indices, v.residual) for v in validate_action(on_m)]
        return out
    mu, act = c.mu, c.action
    M, G = mu.source, mu.target
    out = [Violation(label + "morphism:" + v.axiom, v.indices, v.residual) for v in mu.validate()]
    out += [Violation(label + v.axiom, v.indices, v.residual) for v in validate_action(act)]
    for x in range(G.dim):
        ex = _unit(x)
        for m in range(M.dim):
            em = _unit(m)
            res = _sub(mu.apply_sparse(act.act_left(ex, em)), G.bracket_sparse(ex, mu.column(m)))
            if res:
                out.append(Violation(label + "equivariance-left", (x, m), to_dense(res, G.dim)))
            res = _sub(mu.apply_sparse(act.act_right(em, ex)), G.bracket_sparse(mu.column(m), ex))
            if res:
                out.append(Violation(label + "equivariance-right", (m, x), to_dense(res, G.dim)))
    for m in range(M.dim):
        for mp in range(M.dim):
            br = M.basis_bracket(m, mp)
            res = _sub(act.act_left(mu.column(m), _unit(mp)), br)
            if res:
                out.append(Violation(label + "peiffer-left", (m, mp), to_dense(res, M.dim)))
            res = _sub(act.act_right(_unit(m), mu.column(mp)), br)
            if res:
                out.append(Violation(label + "peiffer-right", (m, mp), to_dense(res, M.dim)))
    return out


def ideal_crossed_module(g: HomLeibnizAlgebra, m_space) -> CrossedModule:
    """Inclusion of an ideal with the action by bracket."""
    sub, inc = restrict(g, m_space)
    ms = _as_space(g, m_space)
    if not is_ideal(g, ms):
        raise ValidationError("subspace is not an alpha-invariant ideal")
    piv = ms.pivots

    def coords(v: Sparse) -> Sparse:
        return {r: v[p] for r, p in enumerate(piv) if v.get(p)}

    left, right = {}, {}
    for x in range(g.dim):
        for b in range(sub.dim):
            left[(x, b)] = coords(g.bracket_sparse(_unit(x), inc.column(b)))
            right[(b, x)] = coords(g.bracket_sparse(inc.column(b), _unit(x)))
    return CrossedModule(inc, HomAction(g, sub, left, right))
