"""Homology of a Hom-Leibniz algebra with trivial coefficients.

Chains in degree n are ``g^{(x)n}`` with basis tensors ordered
lexicographically by index tuple.  The boundary is

    d_n(x_1 ... x_n) = sum_{i<j} (-1)^{j+1} a(x_1) .. [x_i, x_j] .. ^x_j .. a(x_n)

(1-based positions; slot j is dropped, every other slot gets alpha), except
that degree 2 uses ``d_2(x (x) y) = +[x, y]``.  The sign flip in degree 2
does not change kernels or images.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

from .algebra import HomLeibnizAlgebra, Morphism, abelianization
from .errors import CapExceeded, IntegrityError
from .exactla import (
    Echelon,
    Mat,
    RelativeBasis,
    Sparse,
    Subspace,
    sparse_axpy,
    sparse_kernel,
)

DEFAULT_CAP = 20000


def _tuple_index(t, dim: int) -> int:
    k = 0
    for i in t:
        k = k * dim + i
    return k


def _kron_many(vectors, dim: int) -> Sparse:
    out = {0: 1}
    for v in vectors:
        if not v:
            return {}
        nxt = {}
        for k, a in out.items():
            base = k * dim
            for j, b in v.items():
                nxt[base + j] = a * b
        out = nxt
    return out


def tensor_power_apply(columns, t, dim_out: int) -> Sparse:
    """Image of the basis tensor ``t`` under ``f^{(x)n}`` given f's sparse columns."""
    return _kron_many([columns[i] for i in t], dim_out)


def _check_cap(dim: int, n: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if dim ** n > cap:
        raise CapExceeded(f"chain space of degree {n} has dimension {dim}^{n} = {dim ** n} > cap {cap}")


def boundary_columns(g: HomLeibnizAlgebra, n: int, convention: str = "positive", cap: int | None = None) -> list[Sparse]:
    """Sparse columns of ``d_n``, one per basis tensor of degree n."""
    if n < 1:
        raise ValueError("boundary degree must be at least 1")
    _check_cap(g.dim, n, cap)
    d = g.dim
    if n == 1:
        return [{} for _ in range(d)]
    alpha = [g.alpha_column(i) for i in range(d)]
    flip = -1 if (n == 2 and convention == "positive") else 1
    cols = []
    for t in product(range(d), repeat=n):
        col: Sparse = {}
        for i in range(n):
            for j in range(i + 1, n):
                br = g.basis_bracket(t[i], t[j])
                if not br:
                    continue
                sign = flip * (1 if j % 2 == 0 else -1)  # (-1)^{j+1} for 1-based j
                factors = []
                for k in range(n):
                    if k == i:
                        factors.append(br)
                    elif k != j:
                        factors.append(alpha[t[k]])
                sparse_axpy(col, sign, _kron_many(factors, d))
        cols.append(col)
    return cols


def boundary_matrix(g: HomLeibnizAlgebra, n: int, convention: str = "positive", cap: int | None = None) -> Mat:
    cols = boundary_columns(g, n, convention, cap)
    return Mat.from_sparse_columns(cols, g.dim ** (n - 1) if n > 1 else 0)


def _rank_of_columns(cols, nrows: int) -> int:
    e = Echelon(nrows)
    e.extend(cols)
    return e.rank


def _transpose(cols, nrows: int):
    rows = [dict() for _ in range(nrows)]
    for j, c in enumerate(cols):
        for i, x in c.items():
            rows[i][j] = x
    return rows


class ChainComplexSlice:
    """Boundary maps ``d_1 .. d_{N+1}`` of the chain complex of ``algebra``."""

    def __init__(self, algebra: HomLeibnizAlgebra, max_degree: int, cap: int | None = None, convention: str = "positive"):
        if max_degree < 1:
            raise ValueError("max_degree must be at least 1")
        _check_cap(algebra.dim, max_degree + 1, cap)
        self.algebra = algebra
        self.max_degree = max_degree
        self.convention = convention
        self._cols = {n: boundary_columns(algebra, n, convention, cap) for n in range(1, max_degree + 2)}
        self._check_square_zero()

    def _check_square_zero(self) -> None:
        for n in range(2, self.max_degree + 2):
            lower = self._cols[n - 1]
            for j, col in enumerate(self._cols[n]):
                acc: Sparse = {}
                for k, x in col.items():
                    sparse_axpy(acc, x, lower[k])
                if acc:
                    raise IntegrityError(f"d_{n - 1} o d_{n} is nonzero on basis tensor {j} of {self.algebra.name}")

    def columns(self, n: int) -> list[Sparse]:
        return self._cols[n]

    def boundary(self, n: int) -> Mat:
        d = self.algebra.dim
        return Mat.from_sparse_columns(self._cols[n], d ** (n - 1) if n > 1 else 0)

    @property
    def boundaries(self) -> list[Mat]:
        return [self.boundary(n) for n in range(1, self.max_degree + 2)]

    def rank(self, n: int) -> int:
        d = self.algebra.dim
        return _rank_of_columns(self._cols[n], d ** (n - 1) if n > 1 else 0)

    def cycles(self, n: int) -> Subspace:
        d = self.algebra.dim
        nrows = d ** (n - 1) if n > 1 else 0
        return sparse_kernel(_transpose(self._cols[n], nrows), d ** n)

    def boundaries_space(self, n: int) -> Subspace:
        """Image of ``d_{n+1}`` inside degree n."""
        e = Echelon(self.algebra.dim ** n)
        e.extend(self._cols[n + 1])
        return e.subspace()


def chain_complex(g: HomLeibnizAlgebra, max_degree: int, cap: int | None = None) -> ChainComplexSlice:
    return ChainComplexSlice(g, max_degree, cap)


class HomologyResult:
    """``HL_n`` with deterministic representatives and the induced endomorphism."""

    def __init__(self, algebra: HomLeibnizAlgebra, degree: int, cycles: Subspace, bounds: Subspace):
        self.algebra = algebra
        self.degree = degree
        self.cycles = cycles
        self.bounds = bounds
        self._rel = RelativeBasis(cycles, bounds)

    @property
    def dimension(self) -> int:
        return self._rel.dim

    dim = dimension

    @property
    def representative_basis(self) -> list[tuple]:
        return self._rel.representatives()

    def coordinates_sparse(self, v: Sparse) -> Sparse:
        return self._rel.coordinates_sparse(v)

    @cached_property
    def induced_endo(self) -> Mat:
        g, n = self.algebra, self.degree
        cols = [g.alpha_column(i) for i in range(g.dim)]

        def apply(v: Sparse) -> Sparse:
            return _apply_tensor_power(cols, v, n, g.dim, g.dim)

        for s, what in ((self.cycles, "cycles"), (self.bounds, "boundaries")):
            ech = s.echelon()
            for v in s.sparse_vectors():
                if not ech.contains(apply(v)):
                    raise IntegrityError(f"alpha^(x){n} does not preserve the {what} of {g.name}")
        images = [self.coordinates_sparse(apply(r)) for r in self._rel.sparse_representatives()]
        return Mat.from_sparse_columns(images, self.dimension)


def _apply_tensor_power(columns, v: Sparse, n: int, dim_in: int, dim_out: int) -> Sparse:
    out: Sparse = {}
    for k, x in v.items():
        t = []
        for _ in range(n):
            k, r = divmod(k, dim_in)
            t.append(r)
        t.reverse()
        sparse_axpy(out, x, tensor_power_apply(columns, t, dim_out))
    return out


def homology(g: HomLeibnizAlgebra, n: int, cap: int | None = None, complex_: ChainComplexSlice | None = None) -> HomologyResult:
    if n < 1:
        raise ValueError("homology degree must be at least 1")
    cc = complex_ if complex_ is not None and complex_.max_degree >= n else chain_complex(g, n, cap)
    return HomologyResult(g, n, cc.cycles(n), cc.boundaries_space(n))


def homology_dims(g: HomLeibnizAlgebra, max_degree: int, cap: int | None = None) -> list[int]:
    cc = chain_complex(g, max_degree, cap)
    d = g.dim
    out = []
    for n in range(1, max_degree + 1):
        ker = d ** n - cc.rank(n)
        out.append(ker - cc.rank(n + 1))
    return out


def hl2_dim(g: HomLeibnizAlgebra, cap: int | None = None) -> int:
    return homology_dims(g, 2, cap)[1]


def induced_map_on_homology(f: Morphism, n: int, cap: int | None = None) -> Mat:
    """Matrix of ``f^{(x)n}`` on ``HL_n(source) -> HL_n(target)``."""
    s, t = f.source, f.target
    cols = [f.column(i) for i in range(s.dim)]
    ds = boundary_columns(s, n, cap=cap)
    dt = boundary_columns(t, n, cap=cap)
    for idx, tup in enumerate(product(range(s.dim), repeat=n)):
        lhs = _apply_tensor_power(cols, ds[idx], n - 1, s.dim, t.dim) if n > 1 else {}
        rhs: Sparse = {}
        for k, x in tensor_power_apply(cols, tup, t.dim).items():
            sparse_axpy(rhs, x, dt[k])
        sparse_axpy(lhs, -1, rhs)
        if lhs:
            raise IntegrityError(f"morphism is not a chain map in degree {n} at basis tensor {tup}")
    hs = homology(s, n, cap)
    ht = homology(t, n, cap)
    images = [ht.coordinates_sparse(_apply_tensor_power(cols, r, n, s.dim, t.dim)) for r in hs._rel.sparse_representatives()]
    return Mat.from_sparse_columns(images, ht.dimension)


def hl1_matches_abelianization(g: HomLeibnizAlgebra) -> bool:
    """HL_1 and g^ab agree in dimension and in the rank profile of the endomorphism."""
    h = homology(g, 1)
    ab, _ = abelianization(g)
    if h.dimension != ab.dim:
        return False
    e1, e2 = h.induced_endo, ab.alpha
    return all(e1.power(k).rank() == e2.power(k).rank() for k in range(1, ab.dim + 1))
