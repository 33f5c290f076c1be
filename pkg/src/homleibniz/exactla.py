"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Dense matrices are immutable
row-major grids (:class:`Mat`); subspaces are kept in reduced row-echelon
form so two subspaces are equal exactly when their basis grids agree.
Large, sparse computations (relation spans, boundary images) go through
:class:`Echelon`, an incremental RREF over ``{column: value}`` rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]
Sparse = dict  # dict[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


# ----------------------------------------------------------------------
# scalars


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, float):
        raise TypeError("floating point scalars are not allowed")
    return Fraction(x)


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; fractions are normalized."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            p, q = int(num), int(den)
        except ValueError:
            raise ValueError(f"malformed rational {text!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(p, q)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None


def format_scalar(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ----------------------------------------------------------------------
# vectors (dense tuples and sparse dicts)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vector(values: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in values)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def to_sparse(v: Sequence) -> Sparse:
    return {i: x for i, x in enumerate(v) if x}


def to_dense(s: Sparse, n: int) -> Vector:
    v = [ZERO] * n
    for i, x in s.items():
        v[i] = Fraction(x)
    return tuple(v)


def sparse_axpy(acc: Sparse, c, v: Sparse) -> None:
    """In place ``acc += c * v``, dropping zeros."""
    if not c:
        return
    for i, x in v.items():
        y = acc.get(i, 0) + c * x
        if y:
            acc[i] = y
        else:
            acc.pop(i, None)


def sparse_scale(c, v: Sparse) -> Sparse:
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


def sparse_kron(u: Sparse, v: Sparse, nv: int, offset: int = 0) -> Sparse:
    """Coordinates of ``u (x) v`` when the second factor has dimension ``nv``."""
    out = {}
    for i, x in u.items():
        base = offset + i * nv
        for j, y in v.items():
            out[base + j] = x * y
    return out


# ----------------------------------------------------------------------
# dense matrices


class Mat:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable] = ()):
        grid = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        if not grid and rows:
            grid = tuple((ZERO,) * cols for _ in range(rows))
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ValueError(f"entries do not form a {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self.entries = grid
        self._hash = None

    @classmethod
    def _trusted(cls, rows: int, cols: int, grid: tuple) -> "Mat":
        m = object.__new__(cls)
        m.rows, m.cols, m.entries, m._hash = rows, cols, grid, None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls._trusted(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._trusted(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        rows = list(rows)
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Mat":
        columns = list(columns)
        if rows is None:
            if not columns:
                raise ValueError("cannot infer row count of an empty matrix")
            rows = len(columns[0])
        grid = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(rows, len(columns), grid)

    @classmethod
    def from_sparse_columns(cls, columns: Sequence[Sparse], rows: int) -> "Mat":
        grid = [[ZERO] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            for i, x in col.items():
                grid[i][j] = Fraction(x)
        return cls._trusted(rows, len(columns), tuple(tuple(r) for r in grid))

    # -- access

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def sparse_columns(self) -> list[Sparse]:
        cols = [dict() for _ in range(self.cols)]
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                if x:
                    cols[j][i] = x
        return cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def T(self) -> "Mat":
        return Mat._trusted(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple((ZERO,) * 0 for _ in range(self.cols)))

    def is_zero(self) -> bool:
        return all(not any(r) for r in self.entries)

    # -- arithmetic

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise AmbientMismatch(f"vector of length {len(v)} for a {self.rows}x{self.cols} matrix")
        nz = [(j, x) for j, x in enumerate(v) if x]
        return tuple(sum((r[j] * x for j, x in nz), ZERO) for r in self.entries)

    def apply_sparse(self, v: Sparse) -> Sparse:
        out = {}
        for i, r in enumerate(self.entries):
            s = sum((r[j] * x for j, x in v.items()), ZERO)
            if s:
                out[i] = s
        return out

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise AmbientMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            ocols = other.T.entries if other.rows else tuple(() for _ in range(other.cols))
            grid = tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in ocols)
                for r in self.entries
            )
            return Mat._trusted(self.rows, other.cols, grid)
        return self.apply(other)

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        grid = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return Mat._trusted(self.rows, self.cols, grid)

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        grid = tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return Mat._trusted(self.rows, self.cols, grid)

    def __neg__(self) -> "Mat":
        return Mat._trusted(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, c) -> "Mat":
        c = as_scalar(c)
        return Mat._trusted(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def power(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise AmbientMismatch("power of a non-square matrix")
        out = Mat.identity(self.rows)
        for _ in range(k):
            out = self @ out
        return out

    def _same_shape(self, other: "Mat") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise AmbientMismatch("matrix shapes differ")

    def rank(self) -> int:
        ech = Echelon(self.cols)
        for r in self.entries:
            ech.add(to_sparse(r))
        return ech.rank

    def to_lists(self) -> list[list[str]]:
        return [[format_scalar(x) for x in r] for r in self.entries]

    # -- identity

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.entries)
        return f"Mat({self.rows}x{self.cols}: [{body}])"


def hstack(a: Mat, b: Mat) -> Mat:
    if a.rows != b.rows:
        raise AmbientMismatch("row counts differ")
    return Mat._trusted(a.rows, a.cols + b.cols, tuple(r + s for r, s in zip(a.entries, b.entries)))


def vstack(*mats: Mat) -> Mat:
    cols = {m.cols for m in mats}
    if len(cols) != 1:
        raise AmbientMismatch("column counts differ")
    grid = tuple(r for m in mats for r in m.entries)
    return Mat._trusted(len(grid), cols.pop(), grid)


def block_diag(a: Mat, b: Mat) -> Mat:
    top = hstack(a, Mat.zeros(a.rows, b.cols))
    bottom = hstack(Mat.zeros(b.rows, a.cols), b)
    return vstack(top, bottom)


def kron(a: Mat, b: Mat) -> Mat:
    grid = []
    for ra in a.entries:
        for rb in b.entries:
            grid.append(tuple(x * y for x in ra for y in rb))
    return Mat._trusted(a.rows * b.rows, a.cols * b.cols, tuple(grid))


# ----------------------------------------------------------------------
# incremental echelon


class Echelon:
    """Incremental reduced row-echelon form over sparse rows.

    Rows are stored fully reduced: every stored row has a leading 1 and
    zeros in all other pivot columns, so reducing a vector is a single
    pass over the pivots it touches.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, Sparse] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def reduce(self, v: Sparse) -> Sparse:
        out = dict(v)
        rows = self._rows
        for p in [p for p in v if p in rows]:
            c = v[p]
            for j, x in rows[p].items():
                y = out.get(j, 0) - c * x
                if y:
                    out[j] = y
                else:
                    out.pop(j, None)
        return out

    def add(self, v: Sparse) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = {j: x * inv for j, x in r.items()}
        for q, row in self._rows.items():
            c = row.get(p)
            if c:
                for j, x in r.items():
                    y = row.get(j, 0) - c * x
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        self._rows[p] = r
        return True

    def extend(self, vectors: Iterable[Sparse]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def contains(self, v: Sparse) -> bool:
        return not self.reduce(v)

    def rows(self) -> list[Sparse]:
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def copy(self) -> "Echelon":
        e = Echelon(self.ncols)
        e._rows = {p: dict(r) for p, r in self._rows.items()}
        return e

    def subspace(self) -> "Subspace":
        grid = tuple(to_dense(self._rows[p], self.ncols) for p in sorted(self._rows))
        return Subspace._trusted(self.ncols, Mat._trusted(len(grid), self.ncols, grid))


# ----------------------------------------------------------------------
# rref / kernel / image


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row-echelon form of ``m`` (same shape) and its pivot columns."""
    ech = Echelon(m.cols)
    for r in m.entries:
        ech.add(to_sparse(r))
    piv = ech.pivots
    grid = [to_dense(ech._rows[p], m.cols) for p in piv]
    grid += [zero_vector(m.cols)] * (m.rows - len(grid))
    return Mat._trusted(m.rows, m.cols, tuple(grid)), piv


def rank(m: Mat) -> int:
    return m.rank()


def _kernel_from_echelon(ech: Echelon, ncols: int) -> "Subspace":
    piv = ech.pivots
    pivset = set(piv)
    free = [j for j in range(ncols) if j not in pivset]
    rows = ech._rows
    vectors = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for p in piv:
            x = rows[p].get(f)
            if x:
                v[p] = -x
        vectors.append(tuple(v))
    return Subspace.from_vectors(ncols, vectors)


def kernel_basis(m: Mat) -> "Subspace":
    """All ``v`` with ``m v = 0``, canonical."""
    ech = Echelon(m.cols)
    for r in m.entries:
        ech.add(to_sparse(r))
    return _kernel_from_echelon(ech, m.cols)


def sparse_kernel(rows: Iterable[Sparse], ncols: int) -> "Subspace":
    """Kernel of the matrix whose rows are the given sparse vectors."""
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return _kernel_from_echelon(ech, ncols)


def image_basis(m: Mat) -> "Subspace":
    """Column space of ``m``, canonical."""
    ech = Echelon(m.rows)
    for c in m.sparse_columns():
        ech.add(c)
    return ech.subspace()


# ----------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of ``Q^ambient_dim`` with an RREF basis (rows of ``basis``)."""

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, basis: Mat):
        canon = Subspace.from_vectors(ambient_dim, basis.entries)
        self.ambient_dim = ambient_dim
        self.basis = canon.basis
        self._pivots = canon._pivots

    @classmethod
    def _trusted(cls, ambient_dim: int, basis: Mat) -> "Subspace":
        s = object.__new__(cls)
        s.ambient_dim = ambient_dim
        s.basis = basis
        s._pivots = tuple(next(j for j, x in enumerate(r) if x) for r in basis.entries)
        return s

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            ech.add(to_sparse(v))
        return ech.subspace()

    @classmethod
    def from_sparse(cls, ambient_dim: int, vectors: Iterable[Sparse]) -> "Subspace":
        ech = Echelon(ambient_dim)
        ech.extend(vectors)
        return ech.subspace()

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls._trusted(n, Mat._trusted(0, n, ()))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls._trusted(n, Mat.identity(n))

    @classmethod
    def span_of_units(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.from_vectors(n, [unit_vector(n, i) for i in indices])

    # -- basic queries

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def vectors(self) -> list[Vector]:
        return list(self.basis.entries)

    def sparse_vectors(self) -> list[Sparse]:
        return [to_sparse(r) for r in self.basis.entries]

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for p, r in zip(self._pivots, self.basis.entries):
            ech._rows[p] = to_sparse(r)
        return ech

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """``v`` minus its component along the basis (zero at all pivots)."""
        self._check_len(v)
        out = list(v)
        for p, r in zip(self._pivots, self.basis.entries):
            c = out[p]
            if c:
                for j, x in enumerate(r):
                    if x:
                        out[j] -= c * x
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the RREF basis; ``v`` must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(Fraction(v[p]) for p in self._pivots)

    def issubset(self, other: "Subspace") -> bool:
        self._check_same(other)
        return all(other.contains(r) for r in self.basis.entries)

    __le__ = issubset

    def __ge__(self, other: "Subspace") -> bool:
        return other.issubset(self)

    # -- operations

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_same(other)
        ech = self.echelon()
        for r in other.basis.entries:
            ech.add(to_sparse(r))
        return ech.subspace()

    def annihilator(self) -> "Subspace":
        return kernel_basis(self.basis) if self.dim else Subspace.full(self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check_same(other)
        rows = self.annihilator().sparse_vectors() + other.annihilator().sparse_vectors()
        return sparse_kernel(rows, self.ambient_dim)

    intersection = __and__

    def image(self, m: Mat) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise AmbientMismatch("matrix does not act on this ambient space")
        return Subspace.from_vectors(m.rows, [m.apply(r) for r in self.basis.entries])

    def preimage(self, m: Mat) -> "Subspace":
        """``{v : m v in self}``."""
        if m.rows != self.ambient_dim:
            raise AmbientMismatch("matrix does not land in this ambient space")
        ann = self.annihilator()
        return kernel_basis(ann.basis @ m) if ann.dim else Subspace.full(m.cols)

    # -- identity

    def _check_len(self, v) -> None:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")

    def _check_same(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim} differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def is_contained(a: Subspace, b: Subspace) -> bool:
    return a.issubset(b)


# ----------------------------------------------------------------------
# quotients


class QuotientMap:
    """Projection ``Q^n -> Q^n / kernel`` with a fixed section.

    Quotient coordinates are the non-pivot coordinates of ``kernel``:
    ``section`` sends the i-th quotient basis vector to the standard
    basis vector of the i-th non-pivot column.
    """

    __slots__ = ("ambient_dim", "kernel", "free", "_index", "_rows", "_projection", "_section")

    def __init__(self, ambient_dim: int, kernel: Subspace):
        if kernel.ambient_dim != ambient_dim:
            raise AmbientMismatch("kernel lives in a different ambient space")
        self.ambient_dim = ambient_dim
        self.kernel = kernel
        piv = set(kernel.pivots)
        self.free = tuple(j for j in range(ambient_dim) if j not in piv)
        self._index = {j: i for i, j in enumerate(self.free)}
        self._rows = {p: to_sparse(r) for p, r in zip(kernel.pivots, kernel.basis.entries)}
        self._projection = None
        self._section = None

    @property
    def quotient_dim(self) -> int:
        return len(self.free)

    def project_sparse(self, v: Sparse) -> Sparse:
        out = {}
        idx = self._index
        for j, x in v.items():
            i = idx.get(j)
            if i is not None:
                out[i] = out.get(i, 0) + x
            else:
                for k, y in self._rows[j].items():
                    i = idx.get(k)
                    if i is not None:
                        out[i] = out.get(i, 0) - x * y
        return {i: x for i, x in out.items() if x}

    def project(self, v: Sequence) -> Vector:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length does not match the ambient space")
        return to_dense(self.project_sparse(to_sparse(v)), self.quotient_dim)

    def lift_sparse(self, c: Sparse) -> Sparse:
        return {self.free[i]: x for i, x in c.items() if x}

    def lift(self, c: Sequence) -> Vector:
        return to_dense(self.lift_sparse(to_sparse(c)), self.ambient_dim)

    @property
    def projection(self) -> Mat:
        if self._projection is None:
            cols = [self.project_sparse({j: ONE}) for j in range(self.ambient_dim)]
            self._projection = Mat.from_sparse_columns(cols, self.quotient_dim)
        return self._projection

    @property
    def section(self) -> Mat:
        if self._section is None:
            cols = [{j: ONE} for j in self.free]
            self._section = Mat.from_sparse_columns(cols, self.ambient_dim)
        return self._section


def quotient(ambient_dim: int, s: Subspace) -> QuotientMap:
    return QuotientMap(ambient_dim, s)


# ----------------------------------------------------------------------
# coordinates relative to a pair of nested subspaces


class RelativeBasis:
    """Representatives for ``big / small`` (with ``small`` inside ``big``).

    Representatives are the RREF rows of ``big`` that are independent
    modulo ``small``, each reduced modulo ``small``; they stay inside
    ``big``.  :meth:`coordinates` expresses any vector of ``big`` in these
    representatives modulo ``small``.
    """

    def __init__(self, big: Subspace, small: Subspace):
        if not small.issubset(big):
            raise ValueError("small subspace is not contained in big subspace")
        self.big = big
        self.small = small
        ech = small.echelon()
        reps = []
        for r in big.basis.entries:
            s = to_sparse(r)
            red = ech.reduce(s)
            if red:
                reps.append(red)
                ech.add(s)
        self._reps = reps
        self._n = big.ambient_dim
        # tracked echelon on the reduced representatives
        self._track = _TrackedEchelon(self._n)
        for i, r in enumerate(reps):
            self._track.add(r, {i: ONE})

    @property
    def dim(self) -> int:
        return len(self._reps)

    def representatives(self) -> list[Vector]:
        return [to_dense(r, self._n) for r in self._reps]

    def sparse_representatives(self) -> list[Sparse]:
        return [dict(r) for r in self._reps]

    def coordinates_sparse(self, v: Sparse) -> Sparse:
        red = self.small.echelon().reduce(v) if self.small.dim else dict(v)
        combo, rest = self._track.express(red)
        if rest:
            raise ValueError("vector does not lie in the big subspace")
        return combo

    def coordinates(self, v: Sequence) -> Vector:
        return to_dense(self.coordinates_sparse(to_sparse(v)), self.dim)


class _TrackedEchelon:
    """Echelon form that remembers each row as a combination of inputs."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, tuple[Sparse, Sparse]] = {}

    def _reduce(self, v: Sparse, combo: Sparse) -> tuple[Sparse, Sparse]:
        v = dict(v)
        combo = dict(combo)
        # insertion order: each row is already reduced against earlier pivots
        for p in self._rows:
            c = v.get(p)
            if c:
                row, rc = self._rows[p]
                sparse_axpy(v, -c, row)
                sparse_axpy(combo, -c, rc)
        return v, combo

    def add(self, v: Sparse, combo: Sparse) -> bool:
        v, combo = self._reduce(v, combo)
        if not v:
            return False
        p = min(v)
        inv = 1 / Fraction(v[p])
        self._rows[p] = (sparse_scale(inv, v), sparse_scale(inv, combo))
        return True

    def express(self, v: Sparse) -> tuple[Sparse, Sparse]:
        """Return ``(coefficients, remainder)`` with v = sum coeff * input + remainder."""
        rest, neg = self._reduce(v, {})
        return {i: -x for i, x in neg.items() if x}, rest


def solve(m: Mat, b: Sequence) -> Vector | None:
    """One solution ``x`` of ``m x = b`` (free variables zero), or ``None``."""
    track = _TrackedEchelon(m.rows)
    for j, col in enumerate(m.sparse_columns()):
        track.add(col, {j: ONE})
    combo, rest = track.express(to_sparse(b))
    if rest:
        return None
    return to_dense(combo, m.cols)
