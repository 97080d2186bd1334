"""Exact linear algebra over Rational and RationalFunction scalars.

Matrices here are tiny (at most ~11x11) and dense.  Everything is computed
exactly: rank over the rationals goes through an integer fraction-free
elimination after clearing denominators, rank over rational functions runs
ordinary Gaussian elimination in the field of fractions QQ(t).  Subspaces
are kept in reduced row-echelon form so that equality and containment are
structural checks.

``nilpotent_partition`` recovers Jordan block sizes of a nilpotent operator
from the rank sequence of its powers (rank(N^m) = sum_i max(lambda_i - m, 0))
rather than by chasing Jordan chains.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exactnum import RationalFunction, RF_ONE, RF_ZERO


class Singular(ArithmeticError):
    """Matrix inversion was asked of a singular matrix."""


class NotNilpotent(ValueError):
    """nilpotent_partition was asked of a non-nilpotent matrix."""


class AmbientMismatch(ValueError):
    """Subspace operation on subspaces of different ambient spaces."""


RATIONAL = "rational"
RATFUN = "ratfun"


def _kind_of(entry):
    if isinstance(entry, RationalFunction):
        return RATFUN
    return RATIONAL


class Matrix:
    """Dense matrix with Fraction or RationalFunction entries (one kind)."""

    __slots__ = ("rows", "cols", "entries", "kind")

    def __init__(self, entries, kind=None):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise ValueError("matrices here are nonempty")
        ncols = len(entries[0])
        if any(len(row) != ncols for row in entries):
            raise ValueError("ragged rows")
        if kind is None:
            kind = _kind_of(entries[0][0])
        if kind == RATIONAL:
            entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(entries)
        self.cols = ncols
        self.entries = entries
        self.kind = kind

    def _zero(self):
        return RF_ZERO if self.kind == RATFUN else Fraction(0)

    def _one(self):
        return RF_ONE if self.kind == RATFUN else Fraction(1)

    @staticmethod
    def identity(n: int, kind: str = RATIONAL) -> "Matrix":
        one = RF_ONE if kind == RATFUN else Fraction(1)
        zero = RF_ZERO if kind == RATFUN else Fraction(0)
        return Matrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)], kind
        )

    @staticmethod
    def zero(rows: int, cols: int, kind: str = RATIONAL) -> "Matrix":
        zero = RF_ZERO if kind == RATFUN else Fraction(0)
        return Matrix([[zero] * cols for _ in range(rows)], kind)

    def copy_entries(self):
        return [row[:] for row in self.entries]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.kind == other.kind
            and self.entries == other.entries
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        zero = self._zero()
        out = []
        for i in range(self.rows):
            arow = self.entries[i]
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = arow[k]
                    if a:
                        acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out, self.kind)

    def apply(self, vec):
        """Matrix times column vector (vec as a sequence)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        zero = self._zero()
        out = []
        for i in range(self.rows):
            acc = zero
            row = self.entries[i]
            for k in range(self.cols):
                if row[k]:
                    acc = acc + row[k] * vec[k]
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.kind,
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.kind})"


# --- integer fraction-free core -----------------------------------------


def _int_rows_per_row_scaled(entries):
    """Clear denominators row by row (rank is unchanged)."""
    out = []
    for row in entries:
        mult = 1
        for x in row:
            mult = mult * x.denominator // gcd(mult, x.denominator)
        out.append([int(x * mult) for x in row])
    return out


def _int_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    rows = [row[:] for row in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, nrows):
            xi = rows[i][c]
            if xi == 0:
                continue
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c, ncols):
                row_i[j] = row_i[j] * pv - xi * row_r[j]
            g = 0
            for j in range(c, ncols):
                g = gcd(g, row_i[j])
            if g > 1:
                for j in range(c, ncols):
                    row_i[j] //= g
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank


def _field_rank(entries) -> int:
    rows = [row[:] for row in entries]
    nrows = len(rows)
    ncols = len(rows[0])
    rank = 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, nrows):
            xi = rows[i][c]
            if xi:
                factor = xi / pv
                for j in range(c, ncols):
                    rows[i][j] = rows[i][j] - factor * rows[r][j]
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank


def rank(m: Matrix) -> int:
    """Exact rank; symbolic over QQ(t) for RationalFunction matrices."""
    if m.kind == RATIONAL:
        return _int_rank(_int_rows_per_row_scaled(m.entries))
    return _field_rank(m.entries)


def _rref(entries):
    """Reduced row echelon form over a field; returns (rows, pivot_cols)."""
    rows = [row[:] for row in entries]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[: len(pivots)], pivots


def kernel_basis(m: Matrix) -> "Subspace":
    """Null space of a Rational matrix, in reduced echelon form."""
    if m.kind != RATIONAL:
        raise TypeError("kernel_basis is defined for Rational matrices")
    rref_rows, pivots = _rref(m.entries)
    n = m.cols
    free = [c for c in range(n) if c not in pivots]
    vecs = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref_rows[r][fc]
        vecs.append(v)
    return Subspace.from_vectors(n, vecs)


def invert(m: Matrix) -> Matrix:
    """Exact inverse over the scalar field; raises Singular."""
    if m.rows != m.cols:
        raise Singular("only square matrices are invertible")
    n = m.rows
    rows = m.copy_entries()
    inv = Matrix.identity(n, m.kind).copy_entries()
    for c in range(n):
        piv = None
        for i in range(c, n):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            raise Singular("matrix has zero determinant")
        rows[c], rows[piv] = rows[piv], rows[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        pv = rows[c][c]
        rows[c] = [x / pv for x in rows[c]]
        inv[c] = [x / pv for x in inv[c]]
        for i in range(n):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
                inv[i] = [a - f * b for a, b in zip(inv[i], inv[c])]
    return Matrix(inv, m.kind)


def determinant(m: Matrix):
    """Exact determinant by elimination over the scalar field."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = m.copy_entries()
    det = m._one()
    sign = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            return m._zero()
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        pv = rows[c][c]
        det = det * pv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    if sign < 0:
        det = -det
    return det


class Subspace:
    """Subspace of QQ^n held as an RREF basis with increasing pivots."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis):
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(Fraction(x) for x in row) for row in basis)

    @staticmethod
    def from_vectors(ambient_dim: int, vectors) -> "Subspace":
        vecs = [list(map(Fraction, v)) for v in vectors if any(v)]
        if not vecs:
            return Subspace(ambient_dim, ())
        rows, _ = _rref(vecs)
        return Subspace(ambient_dim, rows)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(
            ambient_dim, Matrix.identity(ambient_dim).entries
        )

    @staticmethod
    def tail_flag(ambient_dim: int, i: int) -> "Subspace":
        """V_i = <e_i, ..., e_n> with 1-based i; V_{n+1} = 0."""
        vecs = []
        for k in range(i - 1, ambient_dim):
            v = [Fraction(0)] * ambient_dim
            v[k] = Fraction(1)
            vecs.append(v)
        return Subspace.from_vectors(ambient_dim, vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def contains_vector(self, v) -> bool:
        v = [Fraction(x) for x in v]
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length != ambient dimension")
        for row in self.basis:
            pc = next(i for i, x in enumerate(row) if x)
            if v[pc]:
                f = v[pc]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of QQ^{self.ambient_dim})"


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    if u.ambient_dim != w.ambient_dim:
        raise AmbientMismatch("subspace sum across ambient spaces")
    return Subspace.from_vectors(u.ambient_dim, list(u.basis) + list(w.basis))


def subspace_intersect(u: Subspace, w: Subspace) -> Subspace:
    if u.ambient_dim != w.ambient_dim:
        raise AmbientMismatch("subspace intersection across ambient spaces")
    if u.dim == 0 or w.dim == 0:
        return Subspace.zero(u.ambient_dim)
    # Solve sum_i x_i u_i = sum_j y_j w_j: kernel of [U^T | -W^T].
    n = u.ambient_dim
    entries = []
    for r in range(n):
        row = [u.basis[i][r] for i in range(u.dim)]
        row += [-w.basis[j][r] for j in range(w.dim)]
        entries.append(row)
    ker = kernel_basis(Matrix(entries))
    vecs = []
    for coeffs in ker.basis:
        v = [Fraction(0)] * n
        for i in range(u.dim):
            if coeffs[i]:
                for r in range(n):
                    v[r] += coeffs[i] * u.basis[i][r]
        vecs.append(v)
    return Subspace.from_vectors(n, vecs)


def subspace_contains(u: Subspace, w: Subspace) -> bool:
    """True iff w is contained in u."""
    if u.ambient_dim != w.ambient_dim:
        raise AmbientMismatch("containment across ambient spaces")
    return all(u.contains_vector(v) for v in w.basis)


def subspace_ops(u: Subspace, w: Subspace, op: str):
    if op == "sum":
        return subspace_sum(u, w)
    if op == "intersect":
        return subspace_intersect(u, w)
    if op == "contains":
        return subspace_contains(u, w)
    raise ValueError(f"unknown subspace op {op!r}")


class Partition(tuple):
    """Weakly decreasing positive integers (Jordan block sizes)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError("partition parts must be >= 1")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def total(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self if p >= m) for m in range(1, self[0] + 1))
        )

    def rank_at(self, m: int) -> int:
        """sum_i max(lambda_i - m, 0): the rank of the m-th power."""
        return sum(max(p - m, 0) for p in self)

    def __repr__(self):
        return f"Partition{tuple(self)}"


def partition_from_ranks(ranks, total: int) -> Partition:
    """Jordan partition of a nilpotent operator on a `total`-dim space.

    ranks is the sequence (rank N, rank N^2, ...) truncated at zero;
    conjugate-partition entries are the rank differences.
    """
    rs = [total] + [r for r in ranks if r > 0]
    conj = [rs[i] - rs[i + 1] for i in range(len(rs) - 1)]
    conj.append(rs[-1])
    conj = [c for c in conj if c > 0]
    if any(conj[i] < conj[i + 1] for i in range(len(conj) - 1)):
        raise ValueError(f"not the rank sequence of a nilpotent operator: {ranks}")
    return Partition(conj).conjugate()


def _int_scaled_square(m: Matrix):
    """Globally scale a Rational square matrix to integers (powers keep rank)."""
    mult = 1
    for row in m.entries:
        for x in row:
            mult = mult * x.denominator // gcd(mult, x.denominator)
    return [[int(x * mult) for x in row] for row in m.entries]


def _int_matmul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(n):
                    oi[j] += x * bk[j]
    return out


def power_rank_sequence(m: Matrix, max_power: int):
    """Ranks of m, m^2, ..., stopping at zero or max_power entries."""
    if m.rows != m.cols:
        raise ValueError("rank sequence of a non-square matrix")
    if m.kind == RATIONAL:
        cur = _int_scaled_square(m)
        base = cur
        ranks = []
        for _ in range(max_power):
            r = _int_rank(cur)
            if r == 0:
                break
            ranks.append(r)
            cur = _int_matmul(cur, base)
        return tuple(ranks)
    cur = m
    ranks = []
    for _ in range(max_power):
        r = rank(cur)
        if r == 0:
            break
        ranks.append(r)
        cur = cur @ m
    return tuple(ranks)


def nilpotent_partition(n_matrix: Matrix) -> Partition:
    """Jordan block-size partition of a nilpotent matrix (1-blocks included)."""
    if n_matrix.rows != n_matrix.cols:
        raise NotNilpotent("matrix is not square")
    dim = n_matrix.rows
    ranks = power_rank_sequence(n_matrix, dim + 1)
    if len(ranks) > dim or (len(ranks) == dim and ranks[-1] > 0):
        raise NotNilpotent(f"N^{dim} != 0 (rank sequence starts {ranks[:dim]})")
    return partition_from_ranks(ranks, dim)
