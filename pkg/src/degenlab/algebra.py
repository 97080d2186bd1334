"""Anticommutative algebras given by exact structure constants.

A StructureTensor stores only the products e_i e_j with i < j as coordinate
vectors; e_j e_i = -(e_i e_j) and e_i e_i = 0 hold by construction, never by
validation.  All the closed invariants used by the degeneration machinery
live here: products of subspaces, the power ideals A^i, the annihilator,
the Jacobi/Malcev identity flags, and the Engel degree.

The Engel decision is exact: over a field of characteristic zero,
(L_a)^m = 0 for every a iff the matrix (sum_i x_i L_{e_i})^m vanishes
identically as a polynomial matrix, so we expand that power symbolically
instead of sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import rational_from_obj, rational_to_obj
from .linalg import (
    Matrix,
    Subspace,
    invert,
    kernel_basis,
    subspace_sum,
)


class DimensionMismatch(ValueError):
    """Vector or basis size does not match the algebra dimension."""


class StructureTensor:
    """Anticommutative multiplication table on QQ^n, keyed by pairs i < j."""

    __slots__ = ("dim", "products")

    def __init__(self, dim: int, products=None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        table = {}
        for (i, j), vec in (products or {}).items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"product key ({i},{j}) is not 1 <= i < j <= n")
            vec = tuple(Fraction(x) for x in vec)
            if len(vec) != dim:
                raise DimensionMismatch(f"product vector for ({i},{j}) has wrong length")
            if any(vec):
                table[(i, j)] = vec
        self.products = table

    @staticmethod
    def zero_algebra(dim: int) -> "StructureTensor":
        return StructureTensor(dim)

    @staticmethod
    def from_pairs(dim: int, pairs) -> "StructureTensor":
        """Build from entries (i, j, k) or (i, j, k, coeff): e_i e_j = coeff*e_k."""
        table = {}
        for entry in pairs:
            if len(entry) == 3:
                i, j, k = entry
                coeff = 1
            else:
                i, j, k, coeff = entry
            vec = list(table.get((i, j), (Fraction(0),) * dim))
            vec[k - 1] += Fraction(coeff)
            table[(i, j)] = tuple(vec)
        return StructureTensor(dim, table)

    def constant(self, i: int, j: int, k: int) -> Fraction:
        """mu_{i,j}^k with anticommutativity filled in (1-based indices)."""
        if i == j:
            return Fraction(0)
        if i < j:
            vec = self.products.get((i, j))
            return vec[k - 1] if vec else Fraction(0)
        vec = self.products.get((j, i))
        return -vec[k - 1] if vec else Fraction(0)

    def basis_product(self, i: int, j: int):
        """e_i e_j as a coordinate vector (1-based indices)."""
        zero = (Fraction(0),) * self.dim
        if i == j:
            return zero
        if i < j:
            return self.products.get((i, j), zero)
        vec = self.products.get((j, i))
        return tuple(-x for x in vec) if vec else zero

    def __eq__(self, other):
        return (
            isinstance(other, StructureTensor)
            and self.dim == other.dim
            and self.products == other.products
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.products.items()))))

    def __repr__(self):
        terms = []
        for (i, j), vec in sorted(self.products.items()):
            parts = []
            for k, c in enumerate(vec, start=1):
                if c == 0:
                    continue
                head = f"e{k}" if abs(c) == 1 else f"{c}*e{k}"
                parts.append(("-" if c < 0 else "+") + head)
            rhs = "".join(parts).lstrip("+")
            terms.append(f"e{i}e{j}={rhs}")
        body = ", ".join(terms) if terms else "zero multiplication"
        return f"StructureTensor(dim={self.dim}: {body})"

    def to_json_obj(self):
        prods = []
        for (i, j), vec in sorted(self.products.items()):
            prods.append({"i": i, "j": j, "value": [rational_to_obj(x) for x in vec]})
        return {"dim": self.dim, "products": prods}

    @staticmethod
    def from_json_obj(obj) -> "StructureTensor":
        dim = int(obj["dim"])
        table = {}
        for rec in obj.get("products", []):
            i, j = int(rec["i"]), int(rec["j"])
            vec = tuple(rational_from_obj(x) for x in rec["value"])
            table[(i, j)] = vec
        return StructureTensor(dim, table)


def product(a: StructureTensor, x, y):
    """Bilinear extension of the table to arbitrary vectors."""
    n = a.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch("vectors must have the algebra dimension")
    out = [Fraction(0)] * n
    for (i, j), vec in a.products.items():
        # anticommutative pairing picks up x_i y_j - x_j y_i
        c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
        if c:
            for k in range(n):
                if vec[k]:
                    out[k] += c * vec[k]
    return tuple(out)


def left_mult_matrix(a: StructureTensor, vec) -> Matrix:
    """Matrix of L_x in the standard basis; column j is product(x, e_j)."""
    n = a.dim
    if len(vec) != n:
        raise DimensionMismatch("vector must have the algebra dimension")
    cols = []
    for j in range(1, n + 1):
        col = [Fraction(0)] * n
        for i in range(1, n + 1):
            xi = vec[i - 1]
            if xi:
                prod = a.basis_product(i, j)
                for k in range(n):
                    if prod[k]:
                        col[k] += xi * prod[k]
        cols.append(col)
    return Matrix([[cols[j][k] for j in range(n)] for k in range(n)])


def subspace_product(a: StructureTensor, u: Subspace, w: Subspace) -> Subspace:
    """Span of the pairwise products of basis vectors of u and w."""
    n = a.dim
    if u.ambient_dim != n or w.ambient_dim != n:
        raise DimensionMismatch("subspace ambient dimension mismatch")
    vecs = []
    for x in u.basis:
        for y in w.basis:
            p = product(a, x, y)
            if any(p):
                vecs.append(p)
    return Subspace.from_vectors(n, vecs)


def power_ideal(a: StructureTensor, i: int) -> Subspace:
    """A^i with A^1 the whole space and A^i = A(A^{i-1}) + (A^{i-1})A."""
    if i < 1:
        raise ValueError("power index must be >= 1")
    full = Subspace.full(a.dim)
    cur = full
    for _ in range(i - 1):
        # anticommutativity makes the two summands equal
        cur = subspace_product(a, full, cur)
    return cur


def is_nilpotent(a: StructureTensor):
    """(True, least m with A^m = 0) or (False, None) when powers stabilize."""
    full = Subspace.full(a.dim)
    cur = full
    m = 1
    while True:
        nxt = subspace_product(a, full, cur)
        m += 1
        if nxt.dim == 0:
            return True, m
        if nxt.dim == cur.dim:
            return False, None
        cur = nxt


def annihilator(a: StructureTensor) -> Subspace:
    """{x : x A = A x = 0}; for anticommutative tables one side suffices."""
    n = a.dim
    rows = []
    for j in range(1, n + 1):
        # condition product(x, e_j) = 0, linear in x
        for k in range(n):
            row = [a.basis_product(i, j)[k] for i in range(1, n + 1)]
            rows.append(row)
    return kernel_basis(Matrix(rows))


def dim_square(a: StructureTensor) -> int:
    return power_ideal(a, 2).dim


def change_basis(a: StructureTensor, basis: Matrix) -> StructureTensor:
    """Structure constants of the same algebra in a new basis.

    Row i of `basis` expresses the new basis vector f_i in the standard
    basis.  Raises linalg.Singular for non-invertible input.
    """
    n = a.dim
    if basis.rows != n or basis.cols != n:
        raise DimensionMismatch("basis matrix must be n x n")
    inv = invert(basis)
    table = {}
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            p = product(a, basis.entries[i - 1], basis.entries[j - 1])
            if not any(p):
                continue
            # coords c with p = sum c_k f_k:  c = p . inv  (rows convention)
            coords = tuple(
                sum(p[r] * inv.entries[r][k] for r in range(n)) for k in range(n)
            )
            if any(coords):
                table[(i, j)] = coords
    return StructureTensor(n, table)


def direct_sum_trivial(a: StructureTensor, k: int) -> StructureTensor:
    """A + k extra central coordinates with zero products."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return a
    n = a.dim
    table = {
        key: vec + (Fraction(0),) * k for key, vec in a.products.items()
    }
    return StructureTensor(n + k, table)


@dataclass(frozen=True)
class IdentityFlags:
    anticommutative_wellformed: bool
    jacobi: bool
    malcev: bool


def _jacobi_holds(a: StructureTensor) -> bool:
    n = a.dim
    basis = [tuple(Fraction(int(i == k)) for k in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = [Fraction(0)] * n
                for term in (
                    product(a, a.basis_product(i + 1, j + 1), basis[k]),
                    product(a, a.basis_product(j + 1, k + 1), basis[i]),
                    product(a, a.basis_product(k + 1, i + 1), basis[j]),
                ):
                    for r in range(n):
                        acc[r] += term[r]
                if any(acc):
                    return False
    return True


def _malcev_defect(a: StructureTensor, x, y, z):
    """(xy)(xz) - ((xy)z)x - ((yz)x)x - ((zx)x)y."""
    xy = product(a, x, y)
    xz = product(a, x, z)
    yz = product(a, y, z)
    zx = product(a, z, x)
    lhs = product(a, xy, xz)
    t1 = product(a, product(a, xy, z), x)
    t2 = product(a, product(a, yz, x), x)
    t3 = product(a, product(a, zx, x), y)
    return tuple(lhs[r] - t1[r] - t2[r] - t3[r] for r in range(a.dim))


def _malcev_holds(a: StructureTensor) -> bool:
    # quadratic in x, linear in y and z: basis vectors and pair sums for x,
    # basis vectors for y, z decide it over characteristic zero
    n = a.dim
    basis = [tuple(Fraction(int(i == k)) for k in range(n)) for i in range(n)]
    xs = list(basis)
    for i in range(n):
        for j in range(i + 1, n):
            xs.append(tuple(basis[i][k] + basis[j][k] for k in range(n)))
    for x in xs:
        for y in basis:
            for z in basis:
                if any(_malcev_defect(a, x, y, z)):
                    return False
    return True


def identity_flags(a: StructureTensor) -> IdentityFlags:
    return IdentityFlags(
        anticommutative_wellformed=True,
        jacobi=_jacobi_holds(a),
        malcev=_malcev_holds(a),
    )


def _poly_matrix_mul_linear(cur, lin, n):
    """Multiply a polynomial matrix by the linear matrix sum_i x_i L_i.

    Entries are dicts {sorted index tuple: coefficient}; lin[k][c] is a
    dict {i: coefficient} over single variable indices.
    """
    out = [[{} for _ in range(n)] for _ in range(n)]
    for r in range(n):
        cur_r = cur[r]
        out_r = out[r]
        for k in range(n):
            poly = cur_r[k]
            if not poly:
                continue
            for c in range(n):
                lin_entry = lin[k][c]
                if not lin_entry:
                    continue
                target = out_r[c]
                for mono, coeff in poly.items():
                    for var, lc in lin_entry.items():
                        key = tuple(sorted(mono + (var,)))
                        val = target.get(key, 0) + coeff * lc
                        if val:
                            target[key] = val
                        elif key in target:
                            del target[key]
    return out


def engel_degree(a: StructureTensor, max_m: int):
    """Least m <= max_m with (L_x)^m = 0 for every x, or None.

    Decided by full polarization: the polynomial matrix (sum x_i L_{e_i})^m
    must vanish identically, which over QQ is an exact finite computation.
    """
    n = a.dim
    lin = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(1, n + 1):
        mat = left_mult_matrix(
            a, tuple(Fraction(int(i == k)) for k in range(1, n + 1))
        )
        for r in range(n):
            for c in range(n):
                v = mat.entries[r][c]
                if v:
                    lin[r][c][i] = v
    cur = [[({(): Fraction(1)} if r == c else {}) for c in range(n)] for r in range(n)]
    for m in range(1, max_m + 1):
        cur = _poly_matrix_mul_linear(cur, lin, n)
        if all(not cur[r][c] for r in range(n) for c in range(n)):
            return m
    return None


def generated_subalgebra(a: StructureTensor, vec) -> Subspace:
    """Smallest subalgebra containing vec (for anticommutative input: <vec>)."""
    n = a.dim
    cur = Subspace.from_vectors(n, [vec])
    while True:
        nxt = subspace_sum(cur, subspace_product(a, cur, cur))
        if nxt.dim == cur.dim:
            return cur
        cur = nxt
