"""The named algebra families, their levels, and the T22 classifier.

Every multiplication table is transcribed in the coordinates of its source
table (products land in high-index basis vectors); certificates in the
ledger depend on these exact coordinates, so nothing here renormalizes.

Family keys are plain strings ("T22_e45", "eta3", "T2k2_e23_m4", ...) used
uniformly by the CLI, the ledger files and the manifest.  Parameterized
families carry their parameter inside the key.

`classify_T22` follows the matrix-pair analysis behind the level <= 5
classification of algebras whose dominant one-dimensional contraction has
two Jordan blocks of size two: it rebuilds the algebra as a skew pair on
the quotient modulo the square, and reads the canonical name off the pair
pencil (generic rank plus the divisor of rank-two members).  When the
decisive quadratic has no rational root the classifier reports that a
field extension would be needed instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    StructureTensor,
    annihilator,
    engel_degree,
    power_ideal,
    subspace_product,
)
from .exactnum import Polynomial, RationalFunction, poly_gcd
from .linalg import Matrix, Partition, Subspace, rank


class DimensionOutOfRange(ValueError):
    """Family instantiated outside its dimension bound."""


class NotSkew(ValueError):
    """Skew-pair constructor fed a non-skew-symmetric matrix."""


class NotSurjective(ValueError):
    """Skew pair whose image does not span the two-dimensional target."""


class PreconditionViolated(ValueError):
    """classify_T22 applied to an algebra whose IW-max is not (2,2)."""


class UnknownFamily(KeyError):
    pass


@dataclass(frozen=True)
class CatalogName:
    family: str
    m: int | None = None
    partition: tuple | None = None

    @property
    def key(self) -> str:
        if self.family == "T":
            return "T" + "".join(str(p) for p in self.partition)
        if self.family == "eta":
            return f"eta{self.m}"
        if self.family == "eta_eps_double":
            return f"eta_eps_double{self.m}"
        if self.family.startswith("T2k2_"):
            return f"{self.family}_m{self.m}"
        return self.family

    def __str__(self):
        return self.key


@dataclass(frozen=True)
class LevelValue:
    """An exact level 0..5 or a lower bound 'at least 6/7'."""

    exact: int | None = None
    at_least: int | None = None

    def __str__(self):
        return str(self.exact) if self.exact is not None else f">={self.at_least}"

    def to_json_obj(self):
        return self.exact if self.exact is not None else f">={self.at_least}"

    @staticmethod
    def from_json_obj(obj) -> "LevelValue":
        if isinstance(obj, int):
            return LevelValue(exact=obj)
        return LevelValue(at_least=int(str(obj).lstrip(">=")))


@dataclass(frozen=True)
class LevelInfo:
    level: LevelValue
    infinite_level: LevelValue


# sentinels returned by classify_T22 beside a CatalogName
class _Sentinel:
    def __init__(self, label):
        self.label = label

    def __repr__(self):
        return self.label


LevelAtLeast6 = _Sentinel("LevelAtLeast6")
NeedsExtension = _Sentinel("NeedsExtension")


def parse_name(key: str) -> CatalogName:
    key = key.strip()
    if key in ("zero", "n3", "eta_eps15", "T22_e23", "T22_e24", "T22_e34",
               "T22_e45", "T222_e23", "T222_e24", "T222_e7special",
               "T3_e23", "T3_e24", "T3_e34", "T3_e45", "T32_e23", "T4_e23"):
        return CatalogName(key)
    if key.startswith("eta_eps_double"):
        return CatalogName("eta_eps_double", m=int(key[len("eta_eps_double"):]))
    if key.startswith("eta"):
        return CatalogName("eta", m=int(key[3:]))
    for fam in ("T2k2_e23_shift", "T2k2_e23", "T2k2_special", "T2k2_e2m2"):
        prefix = fam + "_m"
        if key.startswith(prefix):
            return CatalogName(fam, m=int(key[len(prefix):]))
    if key.startswith("T") and key[1:].isdigit():
        return CatalogName("T", partition=tuple(int(ch) for ch in key[1:]))
    raise UnknownFamily(key)


# --- multiplication tables ------------------------------------------------


def _bound(name: CatalogName) -> tuple[int, int | None]:
    """(min_dim, max_dim or None for unbounded)."""
    fam, m, lam = name.family, name.m, name.partition
    if fam == "zero":
        return 1, None
    if fam == "n3":
        return 3, None
    if fam == "eta":
        return 2 * m + 1, None
    if fam == "eta_eps15":
        return 6, None
    if fam == "eta_eps_double":
        return 2 * m + 3, None
    if fam == "T":
        bounds = {
            (3,): (4, None), (2, 2): (5, None), (2, 2, 2): (7, None),
            (4,): (5, None), (3, 2): (6, None), (2, 2, 2, 2): (9, None),
            (3, 3): (7, 7), (3, 2, 2): (8, None), (2, 2, 2, 2, 2): (11, None),
        }
        if lam not in bounds:
            raise UnknownFamily(f"no table for partition T^{lam}")
        return bounds[lam]
    if fam in ("T22_e23", "T22_e24", "T22_e34"):
        return 6, None
    if fam == "T22_e45":
        return 7, None
    if fam in ("T222_e23", "T222_e24"):
        return 7, None
    if fam == "T222_e7special":
        return 7, 7
    if fam == "T2k2_e23":
        return 2 * m + 1, None
    if fam == "T2k2_e23_shift":
        return 2 * m + 2, None
    if fam == "T2k2_special":
        return 2 * m + 1, None
    if fam == "T2k2_e2m2":
        return 2 * m + 2, None
    if fam in ("T3_e23", "T3_e24", "T3_e34"):
        return 5, None
    if fam == "T3_e45":
        return 6, None
    if fam == "T32_e23":
        return 6, None
    if fam == "T4_e23":
        return 5, 5
    raise UnknownFamily(name.family)


def _pairs(name: CatalogName, n: int):
    """Nonzero products (i, j, k[, coeff]) of the family at dimension n."""
    fam, m, lam = name.family, name.m, name.partition
    if fam == "zero":
        return []
    if fam == "n3":
        return [(1, 2, n)]
    if fam == "eta":
        return [(2 * i - 1, 2 * i, 2 * m + 1) for i in range(1, m + 1)]
    if fam == "eta_eps15":
        return [(1, 2, 5), (3, 4, 5), (1, 5, n)]
    if fam == "eta_eps_double":
        pairs = [(2 * i - 1, 2 * i, 2 * m + 1) for i in range(1, m + 1)]
        pairs += [(1, 2 * m + 1, n - 1), (2, 2 * m + 1, n)]
        return pairs
    if fam == "T":
        if lam == (3,):
            return [(1, 2, 3), (1, 3, n)]
        if lam == (4,):
            return [(1, 2, 3), (1, 3, 4), (1, 4, n)]
        if lam == (3, 2):
            return [(1, 2, n - 1), (1, 3, 4), (1, 4, n)]
        if lam == (3, 3):
            return [(1, 2, 3), (1, 3, 4), (1, 5, 6), (1, 6, 7)]
        if lam == (3, 2, 2):
            return [(1, 2, n - 2), (1, 3, n - 1), (1, 4, 5), (1, 5, n)]
        k = len(lam)  # all-twos partitions
        return [(1, i + 1, i + n - k) for i in range(1, k + 1)]
    if fam == "T22_e23":
        return [(1, 2, n - 1), (1, 3, n), (2, 3, n - 2)]
    if fam == "T22_e24":
        return [(1, 2, n - 1), (1, 3, n), (2, 4, n)]
    if fam == "T22_e34":
        return [(1, 2, n - 1), (1, 3, n), (3, 4, n)]
    if fam == "T22_e45":
        return [(1, 2, n - 1), (1, 3, n), (4, 5, n)]
    if fam in ("T222_e23", "T222_e24"):
        base = [(1, i + 1, i + n - 3) for i in range(1, 4)]
        base.append((2, 3, n) if fam == "T222_e23" else (2, 4, n))
        return base
    if fam == "T222_e7special":
        return [(1, 2, 5), (1, 3, 6), (1, 4, 7), (2, 3, 4), (2, 6, 7, -1), (3, 5, 7)]
    if fam == "T2k2_e23":
        return [(1, i + 1, i + n - m) for i in range(1, m + 1)] + [(2, 3, n)]
    if fam == "T2k2_e23_shift":
        return [(1, i + 1, i + n - m) for i in range(1, m + 1)] + [(2, 3, n - m)]
    if fam == "T2k2_special":
        base = [(1, i + 1, i + n - m) for i in range(1, m + 1)]
        base += [(2, 3, m + 1), (2, 2 + n - m, n, -1), (3, 1 + n - m, n)]
        return base
    if fam == "T2k2_e2m2":
        return [(1, i + 1, i + n - m) for i in range(1, m + 1)] + [(2, m + 2, n)]
    if fam == "T3_e23":
        return [(1, 2, 3), (1, 3, n), (2, 3, n - 1)]
    if fam == "T3_e24":
        return [(1, 2, 3), (1, 3, n), (2, 4, n)]
    if fam == "T3_e34":
        return [(1, 2, 3), (1, 3, n), (3, 4, n)]
    if fam == "T3_e45":
        return [(1, 2, 3), (1, 3, n), (4, 5, n)]
    if fam == "T32_e23":
        return [(1, 2, n - 1), (1, 3, 4), (1, 4, n), (2, 3, n)]
    if fam == "T4_e23":
        return [(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5)]
    raise UnknownFamily(fam)


def instantiate(name, n: int) -> StructureTensor:
    """Exact multiplication table of a catalog family at dimension n."""
    if isinstance(name, str):
        name = parse_name(name)
    lo, hi = _bound(name)
    if n < lo or (hi is not None and n > hi):
        bound = f"n >= {lo}" if hi is None else f"{lo} <= n <= {hi}"
        raise DimensionOutOfRange(f"{name.key} requires {bound}, got n = {n}")
    return StructureTensor.from_pairs(n, _pairs(name, n))


def expected_iw_max(name) -> Partition | str:
    """Partition the family name promises for its dominant contraction.

    The zero algebra's label is dimension dependent (all ones); it is
    returned as the string "ones" and resolved per dimension by callers.
    """
    if isinstance(name, str):
        name = parse_name(name)
    fam = name.family
    if fam == "zero":
        return "ones"
    if fam in ("n3", "eta"):
        return Partition((2,))
    if fam == "eta_eps15":
        return Partition((3,))
    if fam == "eta_eps_double":
        # a generic element composes a pair product with both decorations,
        # reaching rank sequence (3, 1); the single-decoration family
        # eta_eps15 stays at (2, 1)
        return Partition((3, 2))
    if fam == "T":
        return Partition(name.partition)
    if fam.startswith("T22_"):
        return Partition((2, 2))
    if fam.startswith("T222_"):
        return Partition((2, 2, 2))
    if fam.startswith("T2k2_"):
        return Partition((2,) * name.m)
    if fam.startswith("T3_"):
        return Partition((3,))
    if fam == "T32_e23":
        return Partition((3, 2))
    if fam == "T4_e23":
        return Partition((4,))
    raise UnknownFamily(fam)


def level_lookup(name, n: int) -> LevelInfo:
    """Level and infinite level of the family member at dimension n."""
    if isinstance(name, str):
        name = parse_name(name)
    lo, hi = _bound(name)
    if n < lo or (hi is not None and n > hi):
        raise DimensionOutOfRange(f"{name.key} not defined at n = {n}")
    fam, m, lam = name.family, name.m, name.partition

    def info(level, infinite=None):
        inf = infinite if infinite is not None else level
        return LevelInfo(_lv(level), _lv(inf))

    if fam == "zero":
        return info(0)
    if fam == "n3":
        return info(1)
    if fam == "eta":
        return info(m)
    if fam == "eta_eps15":
        return info(">=6" if n == 6 else ">=7", ">=7")
    if fam == "eta_eps_double":
        if m == 1:
            return info(4)
        return info(">=7")
    if fam == "T":
        if lam == (3,):
            return info(2 if n == 4 else 3, 3)
        if lam == (4,):
            return info(4 if n == 5 else 5, 5)
        if lam == (3, 3):
            return info(5, ">=6")
        return info({(2, 2): 2, (2, 2, 2): 3, (3, 2): 4, (2, 2, 2, 2): 4,
                     (3, 2, 2): 5, (2, 2, 2, 2, 2): 5}[lam])
    if fam in ("T22_e23", "T22_e24"):
        return info(3)
    if fam == "T22_e34":
        return info(4)
    if fam == "T22_e45":
        return info(5)
    if fam == "T222_e23":
        return info(4)
    if fam == "T222_e24":
        return info(5)
    if fam == "T222_e7special":
        return info(5, ">=7")
    if fam == "T2k2_e23":
        return info({3: 4}.get(m, ">=7" if m == 4 else ">=6"))
    if fam == "T2k2_e23_shift":
        return info(">=7" if m == 4 else ">=6")
    if fam == "T2k2_special":
        if m == 3:
            return info(5, ">=7") if n == 7 else info(">=7")
        return info(">=7" if m == 4 else ">=6")
    if fam == "T2k2_e2m2":
        return info(">=7" if m == 4 else ">=6")
    if fam in ("T3_e23", "T3_e24"):
        return info(4)
    if fam == "T3_e34":
        return info(5)
    if fam == "T3_e45":
        return info(5, ">=6") if n == 6 else info(">=6")
    if fam == "T32_e23":
        return info(5)
    if fam == "T4_e23":
        return info(5, ">=6")
    raise UnknownFamily(fam)


def _lv(value) -> LevelValue:
    if isinstance(value, LevelValue):
        return value
    if isinstance(value, int):
        return LevelValue(exact=value)
    return LevelValue(at_least=int(str(value).lstrip(">=")))


MANIFEST_FAMILIES = (
    ["zero", "n3"]
    + [f"eta{m}" for m in (2, 3, 4, 5)]
    + ["eta_eps15", "eta_eps_double2", "eta_eps_double3"]
    + ["T3", "T22", "T222", "T4", "T32", "T2222", "T33", "T322", "T22222"]
    + ["T22_e23", "T22_e24", "T22_e34", "T22_e45"]
    + ["T222_e23", "T222_e24", "T222_e7special"]
    + ["T2k2_e23_m4", "T2k2_e23_m5"]
    + ["T2k2_e23_shift_m3", "T2k2_e23_shift_m4"]
    + ["T2k2_special_m4", "T2k2_special_m5"]
    + ["T2k2_e2m2_m3", "T2k2_e2m2_m4"]
    + ["T3_e23", "T3_e24", "T3_e34", "T3_e45", "T32_e23", "T4_e23"]
)

DIM_CAP = 11


def tested_dims(name) -> list[int]:
    """Minimal legal dimension and its successor, capped at DIM_CAP."""
    if isinstance(name, str):
        name = parse_name(name)
    lo, hi = _bound(name)
    if name.family == "zero":
        lo = 4  # arbitrary small desk dimension for the trivial family
    dims = [d for d in (lo, lo + 1) if (hi is None or d <= hi) and d <= DIM_CAP]
    return dims


def build_manifest() -> dict:
    """Catalog manifest: bounds, tested dims, levels, expected contraction."""
    entries = []
    for key in MANIFEST_FAMILIES:
        name = parse_name(key)
        lo, hi = _bound(name)
        iw = expected_iw_max(name)
        levels = []
        for n in tested_dims(name):
            li = level_lookup(name, n)
            levels.append(
                {
                    "dim": n,
                    "level": li.level.to_json_obj(),
                    "infinite_level": li.infinite_level.to_json_obj(),
                }
            )
        entries.append(
            {
                "name": key,
                "min_dim": lo,
                "max_dim": hi,
                "tested_dims": tested_dims(name),
                "iw_max": "ones" if isinstance(iw, str) else list(iw),
                "levels": levels,
            }
        )
    return {"families": entries}


# --- skew pairs and the T22 classifier ------------------------------------


def build_skew_pair_algebra(p_entries, q_entries) -> StructureTensor:
    """U x U -> k^2 skew pair as an algebra on U + k^2.

    p_entries/q_entries are (n-2)x(n-2) rational matrices; entry (i, j)
    gives the e_{n-1} / e_n component of e_i e_j.
    """
    p = [[Fraction(x) for x in row] for row in p_entries]
    q = [[Fraction(x) for x in row] for row in q_entries]
    d = len(p)
    if any(len(row) != d for row in p) or len(q) != d or any(len(r) != d for r in q):
        raise ValueError("skew pair matrices must be square and equal-sized")
    for mat, tag in ((p, "first"), (q, "second")):
        for i in range(d):
            if mat[i][i] != 0:
                raise NotSkew(f"{tag} matrix has nonzero diagonal")
            for j in range(i + 1, d):
                if mat[i][j] != -mat[j][i]:
                    raise NotSkew(f"{tag} matrix is not skew-symmetric")
    pairs = [(p[i][j], q[i][j]) for i in range(d) for j in range(i + 1, d)]
    span = Subspace.from_vectors(2, [list(v) for v in pairs])
    if span.dim != 2:
        raise NotSurjective("pair image does not span the 2-dimensional target")
    n = d + 2
    table = {}
    for i in range(d):
        for j in range(i + 1, d):
            if p[i][j] or q[i][j]:
                vec = [Fraction(0)] * n
                vec[n - 2] = p[i][j]
                vec[n - 1] = q[i][j]
                table[(i + 1, j + 1)] = tuple(vec)
    return StructureTensor(n, table)


def _square_complement_lift(a: StructureTensor, square: Subspace):
    """Indices of standard coordinates complementing A^2 (pivot-free)."""
    pivots = set()
    for row in square.basis:
        pivots.add(next(i for i, x in enumerate(row) if x))
    return [i for i in range(a.dim) if i not in pivots]


def _pair_pencil(a: StructureTensor, square: Subspace):
    """Skew pair (P, Q) of the induced map on A / A^2 in lifted coordinates."""
    n = a.dim
    lift = _square_complement_lift(a, square)
    w1, w2 = square.basis
    # solve p = x*w1 + y*w2 by the pivot coordinates of the RREF basis
    p1 = next(i for i, x in enumerate(w1) if x)
    p2 = next(i for i, x in enumerate(w2) if x)
    d = len(lift)
    p_mat = [[Fraction(0)] * d for _ in range(d)]
    q_mat = [[Fraction(0)] * d for _ in range(d)]
    basis_vecs = []
    for idx in lift:
        v = [Fraction(0)] * n
        v[idx] = Fraction(1)
        basis_vecs.append(tuple(v))
    from .algebra import product as alg_product

    for i in range(d):
        for j in range(i + 1, d):
            prod = alg_product(a, basis_vecs[i], basis_vecs[j])
            x = prod[p1]
            y = prod[p2]
            # RREF basis means the rest of prod is x*w1 + y*w2 exactly,
            # which the caller guarantees via prod in A^2
            p_mat[i][j], p_mat[j][i] = x, -x
            q_mat[i][j], q_mat[j][i] = y, -y
    return p_mat, q_mat


def _pencil_generic_rank(p_mat, q_mat) -> int:
    d = len(p_mat)
    t = RationalFunction(Polynomial((0, 1)))
    entries = [
        [RationalFunction(Polynomial((p_mat[i][j],))) + t * RationalFunction(Polynomial((q_mat[i][j],)))
         for j in range(d)]
        for i in range(d)
    ]
    return rank(Matrix(entries, kind="ratfun"))


def _pfaffian_forms(p_mat, q_mat):
    """Binary quadratic (a, b, c) = a*x^2 + b*xy + c*y^2 per 4-subset."""
    d = len(p_mat)
    forms = []
    from itertools import combinations

    for sub in combinations(range(d), 4):
        i, j, k, l = sub
        # pf = a12*a34 - a13*a24 + a14*a23 on the pencil x*P + y*Q
        def lin(r, c):
            return (p_mat[r][c], q_mat[r][c])

        def mul(u, v):
            # (ux*x + uy*y)(vx*x + vy*y) -> quadratic coefficients
            return (u[0] * v[0], u[0] * v[1] + u[1] * v[0], u[1] * v[1])

        t1 = mul(lin(i, j), lin(k, l))
        t2 = mul(lin(i, k), lin(j, l))
        t3 = mul(lin(i, l), lin(j, k))
        form = tuple(t1[s] - t2[s] + t3[s] for s in range(3))
        if any(form):
            forms.append(form)
    return forms


def _binary_form_gcd(forms):
    """gcd of homogeneous binary forms, returned as (degree, disc_kind).

    disc_kind for a degree-2 gcd is "double", "split" (two rational roots)
    or "irrational"; degree <= 1 gcds need no kind.
    """
    # split off the y^k content: f = y^dinf * g(x) with g = f(x, 1)
    min_dinf = None
    polys = []
    for (a, b, c) in forms:
        coeffs = [c, b, a]  # g(x) = a x^2 + b x + c from f(x, 1)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        dinf = 2 - (len(coeffs) - 1) if coeffs else 2
        if not coeffs:
            continue  # identically zero form (filtered earlier anyway)
        min_dinf = dinf if min_dinf is None else min(min_dinf, dinf)
        polys.append(Polynomial(coeffs))
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
        if g.degree == 0 and min_dinf == 0:
            break
    total = g.degree + (min_dinf or 0)
    if total < 2:
        return total, None
    # reconstruct the quadratic's root structure
    if min_dinf == 2:
        return 2, "double"  # y^2
    if min_dinf == 1:
        return 2, "split"  # y * (x - r) with r rational, distinct from infinity
    a = g.coeffs[2] if g.degree == 2 else Fraction(0)
    b = g.coeffs[1]
    c = g.coeffs[0]
    disc = b * b - 4 * a * c
    if disc == 0:
        return 2, "double"
    num_sq = _is_square(disc.numerator * disc.denominator)
    return 2, "split" if (disc > 0 and num_sq) else "irrational"


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = int(n ** 0.5)
    for cand in (r - 1, r, r + 1, r + 2):
        if cand >= 0 and cand * cand == n:
            return True
    return False


def classify_T22(a: StructureTensor):
    """Canonical name of an algebra with dominant contraction (2,2).

    Returns a CatalogName among T22/T22_e23/T22_e24/T22_e34/T22_e45, or the
    sentinels LevelAtLeast6 / NeedsExtension.  The (2,2) precondition is
    validated exactly: the algebra must be 2-Engel with a two- or
    three-dimensional square annihilated by the whole algebra.
    """
    n = a.dim
    if engel_degree(a, 2) is None:
        raise PreconditionViolated("not 2-Engel, so IW-max is not (2,2)")
    square = power_ideal(a, 2)
    s = square.dim
    full = Subspace.full(n)
    if subspace_product(a, full, square).dim != 0:
        raise PreconditionViolated("A * A^2 != 0, so IW-max is not (2,2)")
    if s == 3:
        ann = annihilator(a)
        if ann.dim != n - 3:
            raise PreconditionViolated(
                f"square has dim 3 but Ann has dim {ann.dim} != n-3"
            )
        return CatalogName("T22_e23")
    if s != 2:
        raise PreconditionViolated(f"dim A^2 = {s} is incompatible with (2,2)")
    p_mat, q_mat = _pair_pencil(a, square)
    r_gen = _pencil_generic_rank(p_mat, q_mat)
    if r_gen <= 2:
        return CatalogName("T", partition=(2, 2))
    if r_gen >= 6:
        return LevelAtLeast6
    forms = _pfaffian_forms(p_mat, q_mat)
    if not forms:
        # cannot happen with r_gen = 4, kept as a guard
        return LevelAtLeast6
    degree, kind = _binary_form_gcd(forms)
    if degree == 0:
        return LevelAtLeast6
    if degree == 1:
        return CatalogName("T22_e45")
    if kind == "double":
        return CatalogName("T22_e24")
    if kind == "split":
        return CatalogName("T22_e34")
    return NeedsExtension
