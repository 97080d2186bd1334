"""Certificate-checked degenerations and non-degeneration witnesses.

A degeneration claim mu -> chi is certified by a parameterized basis: an
n x n matrix of rational functions in t whose rows form a basis for all but
finitely many t.  The checker recomputes the structure constants of the
source in that basis exactly, demands regularity at t = 0, and compares the
limit with the target constants entry by entry.  A pole or a mismatch is a
verdict, not an exception.

Non-degenerations are two-tiered.  Invariant witnesses (dimension of the
square, dimension of the annihilator, rank-sequence dominance, the Jacobi
identity surviving limits) are genuine proofs.  Closed-set witnesses prove
the source side by a stored basis and only *falsify* the target side by
seeded random orbit sampling; reports must keep the two tiers apart.

Basis rows are written in a small text syntax, e.g.

    "e1", "e2+e3", "t*e4", "(1/t)*e5 - (1/t^2)*e7", "-e2-e5"
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    StructureTensor,
    annihilator,
    change_basis,
    dim_square,
    identity_flags,
)
from .contraction import dominates, iw_max, rank_sequence
from .exactnum import (
    PoleAtZero,
    RationalFunction,
    RF_ONE,
    RF_ZERO,
    parse_rational_function,
)
from .linalg import Matrix, Singular, invert


class SingularFamily(ValueError):
    """Parameterized basis whose determinant is identically zero."""


class UnknownKind(ValueError):
    """Non-degeneration witness of an unrecognized kind."""


TERM_RE = re.compile(r"^(?:(?P<coeff>.+)\*)?e(?P<idx>\d+)$")


def parse_basis_row(text: str, dim: int):
    """One basis row as a vector of rational functions.

    Accepts sums of terms `[coeff*]e<k>` with rational-function
    coefficients; a bare leading sign belongs to the first term.
    """
    out = [RF_ZERO] * dim
    terms = _split_terms(text)
    if not terms:
        raise ValueError(f"empty basis row: {text!r}")
    for sign, term in terms:
        m = TERM_RE.match(term.replace(" ", ""))
        if not m:
            raise ValueError(f"cannot parse basis term {term!r} in {text!r}")
        idx = int(m.group("idx"))
        if not (1 <= idx <= dim):
            raise ValueError(f"basis index e{idx} outside dimension {dim}")
        coeff_text = m.group("coeff")
        coeff = RF_ONE if coeff_text is None else parse_rational_function(coeff_text)
        if sign < 0:
            coeff = -coeff
        out[idx - 1] = out[idx - 1] + coeff
    return out


def _split_terms(text: str):
    """Split on top-level + and -, keeping signs; respects parentheses."""
    terms = []
    depth = 0
    cur = []
    pending_sign = 1
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur and cur[-1] not in "*/^(+-":
            terms.append((pending_sign, "".join(cur).strip()))
            cur = []
            pending_sign = 1 if ch == "+" else -1
            continue
        if depth == 0 and ch in "+-" and not cur:
            pending_sign *= 1 if ch == "+" else -1
            continue
        cur.append(ch)
    if cur:
        terms.append((pending_sign, "".join(cur).strip()))
    return [(s, t) for s, t in terms if t]


class ParameterizedBasis:
    """n x n matrix of rational functions; row i expresses E_i^t."""

    __slots__ = ("dim", "matrix")

    def __init__(self, dim: int, rows):
        if len(rows) != dim:
            raise ValueError(f"expected {dim} rows, got {len(rows)}")
        parsed = []
        for row in rows:
            if isinstance(row, str):
                parsed.append(parse_basis_row(row, dim))
            else:
                parsed.append(list(row))
        self.dim = dim
        self.matrix = Matrix(parsed, kind="ratfun")

    @staticmethod
    def identity(dim: int) -> "ParameterizedBasis":
        return ParameterizedBasis(dim, [[RF_ONE if i == j else RF_ZERO
                                         for j in range(dim)] for i in range(dim)])


def apply_parameterized_basis(a: StructureTensor, basis: ParameterizedBasis):
    """Structure constants of `a` in the parameterized basis.

    Returns a dict {(i, j): vector of RationalFunction} for i < j; raises
    SingularFamily when the rows fail to be a basis for generic t.
    """
    n = a.dim
    if basis.dim != n:
        raise ValueError("basis dimension does not match the algebra")
    try:
        inv = invert(basis.matrix)
    except Singular:
        raise SingularFamily("parameterized basis has identically zero determinant")
    rows = basis.matrix.entries
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            vec = _rf_product(a, rows[i], rows[j])
            if all(x.is_zero() for x in vec):
                continue
            coords = tuple(
                _dot_rf(vec, [inv.entries[r][k] for r in range(n)])
                for k in range(n)
            )
            if any(coords):
                out[(i + 1, j + 1)] = coords
    return out


def _rf_product(a: StructureTensor, x_row, y_row):
    """Bilinear product of two RationalFunction vectors under `a`."""
    n = a.dim
    out = [RF_ZERO] * n
    for (i, j), vec in a.products.items():
        c = x_row[i - 1] * y_row[j - 1] - x_row[j - 1] * y_row[i - 1]
        if not c.is_zero():
            for k in range(n):
                if vec[k]:
                    out[k] = out[k] + c * RationalFunction.const(vec[k])
    return out


def _dot_rf(vec, col):
    acc = RF_ZERO
    for a, b in zip(vec, col):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc


@dataclass(frozen=True)
class Verdict:
    status: str  # pass | fail | proved | refutation_not_found | refuted
    reason: str = ""
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "proved")


@dataclass(frozen=True)
class AlgebraRef:
    """Reference to an algebra: catalog name + dim, or an inline table."""

    name: str
    dim: int
    products: tuple | None = None  # inline ((i, j, (coeffs...)), ...) or None

    def resolve(self) -> StructureTensor:
        if self.products is not None:
            return StructureTensor(
                self.dim, {(i, j): vec for (i, j, vec) in self.products}
            )
        from .catalog import instantiate

        return instantiate(self.name, self.dim)

    @property
    def label(self) -> str:
        return f"{self.name}@{self.dim}"


@dataclass(frozen=True)
class DegenerationCertificate:
    source: AlgebraRef
    target: AlgebraRef
    basis_rows: tuple
    provenance: str = ""
    proper: bool | None = None  # True: claimed non-trivial (source != target)
    separator: str | None = None  # invariant certifying non-isomorphism
    cert_id: str = ""

    def basis(self) -> ParameterizedBasis:
        return ParameterizedBasis(self.source.dim, list(self.basis_rows))


def verify_degeneration(cert: DegenerationCertificate) -> Verdict:
    """Exact pass/fail for one parameterized-basis certificate."""
    src = cert.source.resolve()
    tgt = cert.target.resolve()
    if src.dim != tgt.dim:
        return Verdict("fail", "source and target dimensions differ")
    n = src.dim
    try:
        constants = apply_parameterized_basis(src, cert.basis())
    except SingularFamily as exc:
        return Verdict("fail", str(exc))
    limit = {}
    for (i, j), vec in constants.items():
        out = []
        for k, entry in enumerate(vec, start=1):
            try:
                val = entry.eval_at_zero()
            except PoleAtZero:
                return Verdict(
                    "fail",
                    f"pole at t=0 in constant ({i},{j})^{k}",
                    {"position": (i, j, k)},
                )
            out.append(val)
        if any(out):
            limit[(i, j)] = tuple(out)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            want = tgt.products.get((i, j), (Fraction(0),) * n)
            got = limit.get((i, j), (Fraction(0),) * n)
            if want != got:
                k = next(
                    idx + 1 for idx in range(n) if want[idx] != got[idx]
                )
                return Verdict(
                    "fail",
                    f"limit constant ({i},{j})^{k} is {got[k - 1]}, "
                    f"target has {want[k - 1]}",
                    {"position": (i, j, k)},
                )
    return Verdict("pass")


# --- closed sets ----------------------------------------------------------


@dataclass(frozen=True)
class ClosedSetSpec:
    """Conditions lambda(V_i, V_j) in V_k over the standard flag.

    Each triple (i, j, k) has 1 <= i, j <= n and 1 <= k <= n + 1, where
    V_{n+1} = 0; such sets are stable under flag-preserving (lower
    triangular) transformations.
    """

    triples: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "triples", tuple(tuple(int(x) for x in t) for t in self.triples)
        )


def closed_set_member(a: StructureTensor, spec: ClosedSetSpec) -> bool:
    n = a.dim
    for (i, j, k) in spec.triples:
        cut = min(k - 1, n)  # k = n+1 forbids every component
        for (p, q), vec in a.products.items():
            hit = (p >= i and q >= j) or (q >= i and p >= j)
            if hit and any(vec[:cut]):
                return False
    return True


def random_anticommutative(dim: int, rng: random.Random, spread: int = 3) -> StructureTensor:
    table = {}
    for i in range(1, dim):
        for j in range(i + 1, dim + 1):
            vec = tuple(Fraction(rng.randint(-spread, spread)) for _ in range(dim))
            if any(vec):
                table[(i, j)] = vec
    return StructureTensor(dim, table)


def project_to_spec(a: StructureTensor, spec: ClosedSetSpec) -> StructureTensor:
    """Zero out exactly the coefficients the flag conditions forbid."""
    n = a.dim
    table = {}
    for (p, q), vec in a.products.items():
        vec = list(vec)
        for (i, j, k) in spec.triples:
            if (p >= i and q >= j) or (q >= i and p >= j):
                cut = n if k == n + 1 else k - 1
                for r in range(cut):
                    vec[r] = Fraction(0)
        if any(vec):
            table[(p, q)] = tuple(vec)
    return StructureTensor(n, table)


def random_lower_triangular(dim: int, rng: random.Random) -> Matrix:
    """Random flag-preserving basis: row i lives in <e_i, ..., e_n>."""
    rows = []
    for i in range(dim):
        row = [Fraction(0)] * dim
        row[i] = Fraction(rng.choice([x for x in range(-3, 4) if x]))
        for k in range(i + 1, dim):
            row[k] = Fraction(rng.randint(-3, 3))
        rows.append(row)
    return Matrix(rows)


def lower_triangular_invariance_probe(
    spec, dim: int, samples: int = 100, seed: int = 0,
    sampler=None, member=None,
) -> Verdict:
    """Probe closure of a set under flag-preserving basis changes.

    For ClosedSetSpec input the sampler projects random structures onto the
    defining linear conditions; a custom (sampler, member) pair can probe
    any candidate set, which the tests use as a negative control.
    """
    rng = random.Random(seed)
    if isinstance(spec, ClosedSetSpec):
        sampler = sampler or (lambda r: project_to_spec(random_anticommutative(dim, r), spec))
        member = member or (lambda t: closed_set_member(t, spec))
    for trial in range(samples):
        tensor = sampler(rng)
        if not member(tensor):
            return Verdict(
                "fail", f"sampler produced a non-member at trial {trial}"
            )
        g = random_lower_triangular(dim, rng)
        moved = change_basis(tensor, g)
        if not member(moved):
            return Verdict(
                "fail",
                f"membership lost under a flag-preserving change at trial {trial}",
                {"tensor": tensor.to_json_obj(), "basis": [[str(x) for x in row] for row in g.entries]},
            )
    return Verdict("pass")


# --- the bespoke closed set R of the seven-dimensional analysis -----------

_R_FLAG_CONDITIONS = (
    (1, 7, 8),  # lambda(V, V_7) = 0
    (2, 6, 8),  # lambda(V_2, V_6) = 0
    (3, 5, 8),  # lambda(V_3, V_5) = 0
    (1, 4, 7),  # lambda(V, V_4) in V_7
    (2, 3, 6),  # lambda(V_2, V_3) in V_6
    (1, 3, 5),  # lambda(V, V_3) in V_5
    (1, 1, 4),  # lambda(V, V) in V_4
)

# quadratic relations as (monomial, monomial, sign) with monomials (i,j,k):
# sum over entries of sign * l_{i,j}^k * l_{p,q}^r must vanish
_R_QUADRATICS = (
    (((1, 2, 4), (3, 4, 7), 1), ((2, 3, 6), (1, 6, 7), -1)),
    (((1, 2, 4), (3, 4, 7), 1), ((1, 3, 5), (2, 5, 7), 1)),
    (((1, 2, 5), (3, 4, 7), 1), ((1, 3, 5), (2, 4, 7), -1)),
    (((1, 2, 5), (2, 5, 7), 1), ((1, 2, 4), (2, 4, 7), 1)),
    (((2, 3, 6), (1, 5, 7), 1), ((1, 3, 6), (2, 5, 7), -1)),
    (((1, 3, 6), (1, 6, 7), 1), ((1, 3, 5), (1, 5, 7), 1)),
    (((2, 3, 6), (1, 4, 7), 1), ((1, 3, 6), (2, 4, 7), -1), ((1, 2, 6), (3, 4, 7), 1)),
)


def ex222_membership(a: StructureTensor) -> bool:
    """Exact membership in the bespoke lower-triangular-stable set R.

    Only defined in dimension 7: flag containments plus seven quadratic
    relations between structure constants.
    """
    if a.dim != 7:
        raise ValueError("the set R lives in dimension 7")
    if not closed_set_member(a, ClosedSetSpec(_R_FLAG_CONDITIONS)):
        return False
    for relation in _R_QUADRATICS:
        acc = Fraction(0)
        for (m1, m2, sign) in relation:
            acc += sign * a.constant(*m1) * a.constant(*m2)
        if acc != 0:
            return False
    return True


def random_invertible(dim: int, rng: random.Random, spread: int = 5) -> Matrix:
    while True:
        rows = [
            [Fraction(rng.randint(-spread, spread)) for _ in range(dim)]
            for _ in range(dim)
        ]
        m = Matrix(rows)
        try:
            invert(m)
        except Singular:
            continue
        return m


def randomized_orbit_refute(
    b: StructureTensor, member, trials: int, seed: int
) -> Verdict:
    """Sample the orbit of b for members of a closed set.

    refutation_not_found is evidence, never proof, that the orbit misses
    the set; a hit refutes the emptiness claim and returns the basis.
    """
    rng = random.Random(seed)
    for trial in range(trials):
        g = random_invertible(b.dim, rng)
        moved = change_basis(b, g)
        if member(moved):
            return Verdict(
                "refuted",
                f"orbit member found in the set at trial {trial}",
                {"basis": [[str(x) for x in row] for row in g.entries]},
            )
    return Verdict(
        "refutation_not_found",
        f"no orbit sample of {trials} landed in the set (falsification only)",
    )


# --- non-degeneration witnesses -------------------------------------------

WITNESS_KINDS = (
    "DimSquare",
    "AnnDim",
    "IWDominance",
    "LieClosure",
    "ClosedSet",
    "BespokeR",
)


@dataclass(frozen=True)
class NonDegenerationWitness:
    kind: str
    source: AlgebraRef
    target: AlgebraRef
    payload: dict = field(default_factory=dict)
    provenance: str = ""
    witness_id: str = ""

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise UnknownKind(f"unknown witness kind {self.kind!r}")


def verify_nondegeneration(
    w: NonDegenerationWitness, trials: int = 200, seed: int = 0
) -> Verdict:
    """Tiered verdict for one non-degeneration witness.

    DimSquare / AnnDim / IWDominance / LieClosure are proofs built on
    closed invariants; ClosedSet / BespokeR prove the source side with a
    stored basis and only falsify the target side by orbit sampling.
    """
    src = w.source.resolve()
    tgt = w.target.resolve()
    if w.kind == "DimSquare":
        ds, dt = dim_square(src), dim_square(tgt)
        if ds < dt:
            return Verdict("proved", f"dim source^2 = {ds} < {dt} = dim target^2")
        return Verdict("refuted", f"dim source^2 = {ds} >= {dt} = dim target^2")
    if w.kind == "AnnDim":
        ds, dt = annihilator(src).dim, annihilator(tgt).dim
        if ds > dt:
            return Verdict("proved", f"dim Ann(source) = {ds} > {dt} = dim Ann(target)")
        return Verdict("refuted", f"dim Ann(source) = {ds} <= {dt} = dim Ann(target)")
    if w.kind == "LieClosure":
        js = identity_flags(src).jacobi
        jt = identity_flags(tgt).jacobi
        if js and not jt:
            return Verdict("proved", "source is Lie, target is not")
        return Verdict("refuted", f"jacobi(source)={js}, jacobi(target)={jt}")
    if w.kind == "IWDominance":
        element = tuple(Fraction(x) for x in w.payload["element"])
        _, witness_vec = iw_max(src, seed=seed)
        src_seq = rank_sequence(src, witness_vec)
        tgt_seq = rank_sequence(tgt, element)
        if not dominates(src_seq, tgt_seq):
            return Verdict(
                "proved",
                f"IW-max sequence {tuple(src_seq)} does not dominate "
                f"target sequence {tuple(tgt_seq)}",
            )
        return Verdict("refuted", "source IW-max dominates the target element")
    if w.kind in ("ClosedSet", "BespokeR"):
        if w.kind == "ClosedSet":
            spec = ClosedSetSpec(tuple(tuple(t) for t in w.payload["triples"]))
            member = lambda t: closed_set_member(t, spec)  # noqa: E731
        else:
            member = ex222_membership
        witness_rows = w.payload.get("source_basis")
        if witness_rows:
            rows = [parse_basis_row(r, src.dim) for r in witness_rows]
            const_rows = [[x.eval_at_zero() for x in row] for row in rows]
            moved = change_basis(src, Matrix(const_rows))
        else:
            moved = src
        if not member(moved):
            return Verdict("refuted", "stored source basis does not land in the set")
        verdict = randomized_orbit_refute(tgt, member, trials, seed)
        if verdict.status == "refuted":
            return Verdict(
                "refuted",
                "target orbit meets the set: " + verdict.reason,
                verdict.data,
            )
        return Verdict(
            "refutation_not_found",
            f"source meets the set; {trials} target orbit samples all miss it",
        )
    raise UnknownKind(w.kind)
