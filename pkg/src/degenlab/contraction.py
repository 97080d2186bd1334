"""Inonu-Wigner contractions and the dominant one-dimensional contraction.

The rank sequence r_m(x) = rank((L_x)^m) of an element controls which
one-dimensional contractions dominate which: IW_x dominates IW_y exactly
when r_m(x) >= r_m(y) for every m.  That criterion is imported as a fact;
this module computes rank sequences exactly and searches for a dominant
witness over a deterministic, seeded candidate pool (basis vectors, pair
sums, and 64 random integer vectors).  Generic ranks are attained away
from a proper closed subset, so rational sampling finds the dominant
sequence; incomparable sampled maxima are repaired by the c + alpha*b
perturbation trick, and failure to repair is reported loudly because the
theory says it cannot happen for Engel input.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import StructureTensor, left_mult_matrix
from .linalg import Partition, power_rank_sequence


class NotEngelAt(ValueError):
    """An element whose left-multiplication operator is not nilpotent."""

    def __init__(self, element, message=None):
        self.element = tuple(element)
        super().__init__(message or f"L_a is not nilpotent at a = {self.element}")


class NotASubalgebra(ValueError):
    """IW contraction asked with respect to a span that is not closed."""


class IncomparableMaxima(RuntimeError):
    """Sampled maximal rank sequences could not be made comparable."""


class RankSequence(tuple):
    """Weakly decreasing positive ranks (r_1, r_2, ...) truncated at zero."""

    def __new__(cls, ranks=()):
        ranks = tuple(int(r) for r in ranks)
        if 0 in ranks:
            ranks = ranks[: ranks.index(0)]
        if any(ranks[i] < ranks[i + 1] for i in range(len(ranks) - 1)):
            raise ValueError(f"ranks must be weakly decreasing: {ranks}")
        return super().__new__(cls, ranks)

    def rank_at(self, m: int) -> int:
        """r_m with missing entries read as zero (m is 1-based)."""
        return self[m - 1] if 1 <= m <= len(self) else 0

    def __repr__(self):
        return f"RankSequence{tuple(self)}"


def rank_sequence(a: StructureTensor, vec) -> RankSequence:
    """Exact rank sequence of L_vec; NotEngelAt when it never vanishes."""
    mat = left_mult_matrix(a, vec)
    ranks = power_rank_sequence(mat, a.dim + 1)
    if len(ranks) > a.dim:
        raise NotEngelAt(vec)
    return RankSequence(ranks)


def dominates(p: RankSequence, q: RankSequence) -> bool:
    """True iff p_m >= q_m for every m (missing entries are zero)."""
    if len(q) > len(p):
        return False
    return all(p[i] >= q[i] for i in range(len(q)))


def iw_contract(a: StructureTensor, m: int) -> StructureTensor:
    """IW contraction with respect to the subalgebra <e_1, ..., e_m>.

    The result keeps the subalgebra block and the high components of the
    mixed products; everything else is scaled away by the t-limit.
    """
    n = a.dim
    if not (1 <= m < n):
        raise ValueError("need 1 <= m < n")
    for (i, j), vec in a.products.items():
        if j <= m and any(vec[m:]):
            raise NotASubalgebra(
                f"e{i}e{j} leaves the span of the first {m} coordinates"
            )
    table = {}
    for (i, j), vec in a.products.items():
        if j <= m:
            kept = vec
        elif i <= m < j:
            kept = (Fraction(0),) * m + vec[m:]
        else:
            continue
        if any(kept):
            table[(i, j)] = kept
    return StructureTensor(n, table)


def _candidate_pool(a: StructureTensor, seed: int, random_count: int = 64):
    n = a.dim
    rng = random.Random(seed)
    pool = []
    for i in range(n):
        pool.append(tuple(Fraction(int(i == k)) for k in range(n)))
    for i in range(n):
        for j in range(i + 1, n):
            pool.append(tuple(Fraction(int(k in (i, j))) for k in range(n)))
    for _ in range(random_count):
        pool.append(tuple(Fraction(rng.randint(-9, 9)) for _ in range(n)))
    return pool, rng


def iw_max(a: StructureTensor, seed: int = 0, trials: int = 20):
    """Dominant one-dimensional IW contraction as (Partition, witness).

    The partition is read off the dominant rank sequence through
    r_m = sum_i max(lambda_i - m, 0); parts of size one are invisible to
    that duality, so the label carries only parts >= 2 except for the zero
    sequence, which is reported as the all-ones partition of the quotient.
    """
    pool, rng = _candidate_pool(a, seed)
    best_vec = pool[0]
    best_seq = rank_sequence(a, best_vec)
    for vec in pool[1:]:
        seq = rank_sequence(a, vec)
        if dominates(best_seq, seq):
            continue
        if dominates(seq, best_seq):
            best_vec, best_seq = vec, seq
            continue
        repaired = False
        for _ in range(trials):
            alpha = Fraction(rng.randint(1, 99))
            cand = tuple(b + alpha * v for b, v in zip(best_vec, vec))
            cand_seq = rank_sequence(a, cand)
            if dominates(cand_seq, best_seq) and dominates(cand_seq, seq):
                best_vec, best_seq = cand, cand_seq
                repaired = True
                break
        if not repaired:
            raise IncomparableMaxima(
                f"maxima {best_seq} and {seq} stayed incomparable after "
                f"{trials} perturbations; input is not Engel or pool too small"
            )
    return partition_from_rank_sequence(best_seq, a.dim), best_vec


def partition_from_rank_sequence(seq: RankSequence, dim: int) -> Partition:
    """Partition label of a contraction with rank sequence seq.

    Duality determines the parts >= 2 only; the zero sequence labels the
    abelian contraction and is rendered as 1^(dim-1) (the zero operator on
    the quotient by the witness line).
    """
    if not seq:
        return Partition((1,) * (dim - 1)) if dim > 1 else Partition()
    rs = list(seq) + [0]
    diffs = [rs[i] - rs[i + 1] for i in range(len(rs) - 1)]
    # diffs[m-2] equals #parts >= m (m >= 2); the part count itself equals
    # #parts >= 2 because 1-parts are invisible to the duality
    conj = [diffs[0]] + diffs
    conj = [c for c in conj if c > 0]
    if any(conj[i] < conj[i + 1] for i in range(len(conj) - 1)):
        raise ValueError(f"not a rank sequence of a nilpotent operator: {seq}")
    return Partition(conj).conjugate()


def rank_sequence_of_partition(partition: Partition, depth: int = None) -> RankSequence:
    """Rank sequence realized by a nilpotent operator of the given type."""
    if not partition:
        return RankSequence()
    top = partition[0]
    ranks = [partition.rank_at(m) for m in range(1, (depth or top) + 1)]
    return RankSequence(ranks)
