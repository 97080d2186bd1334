import random
from fractions import Fraction

import pytest

from degenlab.algebra import StructureTensor
from degenlab.catalog import instantiate
from degenlab.contraction import (
    NotASubalgebra,
    RankSequence,
    dominates,
    iw_contract,
    iw_max,
    rank_sequence,
)
from degenlab.linalg import Partition


def e_vec(n, *idx):
    return tuple(Fraction(int(k + 1 in idx)) for k in range(n))


def test_rank_sequence_examples():
    a = instantiate("T32", 6)
    assert rank_sequence(a, e_vec(6, 1)) == RankSequence((3, 1))
    assert rank_sequence(a, (0,) * 6) == RankSequence(())
    b = instantiate("T2222", 9)
    assert rank_sequence(b, e_vec(9, 1)) == RankSequence((4,))


def test_dominates_examples():
    assert not dominates(RankSequence((3, 1)), RankSequence((2, 2)))
    assert dominates(RankSequence((3, 1)), RankSequence(()))
    assert not dominates(RankSequence((4,)), RankSequence((3, 1)))
    assert not dominates(RankSequence((3, 1)), RankSequence((4,)))


def test_iw_contract_fixes_already_contracted_table():
    a = instantiate("T22", 5)
    assert iw_contract(a, 1) == a


def test_iw_contract_keeps_mixed_products_and_kills_doubly_scaled_ones():
    # one scaled argument and a scaled output cancel: the product survives
    # (this is why the Heisenberg algebras contract onto a single pair)
    eta1 = StructureTensor.from_pairs(3, [(1, 2, 3)])
    assert iw_contract(eta1, 1) == eta1
    # a product with both arguments in the complement picks up a net factor
    # of t and dies in the limit
    eta2 = instantiate("eta2", 5)
    assert iw_contract(eta2, 1) == StructureTensor.from_pairs(5, [(1, 2, 5)])


def test_iw_contract_zero_algebra():
    z = StructureTensor.zero_algebra(4)
    assert iw_contract(z, 2) == z


def test_iw_contract_requires_a_subalgebra():
    # <e1, e2> is not closed in the Heisenberg table
    with pytest.raises(NotASubalgebra):
        iw_contract(StructureTensor.from_pairs(3, [(1, 2, 3)]), 2)


def test_iw_contract_output_shape():
    a = instantiate("T3_e23", 5)
    chi = iw_contract(a, 1)
    assert chi == instantiate("T3", 5)
    # complement has zero square inside the contraction
    for (i, j) in chi.products:
        assert i == 1


def test_iw_max_examples():
    a = instantiate("T22_e45", 7)
    part, witness = iw_max(a, seed=5)
    assert part == Partition((2, 2))
    assert rank_sequence(a, witness) == RankSequence((2,))

    z = StructureTensor.zero_algebra(5)
    assert iw_max(z, seed=5)[0] == Partition((1, 1, 1, 1))

    t4e = instantiate("T4_e23", 5)
    assert iw_max(t4e, seed=5)[0] == Partition((4,))


def test_iw_max_perturbation_closure():
    # r_m(c + alpha b) >= max(r_m(b), r_m(c)) for some small alpha
    rng = random.Random(9)
    for key, n in (("T32_e23", 6), ("T222_e24", 7)):
        a = instantiate(key, n)
        for _ in range(10):
            b = tuple(Fraction(rng.randint(-9, 9)) for _ in range(n))
            c = tuple(Fraction(rng.randint(-9, 9)) for _ in range(n))
            sb, sc = rank_sequence(a, b), rank_sequence(a, c)
            found = False
            for alpha in range(1, 21):
                mixed = tuple(x + alpha * y for x, y in zip(c, b))
                sm = rank_sequence(a, mixed)
                if dominates(sm, sb) and dominates(sm, sc):
                    found = True
                    break
            assert found


def test_iw_max_witness_dominates_pool_members():
    rng = random.Random(33)
    a = instantiate("T322", 8)
    part, witness = iw_max(a, seed=12)
    assert part == Partition((3, 2, 2))
    top = rank_sequence(a, witness)
    for _ in range(30):
        v = tuple(Fraction(rng.randint(-9, 9)) for _ in range(8))
        assert dominates(top, rank_sequence(a, v))


def test_iw_contract_complement_is_an_abelian_ideal():
    # every IW contraction is a trivial singular extension: the scaled
    # complement has zero square, and the subalgebra block is unchanged
    for key, n, m in (("T22_e24", 6, 1), ("T222_e7special", 7, 1),
                      ("T4_e23", 5, 1)):
        a = instantiate(key, n)
        chi = iw_contract(a, m)
        for (i, j), _ in chi.products.items():
            assert i <= m  # no product with both factors in the complement
        for (i, j), vec in a.products.items():
            if j <= m:
                assert chi.products.get((i, j)) == vec


def test_rank_sequence_not_engel():
    from degenlab.contraction import NotEngelAt

    bad = StructureTensor(3, {(1, 2): (0, 1, 0)})  # e1e2 = e2, idempotent-ish
    with pytest.raises(NotEngelAt):
        rank_sequence(bad, (Fraction(1), Fraction(0), Fraction(0)))
