import random
from fractions import Fraction

import pytest

from degenlab.algebra import (
    DimensionMismatch,
    StructureTensor,
    annihilator,
    change_basis,
    dim_square,
    direct_sum_trivial,
    engel_degree,
    generated_subalgebra,
    identity_flags,
    is_nilpotent,
    left_mult_matrix,
    power_ideal,
    product,
    subspace_product,
)
from degenlab.catalog import instantiate
from degenlab.linalg import Matrix, Subspace, Singular

from oracles import ann_dim_oracle, square_dim_oracle


def e_vec(n, *idx):
    return tuple(Fraction(int(k + 1 in idx)) for k in range(n))


def rand_vec(n, rng, lo=-5, hi=5):
    return tuple(Fraction(rng.randint(lo, hi)) for _ in range(n))


def rand_invertible(n, rng):
    while True:
        m = Matrix([[Fraction(rng.randint(-4, 4)) for _ in range(n)]
                    for _ in range(n)])
        try:
            from degenlab.linalg import invert

            invert(m)
            return m
        except Singular:
            continue


def test_product_examples():
    a = instantiate("T22", 5)
    assert product(a, e_vec(5, 1), e_vec(5, 2)) == e_vec(5, 4)
    rng = random.Random(3)
    v = rand_vec(5, rng)
    assert product(a, v, v) == (0,) * 5
    eta2 = instantiate("eta2", 5)
    got = product(eta2, e_vec(5, 1, 3), e_vec(5, 2, 4))
    assert got == tuple(2 * x for x in e_vec(5, 5))


def test_product_dimension_mismatch():
    a = instantiate("n3", 3)
    with pytest.raises(DimensionMismatch):
        product(a, (1, 0), (0, 1, 0))


def test_subspace_products():
    a = instantiate("T222", 7)
    square = subspace_product(a, Subspace.full(7), Subspace.full(7))
    assert square == Subspace.from_vectors(7, [e_vec(7, 5), e_vec(7, 6), e_vec(7, 7)])
    assert subspace_product(a, Subspace.zero(7), Subspace.full(7)).dim == 0
    eta3 = instantiate("eta3", 7)
    assert subspace_product(eta3, Subspace.full(7), Subspace.full(7)) == \
        Subspace.from_vectors(7, [e_vec(7, 7)])


def test_power_ideals_of_the_four_chain():
    a = instantiate("T4", 5)
    assert power_ideal(a, 1) == Subspace.full(5)
    assert power_ideal(a, 3) == Subspace.from_vectors(5, [e_vec(5, 4), e_vec(5, 5)])
    assert power_ideal(a, 5).dim == 0
    # independent check by repeated span building
    spans = [Subspace.full(5)]
    for _ in range(4):
        spans.append(subspace_product(a, Subspace.full(5), spans[-1]))
    assert [s.dim for s in spans] == [5, 3, 2, 1, 0]


def test_is_nilpotent_examples():
    assert is_nilpotent(StructureTensor.zero_algebra(5)) == (True, 2)
    # the length-four chain dies at the fifth power ideal
    assert is_nilpotent(instantiate("T4", 5)) == (True, 5)
    assert is_nilpotent(instantiate("eta2", 5)) == (True, 3)


def test_annihilator_examples():
    assert annihilator(StructureTensor.zero_algebra(5)).dim == 5
    a = instantiate("T22", 6)
    assert annihilator(a) == Subspace.from_vectors(
        6, [e_vec(6, 4), e_vec(6, 5), e_vec(6, 6)]
    )
    b = instantiate("T22_e23", 6)
    assert annihilator(b) == Subspace.from_vectors(
        6, [e_vec(6, 4), e_vec(6, 5), e_vec(6, 6)]
    )


def test_dims_pin_against_independent_oracle():
    for key, n in (("T22_e24", 6), ("T22_e34", 7), ("T22_e45", 7),
                   ("T222_e7special", 7), ("T32_e23", 6), ("eta3", 7)):
        a = instantiate(key, n)
        assert dim_square(a) == square_dim_oracle(a)
        assert annihilator(a).dim == ann_dim_oracle(a)


def test_identity_flags_examples():
    for m, n in ((2, 5), (3, 7)):
        flags = identity_flags(instantiate(f"eta{m}", n))
        assert flags.jacobi and flags.malcev
    flags = identity_flags(instantiate("T3_e34", 5))
    assert not flags.jacobi and flags.malcev
    flags = identity_flags(instantiate("T222_e7special", 7))
    assert not flags.jacobi and flags.malcev


def test_jacobi_on_random_vectors_agrees_with_basis_decision():
    rng = random.Random(11)
    for key, n in (("T32_e23", 6), ("T3_e34", 5), ("eta2", 5)):
        a = instantiate(key, n)
        expected = identity_flags(a).jacobi
        violating = False
        for _ in range(40):
            x, y, z = (rand_vec(n, rng) for _ in range(3))
            jac = tuple(
                product(a, product(a, x, y), z)[k]
                + product(a, product(a, y, z), x)[k]
                + product(a, product(a, z, x), y)[k]
                for k in range(n)
            )
            if any(jac):
                violating = True
                break
        assert expected == (not violating)


def test_engel_degree_examples():
    assert engel_degree(StructureTensor.zero_algebra(4), 4) == 1
    assert engel_degree(instantiate("eta2", 5), 5) == 2
    assert engel_degree(instantiate("T4", 5), 5) == 4
    assert engel_degree(instantiate("T4_e23", 5), 5) == 4
    assert engel_degree(instantiate("T3", 5), 5) == 3


def test_engel_degree_matches_random_spot_checks():
    rng = random.Random(23)
    for key, n in (("T22_e45", 7), ("T4", 5), ("eta3", 7)):
        a = instantiate(key, n)
        m = engel_degree(a, n)
        assert m is not None
        for _ in range(30):
            v = rand_vec(n, rng)
            mat = left_mult_matrix(a, v)
            power = mat
            for _ in range(m - 1):
                power = power @ mat
            assert power == Matrix.zero(n, n)


def test_change_basis_identity_and_zero():
    a = instantiate("T22_e34", 6)
    assert change_basis(a, Matrix.identity(6)) == a
    z = StructureTensor.zero_algebra(4)
    rng = random.Random(2)
    assert change_basis(z, rand_invertible(4, rng)) == z


def test_change_basis_identifies_two_heisenberg_summands():
    # replacing e1 by e1 + e4 turns the e34-decorated table into two
    # independent pairs
    n = 6
    a = instantiate("T22_e34", n)
    rows = Matrix.identity(n).copy_entries()
    rows[0][3] = Fraction(1)
    moved = change_basis(a, Matrix(rows))
    assert moved == StructureTensor.from_pairs(n, [(1, 2, 5), (3, 4, 6)])


def test_change_basis_invariants():
    rng = random.Random(17)
    for key, n in (("T22_e45", 7), ("T32_e23", 6), ("T222_e7special", 7)):
        a = instantiate(key, n)
        g = rand_invertible(n, rng)
        b = change_basis(a, g)
        assert dim_square(a) == dim_square(b)
        assert annihilator(a).dim == annihilator(b).dim
        assert is_nilpotent(a) == is_nilpotent(b)
        assert engel_degree(a, n) == engel_degree(b, n)
        assert identity_flags(a) == identity_flags(b)


def test_direct_sum_trivial():
    a = instantiate("n3", 3)
    assert direct_sum_trivial(a, 0) == a
    padded = direct_sum_trivial(a, 2)
    assert padded.dim == 5
    assert annihilator(padded).dim == annihilator(a).dim + 2
    # same table at n=5 after moving the product target to the top slot
    rows = Matrix.identity(5).copy_entries()
    rows[2], rows[4] = rows[4], rows[2]
    assert change_basis(padded, Matrix(rows)) == instantiate("n3", 5)


def test_left_mult_matrix_examples():
    a = instantiate("T3", 4)
    mat = left_mult_matrix(a, e_vec(4, 1))
    assert mat.apply(e_vec(4, 2)) == e_vec(4, 3)
    assert mat.apply(e_vec(4, 3)) == e_vec(4, 4)
    assert left_mult_matrix(a, (0,) * 4) == Matrix.zero(4, 4)
    rng = random.Random(31)
    v = rand_vec(4, rng)
    assert left_mult_matrix(a, v).apply(v) == (0,) * 4


def test_one_generated_subalgebras_are_lines():
    rng = random.Random(41)
    for key, n in (("T22_e45", 7), ("eta3", 7), ("T4", 5)):
        a = instantiate(key, n)
        for _ in range(10):
            v = rand_vec(n, rng)
            sub = generated_subalgebra(a, v)
            assert sub.dim <= 1


def test_json_round_trip():
    a = instantiate("T222_e7special", 7)
    again = StructureTensor.from_json_obj(a.to_json_obj())
    assert again == a
    fancy = StructureTensor(3, {(1, 2): (0, 0, Fraction(1, 2))})
    again = StructureTensor.from_json_obj(fancy.to_json_obj())
    assert again == fancy


def test_is_nilpotent_detects_stabilization():
    bad = StructureTensor(3, {(1, 2): (0, 1, 0)})  # powers stabilize at <e2>
    assert is_nilpotent(bad) == (False, None)
