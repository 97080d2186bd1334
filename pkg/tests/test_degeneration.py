import random
from fractions import Fraction

import pytest

from degenlab.algebra import StructureTensor, change_basis
from degenlab.catalog import instantiate
from degenlab.degeneration import (
    AlgebraRef,
    ClosedSetSpec,
    DegenerationCertificate,
    NonDegenerationWitness,
    ParameterizedBasis,
    SingularFamily,
    apply_parameterized_basis,
    closed_set_member,
    ex222_membership,
    lower_triangular_invariance_probe,
    parse_basis_row,
    randomized_orbit_refute,
    random_anticommutative,
    verify_degeneration,
    verify_nondegeneration,
)
from degenlab.exactnum import parse_rational_function as parse
from degenlab.linalg import Matrix


def test_parse_basis_row_shapes():
    row = parse_basis_row("(1/t)*e5 - (1/t^2)*e7", 7)
    assert row[4] == parse("1/t")
    assert row[6] == parse("-1/t^2")
    assert all(x.is_zero() for i, x in enumerate(row) if i not in (4, 6))
    row = parse_basis_row("-e2-e5", 6)
    assert row[1] == parse("-1") and row[4] == parse("-1")
    row = parse_basis_row("2*t^4*e3", 4)
    assert row[2] == parse("2*t^4")


def test_apply_identity_keeps_constants():
    a = instantiate("T32_e23", 6)
    constants = apply_parameterized_basis(a, ParameterizedBasis.identity(6))
    assert set(constants) == set(a.products)
    for key, vec in constants.items():
        evaluated = tuple(x.eval_at_zero() for x in vec)
        assert evaluated == a.products[key]


def test_apply_single_scaling_pushes_constant_into_t():
    a = instantiate("n3", 3)
    basis = ParameterizedBasis(3, ["t*e1", "e2", "e3"])
    constants = apply_parameterized_basis(a, basis)
    assert constants[(1, 2)][2] == parse("t")


def test_apply_rejects_singular_families():
    a = instantiate("n3", 3)
    with pytest.raises(SingularFamily):
        apply_parameterized_basis(
            a, ParameterizedBasis(3, ["e1+e2", "e1+e2", "e3"])
        )


def test_verify_identity_certificate():
    cert = DegenerationCertificate(
        source=AlgebraRef("T22_e45", 7),
        target=AlgebraRef("T22_e45", 7),
        basis_rows=tuple(f"e{k}" for k in range(1, 8)),
    )
    assert verify_degeneration(cert).status == "pass"


def test_verify_pole_is_a_failure_verdict():
    cert = DegenerationCertificate(
        source=AlgebraRef("n3", 3),
        target=AlgebraRef("n3", 3),
        basis_rows=("(1/t)*e1", "e2", "e3"),
    )
    verdict = verify_degeneration(cert)
    assert verdict.status == "fail"
    assert "pole" in verdict.reason
    assert verdict.data["position"] == (1, 2, 3)


def test_verify_paper_arrow_with_limit_mismatch_detected():
    cert = DegenerationCertificate(
        source=AlgebraRef("T22_e34", 6),
        target=AlgebraRef("T22_e23", 6),  # wrong target on purpose
        basis_rows=("e1", "e2+e3", "t*e3", "t*e4", "e5+e6", "t*e6"),
    )
    verdict = verify_degeneration(cert)
    assert verdict.status == "fail"
    assert "target has" in verdict.reason


def test_closed_set_member_examples():
    z = StructureTensor.zero_algebra(5)
    assert closed_set_member(z, ClosedSetSpec(((1, 1, 4), (2, 3, 6))))
    a = instantiate("T22", 5)
    assert closed_set_member(a, ClosedSetSpec(((1, 1, 4),)))
    b = instantiate("T22_e23", 6)
    assert not closed_set_member(b, ClosedSetSpec(((1, 1, 5),)))


def test_lower_triangular_probe_passes_on_flag_specs():
    spec = ClosedSetSpec(((1, 1, 4), (2, 3, 7)))
    verdict = lower_triangular_invariance_probe(spec, dim=6, samples=60, seed=4)
    assert verdict.ok


def test_lower_triangular_probe_negative_control():
    # head-span condition: products must lie in <e1>; this is NOT stable
    # under flag-preserving transformations and the probe must notice
    def sampler(rng):
        tensor = random_anticommutative(4, rng)
        table = {}
        for (i, j), vec in tensor.products.items():
            kept = (vec[0],) + (Fraction(0),) * 3
            if any(kept):
                table[(i, j)] = kept
        return StructureTensor(4, table)

    def member(tensor):
        return all(
            not any(vec[1:]) for vec in tensor.products.values()
        )

    verdict = lower_triangular_invariance_probe(
        None, dim=4, samples=60, seed=4, sampler=sampler, member=member
    )
    assert verdict.status == "fail"


def test_witness_dim_square_proved():
    w = NonDegenerationWitness(
        kind="DimSquare",
        source=AlgebraRef("T22_e24", 6),
        target=AlgebraRef("T22_e23", 6),
    )
    verdict = verify_nondegeneration(w)
    assert verdict.status == "proved"
    assert "2 < 3" in verdict.reason


def test_witness_ann_dim_proved():
    w = NonDegenerationWitness(
        kind="AnnDim",
        source=AlgebraRef("T22_e23", 6),
        target=AlgebraRef("T22_e24", 6),
    )
    assert verify_nondegeneration(w).status == "proved"


def test_witness_lie_closure_proved():
    w = NonDegenerationWitness(
        kind="LieClosure",
        source=AlgebraRef("T32_e23", 6),
        target=AlgebraRef("T3_e34", 6),
    )
    assert verify_nondegeneration(w).status == "proved"


def test_witness_refuted_when_invariant_goes_the_wrong_way():
    w = NonDegenerationWitness(
        kind="DimSquare",
        source=AlgebraRef("T22_e23", 6),
        target=AlgebraRef("T22_e24", 6),
    )
    assert verify_nondegeneration(w).status == "refuted"


def test_witness_iw_dominance():
    w = NonDegenerationWitness(
        kind="IWDominance",
        source=AlgebraRef("T22", 5),
        target=AlgebraRef("T3", 5),
        payload={"element": [1, 0, 0, 0, 0]},
    )
    assert verify_nondegeneration(w, seed=3).status == "proved"


def test_ex222_membership_examples():
    special = instantiate("T222_e7special", 7)
    perm = [0, 1, 2, 4, 5, 3, 6]
    rows = [[Fraction(int(j == perm[i])) for j in range(7)] for i in range(7)]
    assert ex222_membership(change_basis(special, Matrix(rows)))
    assert ex222_membership(StructureTensor.zero_algebra(7))
    assert not ex222_membership(instantiate("T22_e45", 7))


def test_randomized_orbit_refute_finds_planted_member():
    special = instantiate("T222_e7special", 7)
    verdict = randomized_orbit_refute(
        special, ex222_membership, trials=400, seed=8
    )
    # the orbit of the special structure does meet R; sampling may or may
    # not find it, but a found basis must be a genuine membership witness
    if verdict.status == "refuted":
        rows = [[Fraction(x) for x in row] for row in verdict.data["basis"]]
        assert ex222_membership(change_basis(special, Matrix(rows)))


def test_randomized_orbit_refute_misses_for_e45():
    verdict = randomized_orbit_refute(
        instantiate("T22_e45", 7), ex222_membership, trials=60, seed=8
    )
    assert verdict.status == "refutation_not_found"


def test_bespoke_witness_runs_both_sides():
    w = NonDegenerationWitness(
        kind="BespokeR",
        source=AlgebraRef("T222_e7special", 7),
        target=AlgebraRef("T222_e24", 7),
        payload={"source_basis": ["e1", "e2", "e3", "e5", "e6", "e4", "e7"]},
    )
    verdict = verify_nondegeneration(w, trials=40, seed=6)
    assert verdict.status == "refutation_not_found"


def test_random_anticommutative_is_reproducible():
    a = random_anticommutative(5, random.Random(99))
    b = random_anticommutative(5, random.Random(99))
    assert a == b
