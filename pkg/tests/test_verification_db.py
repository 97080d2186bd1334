import copy
import json

import pytest

from degenlab.catalog import instantiate
from degenlab.verification_db import (
    InconsistentLedger,
    ParseError,
    _pfaffian_conic_profile,
    hasse_dot,
    ledger_from_obj,
    load_ledger,
    report_to_json_bytes,
    run_ledger,
    separator_check,
    shipped_ledger_path,
)


def shipped_obj():
    with open(shipped_ledger_path(), encoding="utf-8") as fh:
        return json.load(fh)


def test_shipped_ledger_loads_with_enough_claims():
    ledger = load_ledger(shipped_ledger_path())
    assert len(ledger.certificates) >= 25
    assert len(ledger.witnesses) >= 20
    assert len(ledger.chains) == 25


def test_empty_ledger_is_vacuously_consistent():
    ledger = ledger_from_obj({"certificates": [], "witnesses": [], "chains": []})
    report = run_ledger(ledger, seed=1, trials=5)
    assert report["summary"]["failures"] == 0


def test_contradictory_pair_is_rejected():
    obj = shipped_obj()
    cert = next(c for c in obj["certificates"] if c["id"] == "T22deg.2.6")
    witness = {
        "id": "W.bogus",
        "kind": "DimSquare",
        "source": cert["source"],
        "target": cert["target"],
        "payload": {},
        "provenance": "synthetic contradiction",
    }
    obj = copy.deepcopy(obj)
    obj["witnesses"].append(witness)
    with pytest.raises(InconsistentLedger):
        ledger_from_obj(obj)


def test_chain_length_must_match_catalog_level():
    obj = copy.deepcopy(shipped_obj())
    chain = next(c for c in obj["chains"] if c["algebra"] == "T22_e45")
    chain["edges"] = chain["edges"][:-1]
    chain["expected_level"] = 4
    with pytest.raises(InconsistentLedger):
        ledger_from_obj(obj)


def test_parse_error_on_garbage(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        load_ledger(path)


def test_corrupted_entry_is_isolated():
    obj = copy.deepcopy(shipped_obj())
    for cert in obj["certificates"]:
        if cert["id"] == "T22deg.1.7":
            cert["basis"][4] = "t*e5"  # wrong slot scaled
    ledger = ledger_from_obj(obj)
    report = run_ledger(ledger, seed=3, trials=5, dims=[7])
    statuses = {e["id"]: e["status"] for e in report["certificates"]}
    assert statuses["T22deg.1.7"] == "FAIL"
    others = [v for k, v in statuses.items() if k != "T22deg.1.7"]
    assert all(s == "VERIFIED" for s in others)
    chains = {c["id"]: c["status"] for c in report["chains"]}
    assert chains["chain.T22_e45.7"] == "FAIL"
    assert chains["chain.T222_e24.7"] == "VERIFIED"


def test_report_determinism_same_seed_same_bytes():
    ledger = load_ledger(shipped_ledger_path())
    r1 = run_ledger(ledger, seed=9, trials=10, dims=[6])
    r2 = run_ledger(ledger, seed=9, trials=10, dims=[6])
    assert report_to_json_bytes(r1) == report_to_json_bytes(r2)


def test_hasse_dot_contains_solid_and_declared_nodes():
    ledger = load_ledger(shipped_ledger_path())
    report = run_ledger(ledger, seed=2, trials=5, dims=[5])
    dot = hasse_dot(report, 5)
    assert '"T4@5" -> "T3@5"' in dot
    assert '"n3@5" -> "zero@5"' in dot
    assert "digraph" in dot


def test_separator_battery():
    src = instantiate("T22_e24", 6)
    tgt = instantiate("T22_e23", 6)
    ok, detail = separator_check("dim_square", src, tgt)
    assert ok and "2" in detail and "3" in detail
    ok, _ = separator_check("classifier", src, instantiate("T22_e34", 6))
    assert ok
    same = instantiate("T22_e24", 6)
    ok, _ = separator_check("dim_square", src, same)
    assert not ok
    assert separator_check("paper", src, tgt)[0] is None


def test_pfaffian_conic_profile_distinguishes_the_three_block_pair():
    e23 = _pfaffian_conic_profile(instantiate("T222_e23", 7))
    e24 = _pfaffian_conic_profile(instantiate("T222_e24", 7))
    plain = _pfaffian_conic_profile(instantiate("T222", 7))
    assert e23 == (1, 1)
    assert e24 == (1, 2)
    assert plain == (0, None)
    assert len({e23, e24, plain}) == 3


def test_transitivity_audit_reports_composed_arrows():
    ledger = load_ledger(shipped_ledger_path())
    report = run_ledger(ledger, seed=4, trials=5, dims=[7, 8])
    composed = {(e["source"], e["target"]) for e in report["composed"]}
    # two-step arrows implied by the verified ladder
    assert ("T22_e45@7", "T22_e24@7") in composed
    # the stabilized form of the seven-dimensional exceptional structure
    # does reach the five-level three-block member one dimension up
    assert ("T2k2_special_m3@8", "T222_e24@8") in composed
