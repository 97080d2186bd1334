"""Dev tool: run every generated certificate/witness and report failures."""

import sys
import time

sys.path.insert(0, "src")

from degenlab.paperdata import certificates, witnesses, chains
from degenlab.degeneration import (
    AlgebraRef,
    DegenerationCertificate,
    NonDegenerationWitness,
    verify_degeneration,
    verify_nondegeneration,
)


def ref_from(obj):
    products = None
    if "products" in obj:
        products = tuple(
            (rec["i"], rec["j"], tuple(rec["value"])) for rec in obj["products"]
        )
    return AlgebraRef(obj["name"], obj["dim"], products)


def main():
    t0 = time.time()
    bad = 0
    certs = certificates()
    for entry in certs:
        cert = DegenerationCertificate(
            source=ref_from(entry["source"]),
            target=ref_from(entry["target"]),
            basis_rows=tuple(entry["basis"]),
            provenance=entry["provenance"],
        )
        v = verify_degeneration(cert)
        if v.status != "pass":
            bad += 1
            print(f"FAIL {entry['id']}: {v.reason} {v.data}")
    print(f"certificates: {len(certs)} checked, {bad} failing "
          f"({time.time() - t0:.1f}s)")

    t0 = time.time()
    badw = 0
    ws = witnesses()
    for entry in ws:
        w = NonDegenerationWitness(
            kind=entry["kind"],
            source=ref_from(entry["source"]),
            target=ref_from(entry["target"]),
            payload=entry["payload"],
            provenance=entry["provenance"],
        )
        v = verify_nondegeneration(w, trials=20, seed=11)
        expected = "proved" if entry["kind"] not in ("ClosedSet", "BespokeR") \
            else "refutation_not_found"
        if v.status != expected:
            badw += 1
            print(f"WITNESS {entry['id']}: {v.status} {v.reason}")
    print(f"witnesses: {len(ws)} checked, {badw} unexpected "
          f"({time.time() - t0:.1f}s)")

    ids = {c["id"] for c in certs}
    badc = 0
    for ch in chains():
        missing = [e for e in ch["edges"] if e not in ids]
        if missing:
            badc += 1
            print(f"CHAIN {ch['id']}: missing edges {missing}")
        if len(ch["edges"]) != ch["expected_level"]:
            badc += 1
            print(f"CHAIN {ch['id']}: length {len(ch['edges'])} != "
                  f"level {ch['expected_level']}")
    print(f"chains: {len(chains())} checked, {badc} broken")


if __name__ == "__main__":
    main()
