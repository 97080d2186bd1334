"""Ledger loading and the one-shot verification run.

The ledger is a JSON file with three sections: degeneration certificates,
non-degeneration witnesses, and level chains.  Loading validates the
referential invariants (chains reference existing certificates with
matching endpoints and the stated length; no ordered pair carries both a
certificate and a witness).  Running the ledger re-verifies everything and
emits a deterministic report: same seed, same bytes.

Verdict statuses are kept tier-honest:

  VERIFIED    exact certificate check passed
  PROVED      invariant-tier witness check passed
  FALSIFIED-ONLY  closed-set emptiness supported by sampling, not proof
  PAPER-ASSERTED  a non-isomorphism recorded on the source's authority
  FAIL        anything that did not check out

Beside each verified certificate the runner re-checks the closed monotone
invariants (square dimension down, annihilator dimension up, rank-sequence
dominance of the dominant contractions), so a bad table or basis cannot
slip through as a formally passing entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import (
    StructureTensor,
    annihilator,
    dim_square,
    engel_degree,
    identity_flags,
    is_nilpotent,
    power_ideal,
    product,
    subspace_product,
)
from .catalog import classify_T22, level_lookup, PreconditionViolated
from .contraction import dominates, iw_max, rank_sequence
from .degeneration import (
    AlgebraRef,
    ClosedSetSpec,
    DegenerationCertificate,
    NonDegenerationWitness,
    lower_triangular_invariance_probe,
    verify_degeneration,
    verify_nondegeneration,
)
from .linalg import Matrix, Subspace, kernel_basis, rank


class ParseError(ValueError):
    """Ledger file does not parse or misses required fields."""


class InconsistentLedger(ValueError):
    """Ledger violates a referential invariant."""


@dataclass(frozen=True)
class Chain:
    chain_id: str
    algebra: str
    dim: int
    expected_level: int
    edges: tuple


@dataclass
class ClaimLedger:
    certificates: list
    witnesses: list
    chains: list
    path: str = ""

    def cert_by_id(self, cid: str) -> DegenerationCertificate:
        return self._index[cid]

    def __post_init__(self):
        self._index = {c.cert_id: c for c in self.certificates}


def _ref_from_json(obj) -> AlgebraRef:
    try:
        name, dim = obj["name"], int(obj["dim"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad algebra reference {obj!r}") from exc
    products = None
    if "products" in obj:
        products = tuple(
            (int(r["i"]), int(r["j"]), tuple(Fraction(str(x)) for x in r["value"]))
            for r in obj["products"]
        )
    return AlgebraRef(name, dim, products)


def _ref_to_json(ref: AlgebraRef):
    out = {"name": ref.name, "dim": ref.dim}
    if ref.products is not None:
        out["products"] = [
            {"i": i, "j": j, "value": [_frac_json(x) for x in vec]}
            for (i, j, vec) in ref.products
        ]
    return out


def _frac_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ledger_from_obj(obj, path: str = "") -> ClaimLedger:
    if not isinstance(obj, dict) or "certificates" not in obj:
        raise ParseError("ledger object lacks a certificates section")
    certs = []
    for rec in obj.get("certificates", []):
        try:
            certs.append(DegenerationCertificate(
                source=_ref_from_json(rec["source"]),
                target=_ref_from_json(rec["target"]),
                basis_rows=tuple(rec["basis"]),
                provenance=rec.get("provenance", ""),
                proper=rec.get("proper"),
                separator=rec.get("separator"),
                cert_id=rec["id"],
            ))
        except KeyError as exc:
            raise ParseError(f"certificate record missing {exc}") from exc
    witnesses = []
    for rec in obj.get("witnesses", []):
        try:
            witnesses.append(NonDegenerationWitness(
                kind=rec["kind"],
                source=_ref_from_json(rec["source"]),
                target=_ref_from_json(rec["target"]),
                payload=rec.get("payload", {}),
                provenance=rec.get("provenance", ""),
                witness_id=rec["id"],
            ))
        except KeyError as exc:
            raise ParseError(f"witness record missing {exc}") from exc
    chains = []
    for rec in obj.get("chains", []):
        chains.append(Chain(
            chain_id=rec["id"], algebra=rec["algebra"], dim=int(rec["dim"]),
            expected_level=int(rec["expected_level"]),
            edges=tuple(rec["edges"]),
        ))
    ledger = ClaimLedger(certs, witnesses, chains, path)
    _validate(ledger)
    return ledger


def load_ledger(path) -> ClaimLedger:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read ledger {path}: {exc}") from exc
    return ledger_from_obj(obj, str(path))


def _validate(ledger: ClaimLedger):
    ids = set()
    for c in ledger.certificates:
        if c.cert_id in ids:
            raise InconsistentLedger(f"duplicate certificate id {c.cert_id}")
        ids.add(c.cert_id)
    cert_pairs = {
        (c.source.label, c.target.label) for c in ledger.certificates
    }
    for w in ledger.witnesses:
        pair = (w.source.label, w.target.label)
        if pair in cert_pairs:
            raise InconsistentLedger(
                f"pair {pair[0]} -> {pair[1]} carries both a certificate "
                f"and witness {w.witness_id}"
            )
    index = {c.cert_id: c for c in ledger.certificates}
    for ch in ledger.chains:
        if len(ch.edges) != ch.expected_level:
            raise InconsistentLedger(
                f"{ch.chain_id}: {len(ch.edges)} edges != level "
                f"{ch.expected_level}"
            )
        level = level_lookup(ch.algebra, ch.dim).level
        if level.exact != ch.expected_level:
            raise InconsistentLedger(
                f"{ch.chain_id}: expected level {ch.expected_level} but the "
                f"catalog says {level}"
            )
        prev = f"{ch.algebra}@{ch.dim}"
        for eid in ch.edges:
            cert = index.get(eid)
            if cert is None:
                raise InconsistentLedger(f"{ch.chain_id}: unknown edge {eid}")
            if cert.source.label != prev:
                raise InconsistentLedger(
                    f"{ch.chain_id}: edge {eid} starts at {cert.source.label},"
                    f" expected {prev}"
                )
            if cert.proper is not True:
                raise InconsistentLedger(
                    f"{ch.chain_id}: edge {eid} is not flagged non-trivial"
                )
            prev = cert.target.label
        if not prev.startswith("zero@"):
            raise InconsistentLedger(
                f"{ch.chain_id}: chain ends at {prev}, not the zero algebra"
            )


# --- separating invariants -------------------------------------------------


def _nilindex(a: StructureTensor):
    flag, idx = is_nilpotent(a)
    return idx if flag else None


def _centralizer_square_dim(a: StructureTensor) -> int:
    square = power_ideal(a, 2)
    if square.dim == 0:
        return a.dim
    n = a.dim
    rows = []
    basis = [tuple(Fraction(int(i == k)) for k in range(n)) for i in range(n)]
    for w in square.basis:
        for k in range(n):
            rows.append([product(a, basis[i], w)[k] for i in range(n)])
    return kernel_basis(Matrix(rows)).dim


def _pfaffian_conic_profile(a: StructureTensor):
    """(span dim, quadric rank) of the degree-2 Pfaffian ideal piece.

    Defined for algebras with A * A^2 = 0: the products induce a net of
    skew forms on A/A^2 indexed by a basis of A^2; the rank-two locus of
    the net is cut out by the 4x4 principal Pfaffians, homogeneous
    quadrics whose span (and, when it is a single quadric, its rank) is a
    GL-invariant.
    """
    square = power_ideal(a, 2)
    s = square.dim
    n = a.dim
    if s == 0 or subspace_product(a, Subspace.full(n), square).dim != 0:
        return None
    pivots = [next(i for i, x in enumerate(row) if x) for row in square.basis]
    lift = [i for i in range(n) if i not in pivots]
    d = len(lift)
    basis_vecs = []
    for idx in lift:
        v = [Fraction(0)] * n
        v[idx] = Fraction(1)
        basis_vecs.append(tuple(v))
    # forms[r][i][j]: coefficient of the r-th square coordinate in u_i u_j
    forms = [[[Fraction(0)] * d for _ in range(d)] for _ in range(s)]
    for i in range(d):
        for j in range(i + 1, d):
            p = product(a, basis_vecs[i], basis_vecs[j])
            for r, piv in enumerate(pivots):
                c = p[piv]
                forms[r][i][j] = c
                forms[r][j][i] = -c
    monomials = [(r, q) for r in range(s) for q in range(r, s)]
    quad_rows = []
    for sub in combinations(range(d), 4):
        i, j, k, l = sub
        coeffs = {}

        def add_quad(r, q, value, coeffs=coeffs):
            key = (min(r, q), max(r, q))
            coeffs[key] = coeffs.get(key, Fraction(0)) + value

        for ((a1, b1), (a2, b2), sign) in (
            ((i, j), (k, l), 1), ((i, k), (j, l), -1), ((i, l), (j, k), 1),
        ):
            for r in range(s):
                x = forms[r][a1][b1]
                if not x:
                    continue
                for q in range(s):
                    y = forms[q][a2][b2]
                    if y:
                        add_quad(r, q, sign * x * y)
        row = [coeffs.get(mono, Fraction(0)) for mono in monomials]
        if any(row):
            quad_rows.append(row)
    if not quad_rows:
        return (0, None)
    span = Subspace.from_vectors(len(monomials), quad_rows)
    if span.dim != 1:
        return (span.dim, None)
    gen = span.basis[0]
    sym = [[Fraction(0)] * s for _ in range(s)]
    for (r, q), c in zip(monomials, gen):
        if r == q:
            sym[r][r] = c
        else:
            sym[r][q] = sym[q][r] = c / 2
    return (1, rank(Matrix(sym)))


def _classifier_label(a: StructureTensor):
    try:
        res = classify_T22(a)
    except PreconditionViolated:
        return "outside-T22-scope"
    return getattr(res, "key", repr(res))


def separator_check(kind: str, src: StructureTensor, tgt: StructureTensor,
                    seed: int = 0):
    """Certify src != tgt as isomorphism classes by a named invariant."""
    if kind == "paper":
        return None, "non-isomorphism recorded on the source material's authority"
    funcs = {
        "dim_square": dim_square,
        "ann_dim": lambda t: annihilator(t).dim,
        "nilindex": _nilindex,
        "engel_degree": lambda t: engel_degree(t, t.dim + 1),
        "jacobi": lambda t: identity_flags(t).jacobi,
        "centralizer_square": _centralizer_square_dim,
        "pfaffian_conic": _pfaffian_conic_profile,
        "classifier": _classifier_label,
        "iw_partition": lambda t: tuple(iw_max(t, seed=seed)[0]),
    }
    if kind not in funcs:
        raise ValueError(f"unknown separator {kind!r}")
    a, b = funcs[kind](src), funcs[kind](tgt)
    return a != b, f"{kind}: source {a}, target {b}"


# --- the run ----------------------------------------------------------------


MONOTONE_SEED_TRIALS = 20


def _monotone_audit(src: StructureTensor, tgt: StructureTensor, seed: int,
                    iw_cache: dict):
    """Closed-invariant sanity for a passing certificate src -> tgt."""
    problems = []
    ds, dt = dim_square(src), dim_square(tgt)
    if ds < dt:
        problems.append(f"dim square grows: {ds} -> {dt}")
    as_, at = annihilator(src).dim, annihilator(tgt).dim
    if as_ > at:
        problems.append(f"annihilator shrinks: {as_} -> {at}")

    def iw_seq(tensor):
        key = id(tensor)
        if key not in iw_cache:
            _, w = iw_max(tensor, seed=seed)
            iw_cache[key] = rank_sequence(tensor, w)
        return iw_cache[key]

    if not dominates(iw_seq(src), iw_seq(tgt)):
        problems.append("dominant rank sequence not monotone")
    return problems


def run_ledger(ledger: ClaimLedger, seed: int = 0, trials: int = 200,
               dims=None) -> dict:
    """Verify every claim; returns the report as a JSON-ready dict."""
    dims = set(dims) if dims else None

    def in_scope(dim):
        return dims is None or dim in dims

    cert_reports = []
    cert_status = {}
    resolved = {}
    iw_cache = {}
    for cert in ledger.certificates:
        if not in_scope(cert.source.dim):
            continue
        verdict = verify_degeneration(cert)
        entry = {
            "id": cert.cert_id,
            "source": cert.source.label,
            "target": cert.target.label,
            "provenance": cert.provenance,
            "status": "VERIFIED" if verdict.ok else "FAIL",
            "reason": verdict.reason,
        }
        if verdict.ok:
            src = resolved.setdefault(cert.source.label, cert.source.resolve())
            tgt = resolved.setdefault(cert.target.label, cert.target.resolve())
            problems = _monotone_audit(src, tgt, seed, iw_cache)
            if problems:
                entry["status"] = "FAIL"
                entry["reason"] = "; ".join(problems)
            elif cert.proper:
                ok, detail = separator_check(cert.separator, src, tgt, seed)
                if ok is None:
                    entry["nontrivial"] = "PAPER-ASSERTED"
                elif ok:
                    entry["nontrivial"] = "PROVED"
                    entry["separator"] = detail
                else:
                    entry["status"] = "FAIL"
                    entry["reason"] = f"separator failed: {detail}"
        cert_status[cert.cert_id] = entry["status"]
        cert_reports.append(entry)

    witness_reports = []
    probes_needed = {}
    for w in ledger.witnesses:
        if not in_scope(w.source.dim):
            continue
        verdict = verify_nondegeneration(w, trials=trials, seed=seed)
        tier1 = w.kind in ("DimSquare", "AnnDim", "IWDominance", "LieClosure")
        if verdict.status == "proved":
            status = "PROVED"
        elif verdict.status == "refutation_not_found":
            status = "FALSIFICATION-ONLY"
        else:
            status = "FAIL"
        witness_reports.append({
            "id": w.witness_id,
            "kind": w.kind,
            "source": w.source.label,
            "target": w.target.label,
            "provenance": w.provenance,
            "tier": "invariant" if tier1 else "closed-set",
            "status": status,
            "reason": verdict.reason,
        })
        if w.kind == "ClosedSet":
            key = (tuple(tuple(t) for t in w.payload["triples"]), w.source.dim)
            probes_needed.setdefault(key, w.witness_id)

    probe_reports = []
    for (triples, dim), owner in sorted(probes_needed.items()):
        verdict = lower_triangular_invariance_probe(
            ClosedSetSpec(triples), dim, samples=100, seed=seed
        )
        probe_reports.append({
            "triples": [list(t) for t in triples],
            "dim": dim,
            "first_witness": owner,
            "status": "PASS" if verdict.ok else "FAIL",
            "reason": verdict.reason,
        })

    chain_reports = []
    for ch in ledger.chains:
        if not in_scope(ch.dim):
            continue
        edge_status = [cert_status.get(eid, "SKIPPED") for eid in ch.edges]
        ok = all(s == "VERIFIED" for s in edge_status)
        chain_reports.append({
            "id": ch.chain_id,
            "algebra": ch.algebra,
            "dim": ch.dim,
            "expected_level": ch.expected_level,
            "edges": list(ch.edges),
            "status": "VERIFIED" if ok else "FAIL",
        })

    composed = _composed_edges(ledger, cert_status, in_scope)

    counts = {}
    for entry in cert_reports:
        counts[entry["status"]] = counts.get(entry["status"], 0) + 1
    for entry in witness_reports:
        counts[entry["status"]] = counts.get(entry["status"], 0) + 1
    fails = (
        [e for e in cert_reports if e["status"] == "FAIL"]
        + [e for e in witness_reports if e["status"] == "FAIL"]
        + [e for e in chain_reports if e["status"] == "FAIL"]
        + [e for e in probe_reports if e["status"] == "FAIL"]
    )
    return {
        "ledger": ledger.path,
        "seed": seed,
        "trials": trials,
        "dims": sorted(dims) if dims else None,
        "certificates": cert_reports,
        "witnesses": witness_reports,
        "closed_set_probes": probe_reports,
        "chains": chain_reports,
        "composed": composed,
        "summary": {
            "counts": dict(sorted(counts.items())),
            "failures": len(fails),
        },
    }


def _composed_edges(ledger, cert_status, in_scope):
    """Transitive arrows implied by two verified certificates."""
    by_dim = {}
    for cert in ledger.certificates:
        if cert_status.get(cert.cert_id) != "VERIFIED" or not cert.proper:
            continue
        if not in_scope(cert.source.dim):
            continue
        by_dim.setdefault(cert.source.dim, []).append(
            (cert.source.label, cert.target.label, cert.cert_id)
        )
    direct = {
        (s, t) for edges in by_dim.values() for (s, t, _) in edges
    }
    composed = []
    for dim in sorted(by_dim):
        edges = by_dim[dim]
        outgoing = {}
        for (s, t, cid) in edges:
            outgoing.setdefault(s, []).append((t, cid))
        for (s, t, cid) in edges:
            for (t2, cid2) in outgoing.get(t, []):
                if (s, t2) not in direct and s != t2:
                    composed.append({
                        "dim": dim, "source": s, "target": t2,
                        "via": [cid, cid2],
                    })
    seen = set()
    unique = []
    for entry in composed:
        key = (entry["source"], entry["target"])
        if key not in seen:
            seen.add(key)
            unique.append(entry)
    return unique


def report_to_json_bytes(report: dict) -> bytes:
    return json.dumps(report, indent=2, sort_keys=True).encode("utf-8") + b"\n"


def hasse_dot(report: dict, dim: int) -> str:
    """DOT digraph of verified (solid) and composed (dashed) arrows."""
    lines = [f'digraph "degenerations_dim{dim}" {{', "  rankdir=TB;"]
    nodes = set()
    edges = []
    for entry in report["certificates"]:
        if entry["status"] != "VERIFIED":
            continue
        src, tgt = entry["source"], entry["target"]
        if not src.endswith(f"@{dim}"):
            continue
        nodes.add(src)
        nodes.add(tgt)
        style = "solid" if entry.get("nontrivial") else "solid, color=gray"
        edges.append(f'  "{src}" -> "{tgt}" [style="{style}"];')
    for entry in report["composed"]:
        if entry["dim"] != dim:
            continue
        nodes.add(entry["source"])
        nodes.add(entry["target"])
        edges.append(
            f'  "{entry["source"]}" -> "{entry["target"]}" [style=dashed];'
        )
    for node in sorted(nodes):
        lines.append(f'  "{node}";')
    lines.extend(sorted(edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def shipped_ledger_path() -> str:
    import importlib.resources as resources

    return str(resources.files("degenlab").joinpath("data/ledger.json"))
