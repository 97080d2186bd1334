"""Regenerate the shipped data files from the in-package generators.

Run from the repository root:  python tools/make_ledger.py
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, "src")

from degenlab.paperdata import build_ledger
from degenlab.catalog import build_manifest

DATA = Path("src/degenlab/data")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    ledger = build_ledger()
    (DATA / "ledger.json").write_text(
        json.dumps(ledger, indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )
    manifest = build_manifest()
    (DATA / "manifest.json").write_text(
        json.dumps(manifest, indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"ledger: {len(ledger['certificates'])} certificates, "
          f"{len(ledger['witnesses'])} witnesses, "
          f"{len(ledger['chains'])} chains")
    print(f"manifest: {len(manifest['families'])} families")


if __name__ == "__main__":
    main()
