#!/usr/bin/env python3
"""Regenerate the golden files under tests/golden/ from the CLI.

Run after any intentional change to builders, analysis or serialization;
the golden tests compare byte for byte.
"""

import pathlib
import sys

from epimodal.cli import main

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"

MODELS = {
    "fr": "fr_model.json",
    "pr": "pr_model.json",
    "wigner-compat": "wigner_compat_model.json",
    "wigner-incompat": "wigner_incompat_model.json",
}

REPORTS = {
    "fr": "fr_report.json",
    "pr": "pr_report.json",
    "wigner-incompat": "wigner_incompat_report.json",
}

BUNDLES = {
    "fr": "fr_bundle.dot",
    "pr": "pr_bundle.dot",
}


def run():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, filename in MODELS.items():
        code = main(["builtin", name, "--out", str(GOLDEN / filename)])
        assert code == 0, (name, code)
    for name, filename in REPORTS.items():
        main([
            "analyze", str(GOLDEN / MODELS[name]),
            "--out", str(GOLDEN / filename),
        ])
    for name, filename in BUNDLES.items():
        code = main([
            "bundle", str(GOLDEN / MODELS[name]),
            "--out", str(GOLDEN / filename),
        ])
        assert code == 0, (name, code)
    print(f"rewrote {len(MODELS) + len(REPORTS) + len(BUNDLES)} files in {GOLDEN}")


if __name__ == "__main__":
    sys.exit(run())
