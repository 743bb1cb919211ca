"""A fixed suite of CLI runs whose outputs form a certificate directory.

Inputs are generated first (``inputs/*.json``), then every check reads them
through ``--in`` and writes its certificate.  Two runs of the suite must
produce byte-identical directories.
"""
from __future__ import annotations

import contextlib
import io
from pathlib import Path
from typing import Dict, List, Tuple

INPUTS: List[Tuple[str, List[str]]] = [
    ("chain0", ["corpus", "poset-chain", "--n", "0"]),
    ("chain1", ["corpus", "poset-chain", "--n", "1"]),
    ("chain2", ["corpus", "poset-chain", "--n", "2"]),
    ("chain3", ["corpus", "poset-chain", "--n", "3"]),
    ("square", ["corpus", "square"]),
    ("iso3", ["corpus", "iso-groupoid", "--cap", "3"]),
    ("pair", ["corpus", "homotopic-pair", "--cap", "4"]),
    ("iota-trunc", ["corpus", "iota-trunc"]),
    ("adjunction", ["corpus", "adjunction", "--name", "iota-trunc"]),
    ("gcd", ["corpus", "divisor-diagram", "--n", "12", "--objects", "4,6"]),
    ("meet", ["corpus", "divisor-diagram", "--n", "12", "--shape", "cospan", "--objects", "4,6,12"]),
]

# (certificate, argv with {name} input placeholders, expected status)
CHECKS: List[Tuple[str, List[str], str]] = [
    ("qcat-chain3", ["check", "qcat", "--in", "{chain3}", "--cap", "4"], "verified"),
    ("qcat-square", ["check", "qcat", "--in", "{square}", "--cap", "3"], "verified"),
    ("qcat-pair", ["check", "qcat", "--in", "{pair}"], "verified"),
    ("kan-iso3", ["check", "kan", "--in", "{iso3}"], "verified"),
    ("kan-chain1", ["check", "kan", "--in", "{chain1}", "--cap", "2"], "refuted"),
    ("isofib-trunc", ["check", "isofib", "--in", "{iota-trunc}", "--map", "trunc", "--cap", "3"], "verified"),
    ("trivfib-trunc", ["check", "trivfib", "--in", "{iota-trunc}", "--map", "trunc", "--cap", "3"], "refuted"),
    ("terminal-chain2", ["terminal", "--in", "{chain2}"], "verified"),
    ("initial-chain2", ["terminal", "--in", "{chain2}", "--initial"], "verified"),
    ("terminal-square", ["terminal", "--in", "{square}"], "verified"),
    ("terminal-pair", ["terminal", "--in", "{pair}"], "verified"),
    ("hcat-pair", ["hcat", "--in", "{pair}"], "verified"),
    ("homcat-chain1", ["homcat", "--in", "{chain1}", "--x", "chain1", "--a", "chain1"], "verified"),
    ("smother-cotensor2-chain2", ["smother", "cotensor2", "--in", "{chain2}"], "verified"),
    ("smother-comma-iota", ["smother", "comma", "--in", "{iota-trunc}", "--f", "iota", "--g", "id"], "verified"),
    ("retraction-1-1", ["retraction", "--n", "1", "--m", "1"], "verified"),
    ("compare-s-1-0", ["compare-s", "--in", "{chain1}", "--in", "{chain0}", "--x", "chain1", "--y", "chain0"],
     "verified"),
    ("adjoint-verify", ["adjoint", "verify", "--in", "{adjunction}", "--f", "f", "--u", "u"], "verified"),
    ("adjoint-search", ["adjoint", "search", "--in", "{iota-trunc}", "--f", "iota", "--u", "trunc"], "verified"),
    ("lifting-right", ["lifting", "--in", "{iota-trunc}", "--f", "iota", "--g", "id", "--cap", "3"], "verified"),
    ("lifting-left", ["lifting", "--in", "{iota-trunc}", "--f", "iota", "--g", "id", "--left", "--cap", "3"],
     "refuted"),
    ("limit-gcd", ["limit", "--in", "{gcd}"], "verified"),
    ("colimit-lcm", ["colimit", "--in", "{gcd}"], "verified"),
    ("limit-meet", ["limit", "--in", "{meet}"], "verified"),
]


def _run(argv: List[str]) -> int:
    from .cli import main
    with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
        return main(argv)


def _status(path: Path) -> str:
    import json
    return json.loads(path.read_text(encoding="utf-8"))["status"]


def write_suite(directory) -> Dict[str, str]:
    """Write inputs and certificates under ``directory``; map each certificate to its status.

    A certificate whose status differs from the expected one is reported as
    ``"<status> (expected <status>)"``.
    """
    root = Path(directory)
    (root / "inputs").mkdir(parents=True, exist_ok=True)
    paths = {}
    for name, argv in INPUTS:
        p = root / "inputs" / f"{name}.json"
        _run(argv + ["--out", str(p)])
        paths[name] = str(p)
    out = {}
    for name, argv, expected in CHECKS:
        p = root / f"{name}.json"
        _run([a.format(**paths) if a.startswith("{") else a for a in argv] + ["--out", str(p)])
        got = _status(p) if p.exists() else "missing"
        out[name] = got if got == expected else f"{got} (expected {expected})"
        if p.exists():
            q = root / "replay" / f"{name}.json"
            _run(["replay", "--in", str(p), "--out", str(q)])
            out[f"replay/{name}"] = _status(q) if q.exists() else "missing"
    return out
