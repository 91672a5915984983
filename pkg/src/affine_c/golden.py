"""Loading and canonical serialization of the shipped reference tables."""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

__all__ = [
    "GOLDEN_ENV", "FILES", "GoldenError", "GoldenTable", "golden_dir", "load_tables",
    "dumps", "checksum_drift",
]

GOLDEN_ENV = "AFFINE_C_GOLDEN_DIR"
FILES = {"pp": "appendix_a.json", "qfun": "appendix_b.json", "pfun": "appendix_c.json"}
MANIFEST = "MANIFEST.json"


class GoldenError(FileNotFoundError):
    pass


@dataclass
class GoldenTable:
    """One reference table.

    For ``pp`` tables the rows are generator indices and each row maps words to
    coefficients.  For ``qfun`` and ``pfun`` tables the rows are words and each
    row lists integers aligned with ``columns`` (partition strings).
    """
    kind: str
    n: int
    rows: dict
    degree: int | None = None
    columns: list[str] | None = None

    def to_json(self) -> dict:
        out = {"n": self.n, "rows": self.rows}
        if self.kind != "pp":
            out.update(degree=self.degree, columns=self.columns)
        return out


def golden_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(GOLDEN_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("affine_c") / "golden"))


def dumps(obj) -> str:
    """Canonical text: sorted keys, one-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _read(path: Path) -> str:
    if not path.is_file():
        raise GoldenError(f"missing golden file {path}")
    return path.read_text()


def load_tables(kind: str, directory: str | os.PathLike | None = None) -> list[GoldenTable]:
    if kind not in FILES:
        raise ValueError(f"unknown table kind {kind!r}")
    data = json.loads(_read(golden_dir(directory) / FILES[kind]))
    if data.get("kind") != kind:
        raise ValueError(f"{FILES[kind]} holds kind {data.get('kind')!r}")
    return [GoldenTable(kind, t["n"], t["rows"], t.get("degree"), t.get("columns"))
            for t in data["tables"]]


def checksum_drift(directory: str | os.PathLike | None = None) -> list[str]:
    """Names of golden files whose sha256 differs from the recorded manifest."""
    base = golden_dir(directory)
    path = base / MANIFEST
    if not path.is_file():
        return [MANIFEST]
    recorded = json.loads(path.read_text())["sha256"]
    drift = []
    for name, digest in sorted(recorded.items()):
        f = base / name
        if not f.is_file() or hashlib.sha256(f.read_bytes()).hexdigest() != digest:
            drift.append(name)
    return drift
