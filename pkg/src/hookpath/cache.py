"""Optional on-disk cache of descent-polynomial floor tables.

Set HOOKPATH_CACHE_DIR to enable it.  One versioned JSON file per (p, k, floor);
files with another version are ignored and rebuilt.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .eulerian import eulerian_dp
from .poly import IntPolynomial

CACHE_VERSION = 1
ENV_VAR = "HOOKPATH_CACHE_DIR"


def cache_dir() -> Path | None:
    raw = os.environ.get(ENV_VAR)
    return Path(raw) if raw else None


def _path(root: Path, p: int, k: int, floor: int) -> Path:
    return root / f"floor-p{p}-k{k}-f{floor}.json"


def floor_table(p: int, k: int, floor: int) -> dict[int, IntPolynomial]:
    """Polynomials for every class-k vertex on a floor, read from or written to the cache."""
    root = cache_dir()
    if root is not None:
        path = _path(root, p, k, floor)
        try:
            data = json.loads(path.read_text())
            if data.get("version") == CACHE_VERSION and (data["p"], data["k"], data["floor"]) == (p, k, floor):
                return {int(l): IntPolynomial(c) for l, c in data["by_l"].items()}
        except (OSError, ValueError, KeyError):
            pass
    table = eulerian_dp(p, k, floor)
    if root is not None:
        root.mkdir(parents=True, exist_ok=True)
        payload = {"version": CACHE_VERSION, "p": p, "k": k, "floor": floor, "by_l": {str(l): c.to_json() for l, c in table.items()}}
        _path(root, p, k, floor).write_text(json.dumps(payload, sort_keys=True))
    return table
