"""Disk cache for the heavy one-time constructions (structure-constant tables
and Killing Gram matrices).

Cache entries are keyed by a fingerprint of the multiplication conventions
(octonion table, coordinate orderings, package version), so stale data can
never be read across a convention change.  Location: $E8KIT_CACHE_DIR or
~/.cache/e8kit.
"""

from __future__ import annotations

import gzip
import hashlib
import json
import os
import pathlib

from .linalg import Matrix
from .rationals import Scalar

_VERSION = "e8kit-cache-1"


def fingerprint() -> str:
    from .octonion import TABLE
    payload = _VERSION + repr(TABLE) + "|jordan:xi,x1,x2,x3|p:X,Y,xi,eta|e7:e6,A,B,nu"
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def cache_dir() -> pathlib.Path:
    root = os.environ.get("E8KIT_CACHE_DIR")
    if root:
        base = pathlib.Path(root)
    else:
        base = pathlib.Path.home() / ".cache" / "e8kit"
    return base / fingerprint()


def _path(name: str) -> pathlib.Path:
    return cache_dir() / (name + ".json.gz")


def _enc_vec(v: dict) -> dict:
    return {str(k): c.to_str() for k, c in sorted(v.items())}


def _dec_vec(d: dict) -> dict:
    return {int(k): Scalar.from_str(s) for k, s in d.items()}


def _enc_pairtable(tab: dict) -> list:
    return [[i, j, _enc_vec(v)] for (i, j), v in sorted(tab.items())]


def _dec_pairtable(data: list) -> dict:
    return {(i, j): _dec_vec(v) for i, j, v in data}


def _enc_crosstable(tab: list) -> list:
    n = len(tab)
    return [[i, j, _enc_vec(tab[i][j])] for i in range(n) for j in range(i, n)
            if tab[i][j]]


def _dec_crosstable(data: list) -> list:
    n = 56
    tab = [[{} for _ in range(n)] for _ in range(n)]
    for i, j, v in data:
        dec = _dec_vec(v)
        tab[i][j] = dec
        tab[j][i] = dec
    return tab


_FORMATS = {
    "e7_table": (_enc_pairtable, _dec_pairtable),
    "e8_table": (_enc_pairtable, _dec_pairtable),
    "cross_table": (_enc_crosstable, _dec_crosstable),
}


def load_cached(name: str):
    path = _path(name)
    if not path.exists():
        return None
    try:
        with gzip.open(path, "rt", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    return _FORMATS[name][1](data)


def store_cached(name: str, obj) -> None:
    path = _path(name)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with gzip.open(tmp, "wt", encoding="utf-8") as fh:
        json.dump(_FORMATS[name][0](obj), fh, separators=(",", ":"))
    tmp.replace(path)


def load_cached_matrix(name: str, rows: int, cols: int):
    path = _path(name)
    if not path.exists():
        return None
    try:
        with gzip.open(path, "rt", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    m = Matrix.zeros(rows, cols)
    for i, j, s in data:
        m.set_(i, j, Scalar.from_str(s))
    return m


def store_cached_matrix(name: str, m: Matrix) -> None:
    path = _path(name)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = [[i, j, v.to_str()] for j, col in sorted(m._cols.items())
            for i, v in sorted(col.items())]
    tmp = path.with_suffix(".tmp")
    with gzip.open(tmp, "wt", encoding="utf-8") as fh:
        json.dump(data, fh, separators=(",", ":"))
    tmp.replace(path)
