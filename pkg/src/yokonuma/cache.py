"""On-disk cache of Schur-algebra structure constants.

Files are named by a content hash of (format version, r, n, M, flavor,
extended) and carry the same key in a header; a header mismatch or an
unreadable file counts as a miss and the table is recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .schur import SchurAlgebra

FORMAT_VERSION = 1
ENV_VAR = "YOKONUMA_CACHE_DIR"


class CacheCorrupt(ValueError):
    pass


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path.home() / ".cache" / "yokonuma"


def cache_key(A: SchurAlgebra) -> dict:
    Y = A.Y
    return {
        "format": FORMAT_VERSION,
        "r": Y.r,
        "n": Y.n,
        "M": Y.field.order,
        "flavor": A.flavor,
        "extended": A.extended,
    }


def cache_path(A: SchurAlgebra, directory: Path) -> Path:
    key = json.dumps(cache_key(A), sort_keys=True)
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    return Path(directory) / f"schur-{digest}.json"


def save(A: SchurAlgebra, directory: Path) -> Path:
    path = cache_path(A, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"key": cache_key(A), "constants": A.constants_to_json()}
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload, sort_keys=True))
    tmp.replace(path)
    return path


def read(A: SchurAlgebra, directory: Path) -> dict:
    """The cached constant table for A; raises CacheCorrupt on any mismatch."""
    path = cache_path(A, directory)
    try:
        payload = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheCorrupt(str(exc)) from exc
    if payload.get("key") != cache_key(A):
        raise CacheCorrupt(f"key mismatch in {path}")
    return payload["constants"]


def load_or_compute(A: SchurAlgebra, directory: Path | None) -> bool:
    """Fill A's structure constants from the cache, computing and saving them on a miss.

    Returns True on a cache hit.
    """
    if directory is None:
        A.constants()
        return False
    if cache_path(A, directory).exists():
        try:
            A.load_constants(read(A, directory))
            return True
        except (CacheCorrupt, KeyError, ValueError):
            pass
    A.constants()
    save(A, directory)
    return False
